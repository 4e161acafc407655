#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace homometry {

enum class Letter : char { a = 'a', b = 'b', c = 'c', d = 'd' };

using Word = std::vector<Letter>;

Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Real weights on the contiguous index window [lo, lo + size).
class WeightedComb {
public:
    WeightedComb() = default;
    WeightedComb(std::int64_t lo, std::vector<double> weights);

    std::int64_t lo() const noexcept { return lo_; }
    /// Last index in the window (inclusive).
    std::int64_t hi() const noexcept { return lo_ + static_cast<std::int64_t>(weights_.size()) - 1; }
    std::size_t size() const noexcept { return weights_.size(); }
    bool empty() const noexcept { return weights_.empty(); }

    /// Smallest N with the window inside [-N, N].
    std::int64_t half_length() const noexcept;

    bool in_window(std::int64_t i) const noexcept { return i >= lo_ && i <= hi(); }
    /// Weight at index i, 0 outside the window.
    double at(std::int64_t i) const noexcept {
        return in_window(i) ? weights_[static_cast<std::size_t>(i - lo_)] : 0.0;
    }

    std::span<const double> weights() const noexcept { return weights_; }

    /// All weights are +1 or -1.
    bool is_binary() const noexcept;

    friend bool operator==(const WeightedComb&, const WeightedComb&) = default;

private:
    std::int64_t lo_ = 0;
    std::vector<double> weights_;
};

/// i.i.d. signs: +1 with probability p, keyed by seed.
struct RandomSpec {
    double p = 0.5;
    std::uint64_t seed = 0;
};

void validate(const RandomSpec& spec);

/// Sign Y_i of the i.i.d. family; a pure function of (seed, index).
int random_sign(const RandomSpec& spec, std::int64_t index);

/// Sign of the family indexed by a k-tuple. For a single index this is
/// random_sign.
int random_sign(const RandomSpec& spec, std::span<const std::int64_t> index);

// Rudin-Shapiro ---------------------------------------------------------------

/// a -> ac, b -> dc, c -> ab, d -> db, applied letterwise.
Word rs_substitute(const Word& w);

/// phi(a) = phi(c) = +1, phi(b) = phi(d) = -1
int rs_letter_sign(Letter l);

/// Two-sided fixed point of the squared substitution grown from the seed
/// b.a, mapped to signs, restricted to [-n, n).
WeightedComb rs_fixed_point(std::int64_t n);

/// Closed form of the same sequence: for k >= 0, (-1)^{e(k)} with e(k) the
/// number of (overlapping) "11" pairs in binary k; for k < 0,
/// (-1)^{e(-k-1) - k}.
int rs_digit_sign(std::int64_t k);

// Random combs ----------------------------------------------------------------

/// i.i.d. +-1 weights on [-n, n).
WeightedComb bernoulli_comb(const RandomSpec& spec, std::int64_t n);

/// Z_i = S_i * Y_i with Y from the same family as bernoulli_comb.
WeightedComb bernoullise(const WeightedComb& s, const RandomSpec& spec);

/// Constant +1 weights on [-n, n).
WeightedComb constant_comb(std::int64_t n, double value = 1.0);

// Limit autocorrelations -------------------------------------------------------

enum class CombKind { bernoulli, rs, bernoullised };

struct AutocorrModel {
    CombKind kind = CombKind::rs;
    double p = 0.5;
    /// Autocorrelation coefficient of the underlying sequence at the
    /// requested lag; only used for bernoullised.
    double base_coefficient = 0.0;
};

/// Limit autocorrelation coefficient at integer lag m.
double theoretical_autocorr(const AutocorrModel& model, std::int64_t m);

/// Binary entropy in nats, with 0 log 0 = 0.
double entropy(double p);

}  // namespace homometry
