#include "homometry/sequences.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "homometry/error.hpp"
#include "homometry/philox.hpp"

namespace homometry {

namespace {

Word square_substitute(const Word& w) { return rs_substitute(rs_substitute(w)); }

// Mixes the tail of a multi-index into the key so that indices of any rank
// map to distinct Philox streams.
Philox4x32::Key fold_key(std::uint64_t seed, std::span<const std::int64_t> tail) {
    Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (std::size_t i = 0; i < tail.size(); ++i) {
        const auto v = static_cast<std::uint64_t>(tail[i]);
        const auto out = Philox4x32(key)({static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(v >> 32),
                                          static_cast<std::uint32_t>(i), 0x7A11u});
        key = {out[0], out[1]};
    }
    return key;
}

}  // namespace

Word parse_word(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char ch : text) {
        if (ch < 'a' || ch > 'd') throw DomainError(std::string("letter outside {a,b,c,d}: ") + ch);
        w.push_back(static_cast<Letter>(ch));
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(static_cast<char>(l));
    return s;
}

WeightedComb::WeightedComb(std::int64_t lo, std::vector<double> weights)
    : lo_(lo), weights_(std::move(weights)) {}

std::int64_t WeightedComb::half_length() const noexcept {
    if (weights_.empty()) return 0;
    return std::max({std::int64_t{0}, -lo_, hi()});
}

bool WeightedComb::is_binary() const noexcept {
    return std::all_of(weights_.begin(), weights_.end(), [](double w) { return w == 1.0 || w == -1.0; });
}

void validate(const RandomSpec& spec) {
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw DomainError("probability p must lie in [0, 1]");
}

int random_sign(const RandomSpec& spec, std::int64_t index) {
    const double u = Philox4x32(spec.seed).uniform(static_cast<std::uint64_t>(index));
    return u < spec.p ? 1 : -1;
}

int random_sign(const RandomSpec& spec, std::span<const std::int64_t> index) {
    if (index.empty()) throw DomainError("empty multi-index");
    const std::uint64_t first = static_cast<std::uint64_t>(index[0]);
    if (index.size() == 1) return random_sign(spec, index[0]);
    const std::uint64_t second = static_cast<std::uint64_t>(index[1]);
    const Philox4x32 gen(fold_key(spec.seed, index.subspan(2)));
    // The second word of the counter is non-zero for rank >= 2 streams so
    // they never collide with rank-1 counters (i, 0).
    const double u = gen.uniform(first, second ^ 0x8000000000000000ull);
    return u < spec.p ? 1 : -1;
}

Word rs_substitute(const Word& w) {
    Word out;
    out.reserve(2 * w.size());
    for (Letter l : w) {
        switch (l) {
            case Letter::a: out.insert(out.end(), {Letter::a, Letter::c}); break;
            case Letter::b: out.insert(out.end(), {Letter::d, Letter::c}); break;
            case Letter::c: out.insert(out.end(), {Letter::a, Letter::b}); break;
            case Letter::d: out.insert(out.end(), {Letter::d, Letter::b}); break;
        }
    }
    return out;
}

int rs_letter_sign(Letter l) { return (l == Letter::a || l == Letter::c) ? 1 : -1; }

WeightedComb rs_fixed_point(std::int64_t n) {
    if (n < 1) throw DomainError("comb half-length must be at least 1");
    const auto need = static_cast<std::size_t>(n);
    // sigma^2(a) starts with a and sigma^2(b) ends with b, so both halves
    // are prefix (resp. suffix) consistent under iteration.
    Word right{Letter::a};
    Word left{Letter::b};
    while (right.size() < need) right = square_substitute(right);
    while (left.size() < need) left = square_substitute(left);

    std::vector<double> weights;
    weights.reserve(2 * need);
    for (std::size_t i = left.size() - need; i < left.size(); ++i) weights.push_back(rs_letter_sign(left[i]));
    for (std::size_t i = 0; i < need; ++i) weights.push_back(rs_letter_sign(right[i]));
    return WeightedComb(-n, std::move(weights));
}

int rs_digit_sign(std::int64_t k) {
    const auto pairs = [](std::uint64_t v) { return std::popcount(v & (v >> 1)); };
    if (k >= 0) return (pairs(static_cast<std::uint64_t>(k)) % 2 == 0) ? 1 : -1;
    const auto j = static_cast<std::uint64_t>(-k);
    return ((pairs(j - 1) + j) % 2 == 0) ? 1 : -1;
}

WeightedComb bernoulli_comb(const RandomSpec& spec, std::int64_t n) {
    validate(spec);
    if (n < 1) throw DomainError("comb half-length must be at least 1");
    std::vector<double> weights(static_cast<std::size_t>(2 * n));
    for (std::int64_t i = -n; i < n; ++i) weights[static_cast<std::size_t>(i + n)] = random_sign(spec, i);
    return WeightedComb(-n, std::move(weights));
}

WeightedComb bernoullise(const WeightedComb& s, const RandomSpec& spec) {
    validate(spec);
    if (!s.is_binary()) throw DomainError("bernoullisation needs a binary (+-1) comb");
    std::vector<double> weights(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const std::int64_t i = s.lo() + static_cast<std::int64_t>(k);
        weights[k] = s.weights()[k] * random_sign(spec, i);
    }
    return WeightedComb(s.lo(), std::move(weights));
}

WeightedComb constant_comb(std::int64_t n, double value) {
    if (n < 1) throw DomainError("comb half-length must be at least 1");
    return WeightedComb(-n, std::vector<double>(static_cast<std::size_t>(2 * n), value));
}

double theoretical_autocorr(const AutocorrModel& model, std::int64_t m) {
    if (model.kind != CombKind::rs) validate(RandomSpec{model.p, 0});
    if (m == 0) return 1.0;
    const double bias = (2.0 * model.p - 1.0) * (2.0 * model.p - 1.0);
    switch (model.kind) {
        case CombKind::bernoulli: return bias;
        case CombKind::rs: return 0.0;
        case CombKind::bernoullised: return bias * model.base_coefficient;
    }
    return 0.0;
}

double entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability p must lie in [0, 1]");
    const auto term = [](double q) { return q > 0.0 ? -q * std::log(q) : 0.0; };
    return term(p) + term(1.0 - p);
}

}  // namespace homometry
