#include "homometry/estimators.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "homometry/error.hpp"

namespace homometry {

namespace {

using std::numbers::pi;

// Plug-in entropy (nats) of the overlapping L-blocks of the sign pattern;
// L = 0 gives 0.
double block_shannon(const WeightedComb& s, std::size_t L) {
    if (L == 0) return 0.0;
    const auto w = s.weights();
    const std::size_t mask = (std::size_t{1} << L) - 1;
    std::vector<std::uint64_t> counts(std::size_t{1} << L, 0);
    std::size_t code = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        code = ((code << 1) | (w[i] > 0.0 ? 1u : 0u)) & mask;
        if (i + 1 >= L) ++counts[code];
    }
    const double total = static_cast<double>(w.size() - L + 1);
    double h = 0.0;
    for (auto c : counts) {
        if (c == 0) continue;
        const double q = static_cast<double>(c) / total;
        h -= q * std::log(q);
    }
    return h;
}

void check_block_length(const WeightedComb& s, std::size_t L) {
    if (L < 1 || L > 20) throw DomainError("block length must lie in [1, 20]");
    if (s.size() < (std::size_t{100} << L)) {
        throw DomainError("window too short for block length " + std::to_string(L));
    }
}

}  // namespace

AutocorrEstimate empirical_autocorr(const WeightedComb& s, std::int64_t m) {
    const auto len = static_cast<std::int64_t>(s.size());
    if (std::abs(m) >= len) throw DomainError("lag |m| must be smaller than the window length");
    const std::int64_t n = s.half_length();
    // Restrict to indices where both factors are inside the window.
    const std::int64_t lo = std::max({-n, s.lo(), s.lo() + m});
    const std::int64_t hi = std::min({n, s.hi(), s.hi() + m});
    double sum = 0.0;
    const auto w = s.weights();
    for (std::int64_t i = lo; i <= hi; ++i) {
        sum += w[static_cast<std::size_t>(i - s.lo())] * w[static_cast<std::size_t>(i - m - s.lo())];
    }
    return {m, sum / static_cast<double>(2 * n + 1), n, sum};
}

PeriodogramBin periodogram(const WeightedComb& s, double k) {
    if (s.empty()) throw DomainError("empty comb");
    std::complex<double> acc{0.0, 0.0};
    const auto w = s.weights();
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double n = static_cast<double>(s.lo() + static_cast<std::int64_t>(j));
        double phase = k * n;
        phase -= std::floor(phase);
        acc += w[j] * std::polar(1.0, -2.0 * pi * phase);
    }
    return {k, std::norm(acc) / static_cast<double>(w.size())};
}

std::vector<PeriodogramBin> periodogram_grid(const WeightedComb& s, std::size_t bins) {
    if (s.empty()) throw DomainError("empty comb");
    if (bins == 0) throw DomainError("need at least one frequency bin");
    const auto b = static_cast<std::int64_t>(bins);
    std::vector<double> folded(bins, 0.0);
    const auto w = s.weights();
    for (std::size_t j = 0; j < w.size(); ++j) {
        std::int64_t r = (s.lo() + static_cast<std::int64_t>(j)) % b;
        if (r < 0) r += b;
        folded[static_cast<std::size_t>(r)] += w[j];
    }
    std::vector<PeriodogramBin> out(bins);
    for (std::size_t q = 0; q < bins; ++q) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t r = 0; r < bins; ++r) {
            if (folded[r] == 0.0) continue;
            // (q r) mod bins keeps the phase exact.
            const std::size_t t = (q * r) % bins;
            acc += folded[r] * std::polar(1.0, -2.0 * pi * static_cast<double>(t) / static_cast<double>(bins));
        }
        out[q] = {static_cast<double>(q) / static_cast<double>(bins), std::norm(acc) / static_cast<double>(w.size())};
    }
    return out;
}

double periodogram_average(const WeightedComb& s, std::size_t bins) {
    double sum = 0.0;
    for (const auto& bin : periodogram_grid(s, bins)) sum += bin.value;
    return sum / static_cast<double>(bins);
}

double block_entropy(const WeightedComb& s, std::size_t L) {
    check_block_length(s, L);
    return block_shannon(s, L) - block_shannon(s, L - 1);
}

double block_entropy_per_symbol(const WeightedComb& s, std::size_t L) {
    check_block_length(s, L);
    return block_shannon(s, L) / static_cast<double>(L);
}

}  // namespace homometry
