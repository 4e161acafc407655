#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "homometry/sequences.hpp"

namespace homometry {

struct AutocorrEstimate {
    std::int64_t m;
    double value;
    std::int64_t N;
    /// Un-normalised sum over i in [-N, N] of Z_i Z_{i-m}.
    double raw_sum;
};

/// (1 / (2N + 1)) * sum_{i=-N}^{N} Z_i Z_{i-m}, N the comb's half-length and
/// weights outside the window taken as 0. Throws if |m| >= window length.
AutocorrEstimate empirical_autocorr(const WeightedComb& s, std::int64_t m);

struct PeriodogramBin {
    double k;
    double value;
};

/// |sum_n w_n exp(-2 pi i k n)|^2 / (window length)
PeriodogramBin periodogram(const WeightedComb& s, double k);

/// Periodogram at k = j / bins, j = 0..bins-1. Folds the comb modulo `bins`
/// before transforming, so the cost is O(size + bins^2).
std::vector<PeriodogramBin> periodogram_grid(const WeightedComb& s, std::size_t bins);

/// Mean of periodogram_grid.
double periodogram_average(const WeightedComb& s, std::size_t bins);

/// Conditional block entropy H_L - H_{L-1} (nats) of the sign pattern, with
/// H_j the plug-in Shannon entropy of overlapping j-blocks. Requires
/// 1 <= L <= 20 and a window of at least 100 * 2^L.
double block_entropy(const WeightedComb& s, std::size_t L);

/// H_L / L with the same block statistics.
double block_entropy_per_symbol(const WeightedComb& s, std::size_t L);

}  // namespace homometry
