#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "homometry/estimators.hpp"
#include "homometry/sequences.hpp"

namespace homometry {

/// Largest number of weights materialise() will allocate.
inline constexpr std::size_t kMaterialiseCap = std::size_t{1} << 24;

/// Sign flips Y_{(x_1..x_k)} shared by all points agreeing in the first k
/// coordinates.
struct RankFlip {
    std::size_t rank;
    RandomSpec spec;
};

/// Dense weights on a box of Z^d, last coordinate fastest.
struct DenseGrid {
    std::vector<std::int64_t> lo;
    std::vector<std::size_t> shape;
    std::vector<double> weights;

    double at(std::span<const std::int64_t> x) const;
};

/// Weighted comb on Z^d with weight prod_l U^(l)_{x_l}, optionally times a
/// rank-k flip. Weights are evaluated lazily.
class ProductComb {
public:
    ProductComb(std::vector<WeightedComb> factors, std::optional<RankFlip> flip = std::nullopt);

    std::size_t dim() const noexcept { return factors_.size(); }
    const std::vector<WeightedComb>& factors() const noexcept { return factors_; }
    const std::optional<RankFlip>& flip() const noexcept { return flip_; }

    double weight(std::span<const std::int64_t> x) const;
    std::size_t total_size() const noexcept;

    /// Throws DomainError beyond kMaterialiseCap weights.
    DenseGrid materialise() const;

    /// Weights along `axis` through `base` (the axis coordinate of `base` is
    /// ignored), over the full window of that factor.
    WeightedComb line(std::size_t axis, std::span<const std::int64_t> base) const;

private:
    std::vector<WeightedComb> factors_;
    std::optional<RankFlip> flip_;
};

ProductComb product_comb(std::vector<WeightedComb> factors);

/// prod_l empirical_autocorr(factor_l, m_l).
double product_autocorr(std::span<const WeightedComb> factors, std::span<const std::int64_t> m);

struct GridAutocorr {
    double value;
    double raw_sum;
};

/// Direct sum over the materialised box of w_x w_{x-m} (zero outside),
/// normalised by prod_l (2 N_l + 1).
GridAutocorr brute_force_autocorr(const ProductComb& comb, std::span<const std::int64_t> m);

/// Multiplies every weight by Y_{(x_1..x_k)}. k = 0 returns the input.
ProductComb rank_k_bernoullise(const ProductComb& base, std::size_t k, const RandomSpec& spec);

}  // namespace homometry
