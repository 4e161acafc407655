#include "homometry/tensor.hpp"

#include <algorithm>
#include <string>

#include "homometry/error.hpp"

namespace homometry {

double DenseGrid::at(std::span<const std::int64_t> x) const {
    std::size_t offset = 0;
    for (std::size_t l = 0; l < shape.size(); ++l) {
        const std::int64_t r = x[l] - lo[l];
        if (r < 0 || r >= static_cast<std::int64_t>(shape[l])) return 0.0;
        offset = offset * shape[l] + static_cast<std::size_t>(r);
    }
    return weights[offset];
}

ProductComb::ProductComb(std::vector<WeightedComb> factors, std::optional<RankFlip> flip)
    : factors_(std::move(factors)), flip_(flip) {
    if (factors_.empty()) throw DomainError("product comb needs at least one factor");
    for (const auto& f : factors_) {
        if (f.empty()) throw DomainError("empty factor comb");
    }
    if (flip_) {
        validate(flip_->spec);
        if (flip_->rank > factors_.size()) throw DomainError("flip rank exceeds dimension");
        if (flip_->rank == 0) flip_.reset();
    }
}

double ProductComb::weight(std::span<const std::int64_t> x) const {
    if (x.size() != dim()) throw DomainError("index dimension mismatch");
    double w = 1.0;
    for (std::size_t l = 0; l < dim(); ++l) w *= factors_[l].at(x[l]);
    if (flip_ && w != 0.0) w *= random_sign(flip_->spec, x.first(flip_->rank));
    return w;
}

std::size_t ProductComb::total_size() const noexcept {
    std::size_t n = 1;
    for (const auto& f : factors_) n *= f.size();
    return n;
}

DenseGrid ProductComb::materialise() const {
    // Overflow-safe size check.
    std::size_t n = 1;
    for (const auto& f : factors_) {
        if (f.size() > kMaterialiseCap / n) {
            throw DomainError("product box exceeds " + std::to_string(kMaterialiseCap) +
                              " weights; use the factorised autocorrelation instead");
        }
        n *= f.size();
    }
    DenseGrid g;
    for (const auto& f : factors_) {
        g.lo.push_back(f.lo());
        g.shape.push_back(f.size());
    }
    g.weights.resize(n);
    std::vector<std::int64_t> x(g.lo);
    for (std::size_t offset = 0; offset < n; ++offset) {
        g.weights[offset] = weight(x);
        for (std::size_t l = dim(); l-- > 0;) {
            if (++x[l] <= factors_[l].hi()) break;
            x[l] = factors_[l].lo();
        }
    }
    return g;
}

WeightedComb ProductComb::line(std::size_t axis, std::span<const std::int64_t> base) const {
    if (axis >= dim()) throw DomainError("axis out of range");
    if (base.size() != dim()) throw DomainError("index dimension mismatch");
    const WeightedComb& f = factors_[axis];
    std::vector<std::int64_t> x(base.begin(), base.end());
    std::vector<double> weights(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        x[axis] = f.lo() + static_cast<std::int64_t>(j);
        weights[j] = weight(x);
    }
    return WeightedComb(f.lo(), std::move(weights));
}

ProductComb product_comb(std::vector<WeightedComb> factors) {
    for (const auto& f : factors) {
        if (!f.is_binary()) throw DomainError("product comb factors must be binary");
    }
    return ProductComb(std::move(factors));
}

double product_autocorr(std::span<const WeightedComb> factors, std::span<const std::int64_t> m) {
    if (factors.empty()) throw DomainError("product comb needs at least one factor");
    if (factors.size() != m.size()) throw DomainError("lag dimension mismatch");
    double v = 1.0;
    for (std::size_t l = 0; l < factors.size(); ++l) v *= empirical_autocorr(factors[l], m[l]).value;
    return v;
}

GridAutocorr brute_force_autocorr(const ProductComb& comb, std::span<const std::int64_t> m) {
    if (m.size() != comb.dim()) throw DomainError("lag dimension mismatch");
    const DenseGrid g = comb.materialise();
    double norm = 1.0;
    for (std::size_t l = 0; l < comb.dim(); ++l) {
        const auto& f = comb.factors()[l];
        if (std::abs(m[l]) >= static_cast<std::int64_t>(f.size())) {
            throw DomainError("lag |m| must be smaller than the window length");
        }
        norm *= static_cast<double>(2 * f.half_length() + 1);
    }
    std::vector<std::int64_t> x(g.lo), y(comb.dim());
    double sum = 0.0;
    for (std::size_t offset = 0; offset < g.weights.size(); ++offset) {
        // Each factor window lies inside [-N_l, N_l], so summing over the box
        // equals the zero-padded sum over the centred box.
        for (std::size_t l = 0; l < comb.dim(); ++l) y[l] = x[l] - m[l];
        const double w = g.weights[offset];
        if (w != 0.0) sum += w * g.at(y);
        for (std::size_t l = comb.dim(); l-- > 0;) {
            if (++x[l] < g.lo[l] + static_cast<std::int64_t>(g.shape[l])) break;
            x[l] = g.lo[l];
        }
    }
    return {sum / norm, sum};
}

ProductComb rank_k_bernoullise(const ProductComb& base, std::size_t k, const RandomSpec& spec) {
    validate(spec);
    if (k > base.dim()) throw DomainError("rank k must lie in [0, d]");
    if (base.flip()) throw DomainError("comb already carries a sign flip");
    if (k == 0) return base;
    return ProductComb(base.factors(), RankFlip{k, spec});
}

}  // namespace homometry
