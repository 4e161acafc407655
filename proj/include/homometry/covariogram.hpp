#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "homometry/pointset.hpp"

namespace homometry {

using Vec2 = std::array<double, 2>;

/// Union of closed unit squares [-1/2, 1/2]^2 centred on integer cells.
class Polyomino {
public:
    explicit Polyomino(FinitePointSet cells);

    const FinitePointSet& cells() const noexcept { return cells_; }
    double area() const noexcept { return static_cast<double>(cells_.size()); }

    /// Weighted difference set of the cells, cached at construction.
    const DifferenceMultiset& differences() const noexcept { return diffs_; }

private:
    FinitePointSet cells_;
    DifferenceMultiset diffs_;
};

/// The windows built from the canonical pair.
Polyomino polyomino_p1();
Polyomino polyomino_p2();

/// max(0, 1-|u|) * max(0, 1-|v|): covariogram of the unit square.
double tent(const Vec2& u);

/// vol(K ∩ (x+K)), evaluated as sum over the difference multiset of the
/// cells of m(z) * tent(x - z).
double covariogram(const Polyomino& p, const Vec2& x);

/// Covariogram of alpha*K: alpha^2 * cov_K(x / alpha). alpha = 0 throws.
double covariogram_scaled(const Polyomino& p, double alpha, const Vec2& x);

/// sin(t)/t, continuous at 0.
double sinc(double t);

/// Fourier transform of the indicator of K with kernel exp(-2 pi i k.x).
std::complex<double> indicator_ft(const Polyomino& p, const Vec2& k);

/// Brute-force covariogram: rasterises every unit cell into an n x n grid of
/// sub-squares and counts sub-squares whose centre lies in K and whose
/// centre minus x also lies in K. Error is O(perimeter / n).
double covariogram_oracle(const Polyomino& p, const Vec2& x, std::size_t n);

}  // namespace homometry
