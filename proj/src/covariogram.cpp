#include "homometry/covariogram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "homometry/error.hpp"

namespace homometry {

Polyomino::Polyomino(FinitePointSet cells) : cells_(std::move(cells)) {
    if (cells_.dim() != 2) throw DomainError("polyomino cells must be two-dimensional");
    if (cells_.empty()) throw DomainError("empty point set");
    diffs_ = difference_multiset(cells_);
}

Polyomino polyomino_p1() { return Polyomino(canonical_pair().first); }
Polyomino polyomino_p2() { return Polyomino(canonical_pair().second); }

double tent(const Vec2& u) {
    return std::max(0.0, 1.0 - std::abs(u[0])) * std::max(0.0, 1.0 - std::abs(u[1]));
}

double covariogram(const Polyomino& p, const Vec2& x) {
    double sum = 0.0;
    for (const auto& [z, m] : p.differences().entries()) {
        const Vec2 u{x[0] - static_cast<double>(z[0]), x[1] - static_cast<double>(z[1])};
        if (std::abs(u[0]) >= 1.0 || std::abs(u[1]) >= 1.0) continue;
        sum += static_cast<double>(m) * tent(u);
    }
    return sum;
}

double covariogram_scaled(const Polyomino& p, double alpha, const Vec2& x) {
    if (alpha == 0.0) throw DomainError("degenerate scaling");
    return alpha * alpha * covariogram(p, {x[0] / alpha, x[1] / alpha});
}

double sinc(double t) {
    if (t == 0.0) return 1.0;
    return std::sin(t) / t;
}

std::complex<double> indicator_ft(const Polyomino& p, const Vec2& k) {
    using std::numbers::pi;
    std::complex<double> s{0.0, 0.0};
    for (const auto& f : p.cells()) {
        // Reduce the phase mod 1 before scaling by 2 pi to keep it accurate.
        double phase = k[0] * static_cast<double>(f[0]) + k[1] * static_cast<double>(f[1]);
        phase -= std::floor(phase);
        s += std::polar(1.0, -2.0 * pi * phase);
    }
    return sinc(pi * k[0]) * sinc(pi * k[1]) * s;
}

double covariogram_oracle(const Polyomino& p, const Vec2& x, std::size_t n) {
    if (n < 16) throw DomainError("oracle grid resolution must be at least 16");
    const auto& cells = p.cells();
    const double h = 1.0 / static_cast<double>(n);

    // Membership of a point in the closed polyomino via the cell containing
    // it; points on shared edges fall into whichever neighbour exists.
    auto inside = [&](double u, double v) {
        const double fu = std::floor(u + 0.5), fv = std::floor(v + 0.5);
        for (double du : {0.0, -1.0}) {
            for (double dv : {0.0, -1.0}) {
                const double cu = fu + du, cv = fv + dv;
                if (std::abs(u - cu) > 0.5 || std::abs(v - cv) > 0.5) continue;
                if (cells.contains({static_cast<std::int64_t>(cu), static_cast<std::int64_t>(cv)}))
                    return true;
            }
        }
        return false;
    };

    std::size_t hits = 0;
    for (const auto& f : cells) {
        const double x0 = static_cast<double>(f[0]) - 0.5;
        const double y0 = static_cast<double>(f[1]) - 0.5;
        for (std::size_t i = 0; i < n; ++i) {
            const double u = x0 + (static_cast<double>(i) + 0.5) * h;
            for (std::size_t j = 0; j < n; ++j) {
                const double v = y0 + (static_cast<double>(j) + 0.5) * h;
                if (inside(u - x[0], v - x[1])) ++hits;
            }
        }
    }
    return static_cast<double>(hits) * h * h;
}

}  // namespace homometry
