#include "homometry/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace homometry {

Cyc8 operator+(const Cyc8& x, const Cyc8& y) {
    return {x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2], x.c[3] + y.c[3]};
}

Cyc8 operator-(const Cyc8& x, const Cyc8& y) {
    return {x.c[0] - y.c[0], x.c[1] - y.c[1], x.c[2] - y.c[2], x.c[3] - y.c[3]};
}

Cyc8 operator-(const Cyc8& x) { return {-x.c[0], -x.c[1], -x.c[2], -x.c[3]}; }

Cyc8 operator*(const Cyc8& x, const Cyc8& y) {
    // Polynomial product reduced with xi^4 = -1.
    std::array<std::int64_t, 4> r{0, 0, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const std::int64_t term = x.c[i] * y.c[j];
            const std::size_t k = i + j;
            if (k < 4)
                r[k] += term;
            else
                r[k - 4] -= term;
        }
    }
    return {r[0], r[1], r[2], r[3]};
}

Cyc8 star(const Cyc8& x) { return {x.c[0], x.c[3], -x.c[2], x.c[1]}; }

Vec2 embed_physical(const Cyc8& x) {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    // xi = (h, h), xi^2 = (0, 1), xi^3 = (-h, h)
    const double a = static_cast<double>(x.c[0]);
    const double b = static_cast<double>(x.c[1]);
    const double c = static_cast<double>(x.c[2]);
    const double d = static_cast<double>(x.c[3]);
    return {a + h * (b - d), c + h * (b + d)};
}

Vec2 embed_internal(const Cyc8& x) { return embed_physical(star(x)); }

bool HalfCyc8::is_half() const noexcept {
    for (auto v : numerator.c) {
        if (v % 2 != 0) return true;
    }
    return false;
}

Vec2 HalfCyc8::physical() const {
    const Vec2 p = embed_physical(numerator);
    return {p[0] / 2.0, p[1] / 2.0};
}

Vec2 HalfCyc8::internal() const {
    const Vec2 p = embed_internal(numerator);
    return {p[0] / 2.0, p[1] / 2.0};
}

double lattice_basis_determinant(const std::array<std::size_t, 4>& order) {
    std::array<std::array<double, 4>, 4> m{};
    Cyc8 power = Cyc8::one();
    std::array<Cyc8, 4> basis{};
    for (std::size_t j = 0; j < 4; ++j) {
        basis[j] = power;
        power = power * Cyc8::xi();
    }
    for (std::size_t r = 0; r < 4; ++r) {
        const Cyc8& v = basis[order[r]];
        const Vec2 p = embed_physical(v);
        const Vec2 q = embed_internal(v);
        m[r] = {p[0], p[1], q[0], q[1]};
    }

    // Gaussian elimination with partial pivoting.
    double det = 1.0;
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < 4; ++r) {
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        }
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < 4; ++r) {
            const double f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < 4; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

double lattice_density() {
    static const double density = 1.0 / std::abs(lattice_basis_determinant());
    return density;
}

}  // namespace homometry
