#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

#include "homometry/covariogram.hpp"

namespace homometry {

/// Element a + b xi + c xi^2 + d xi^3 of Z[xi], xi a primitive 8th root of
/// unity (xi^4 = -1).
struct Cyc8 {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};

    Cyc8() = default;
    constexpr Cyc8(std::int64_t a, std::int64_t b, std::int64_t cc, std::int64_t d) : c{a, b, cc, d} {}

    static constexpr Cyc8 zero() { return {0, 0, 0, 0}; }
    static constexpr Cyc8 one() { return {1, 0, 0, 0}; }
    static constexpr Cyc8 xi() { return {0, 1, 0, 0}; }

    std::int64_t norm2() const noexcept { return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3]; }

    friend auto operator<=>(const Cyc8&, const Cyc8&) = default;
    friend bool operator==(const Cyc8&, const Cyc8&) = default;
};

Cyc8 operator+(const Cyc8& x, const Cyc8& y);
Cyc8 operator-(const Cyc8& x, const Cyc8& y);
Cyc8 operator-(const Cyc8& x);
Cyc8 operator*(const Cyc8& x, const Cyc8& y);

/// Galois conjugation xi -> xi^3: (a, b, c, d) -> (a, d, -c, b).
Cyc8 star(const Cyc8& x);

/// Evaluate at xi = exp(i pi / 4), returned as (Re, Im).
Vec2 embed_physical(const Cyc8& x);
/// embed_physical(star(x)).
Vec2 embed_internal(const Cyc8& x);

/// Element of (1/2) Z[xi], stored as its numerator.
struct HalfCyc8 {
    Cyc8 numerator;

    /// True when the element is not already in Z[xi].
    bool is_half() const noexcept;
    Vec2 physical() const;
    Vec2 internal() const;

    friend auto operator<=>(const HalfCyc8&, const HalfCyc8&) = default;
    friend bool operator==(const HalfCyc8&, const HalfCyc8&) = default;
};

/// Determinant of the 4x4 basis {(embed_physical(xi^j), embed_internal(xi^j))}.
/// `order` permutes the basis rows.
double lattice_basis_determinant(const std::array<std::size_t, 4>& order = {0, 1, 2, 3});

/// Points per unit 4-volume of the Minkowski-embedded lattice.
double lattice_density();

struct Cyc8Hash {
    std::size_t operator()(const Cyc8& x) const noexcept {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (auto v : x.c) {
            h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace homometry
