#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "homometry/cyclotomic.hpp"

using namespace homometry;

namespace {

// Evaluates a + b w + c w^2 + d w^3 directly.
std::complex<double> evaluate(const Cyc8& x, std::complex<double> w) {
    return static_cast<double>(x.c[0]) + w * (static_cast<double>(x.c[1]) +
                                              w * (static_cast<double>(x.c[2]) + w * static_cast<double>(x.c[3])));
}

Cyc8 random_cyc8(std::mt19937_64& rng, std::int64_t range) {
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    return {d(rng), d(rng), d(rng), d(rng)};
}

const std::complex<double> kXi = std::polar(1.0, std::numbers::pi / 4.0);

}  // namespace

TEST_CASE("star examples") {
    CHECK(star(Cyc8::one()) == Cyc8::one());
    // xi^3 by repeated multiplication, independent of the coefficient map.
    CHECK(star(Cyc8::xi()) == Cyc8::xi() * Cyc8::xi() * Cyc8::xi());
    CHECK(star(Cyc8::xi()) == Cyc8(0, 0, 0, 1));
    CHECK(star(star(Cyc8(2, -1, 3, 5))) == Cyc8(2, -1, 3, 5));
}

TEST_CASE("ring structure") {
    const Cyc8 xi = Cyc8::xi();
    CHECK(xi * xi * xi * xi == -Cyc8::one());
    CHECK(Cyc8(1, 2, 3, 4) - Cyc8(1, 2, 3, 4) == Cyc8::zero());
}

TEST_CASE("embeddings") {
    const Vec2 p1 = embed_physical(Cyc8::one());
    const Vec2 q1 = embed_internal(Cyc8::one());
    CHECK(p1[0] == 1.0);
    CHECK(p1[1] == 0.0);
    CHECK(q1[0] == 1.0);
    CHECK(q1[1] == 0.0);
    const double h = std::sqrt(2.0) / 2.0;
    const Vec2 p = embed_physical(Cyc8::xi());
    const Vec2 q = embed_internal(Cyc8::xi());
    CHECK(p[0] == doctest::Approx(h));
    CHECK(p[1] == doctest::Approx(h));
    CHECK(q[0] == doctest::Approx(-h));
    CHECK(q[1] == doctest::Approx(h));
}

TEST_CASE("property: star is a ring involution and embeddings match direct evaluation") {
    std::mt19937_64 rng(3);
    const std::complex<double> xi3 = kXi * kXi * kXi;
    for (int i = 0; i < 1000; ++i) {
        const Cyc8 x = random_cyc8(rng, 50);
        const Cyc8 y = random_cyc8(rng, 50);
        REQUIRE(star(star(x)) == x);
        REQUIRE(star(x * y) == star(x) * star(y));
        REQUIRE(star(x + y) == star(x) + star(y));

        const auto ex = evaluate(x, kXi);
        const auto ey = evaluate(y, kXi);
        const auto exy = evaluate(x * y, kXi);
        REQUIRE(std::abs(exy - ex * ey) <= 1e-9 * (1.0 + std::abs(ex * ey)));

        const Vec2 p = embed_physical(x);
        const Vec2 q = embed_internal(x);
        REQUIRE(std::abs(std::complex<double>(p[0], p[1]) - ex) <= 1e-9);
        REQUIRE(std::abs(std::complex<double>(q[0], q[1]) - evaluate(x, xi3)) <= 1e-9);

        const double trace = p[0] * p[0] + p[1] * p[1] + q[0] * q[0] + q[1] * q[1];
        REQUIRE(trace == doctest::Approx(2.0 * static_cast<double>(x.norm2())).epsilon(1e-12));
    }
}

TEST_CASE("lattice density") {
    CHECK(lattice_density() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(lattice_density() > 0.0);
    CHECK(std::abs(lattice_basis_determinant({2, 0, 3, 1})) ==
          doctest::Approx(std::abs(lattice_basis_determinant())).epsilon(1e-14));

    // Independent route: the Gram matrix of the embedded power basis is 2 I,
    // so |det B| = sqrt(det(2 I)) = 4.
    Cyc8 a = Cyc8::one();
    for (int i = 0; i < 4; ++i) {
        Cyc8 b = Cyc8::one();
        for (int j = 0; j < 4; ++j) {
            const Vec2 pa = embed_physical(a), qa = embed_internal(a);
            const Vec2 pb = embed_physical(b), qb = embed_internal(b);
            const double g = pa[0] * pb[0] + pa[1] * pb[1] + qa[0] * qb[0] + qa[1] * qb[1];
            CHECK(g == doctest::Approx(i == j ? 2.0 : 0.0).epsilon(1e-14));
            b = b * Cyc8::xi();
        }
        a = a * Cyc8::xi();
    }
}

TEST_CASE("half lattice elements") {
    const HalfCyc8 k{Cyc8(1, 0, 0, 0)};
    CHECK(k.is_half());
    CHECK(k.physical()[0] == 0.5);
    CHECK_FALSE(HalfCyc8{Cyc8(2, -4, 0, 6)}.is_half());
    CHECK(HalfCyc8{Cyc8(-3, 0, 0, 0)}.is_half());
}
