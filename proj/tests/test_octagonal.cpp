#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "homometry/error.hpp"
#include "homometry/octagonal.hpp"

using namespace homometry;

namespace {

const SchemeConfig& scheme1() {
    static const SchemeConfig s = make_scheme(polyomino_p1());
    return s;
}
const SchemeConfig& scheme2() {
    static const SchemeConfig s = make_scheme(polyomino_p2());
    return s;
}

Cyc8 random_cyc8(std::mt19937_64& rng, std::int64_t range) {
    std::uniform_int_distribution<std::int64_t> d(-range, range);
    return {d(rng), d(rng), d(rng), d(rng)};
}

// Sum over the cells of exp(-2 pi i y.f), the lattice part of the window transform.
std::complex<double> cell_sum(const Polyomino& p, const Vec2& y) {
    std::complex<double> s{};
    for (const auto& f : p.cells()) {
        s += std::polar(1.0, -2.0 * std::numbers::pi * (y[0] * static_cast<double>(f[0]) + y[1] * static_cast<double>(f[1])));
    }
    return s;
}

}  // namespace

TEST_CASE("patch generation basics") {
    const auto empty = generate_model_set(scheme1(), 0.0);
    CHECK(empty.size() <= 1);
    if (empty.size() == 1) CHECK(empty.points().front() == Cyc8::zero());
    CHECK_THROWS_AS(generate_model_set(scheme1(), -1.0), DomainError);

    const auto patch = generate_model_set(scheme1(), 20.0);
    CHECK(std::is_sorted(patch.points().begin(), patch.points().end()));
    for (const auto& x : patch.points()) {
        const Vec2 p = embed_physical(x);
        const Vec2 q = embed_internal(x);
        REQUIRE(std::hypot(p[0], p[1]) <= 20.0);
        const auto u = static_cast<std::int64_t>(std::floor(q[0] - scheme1().window_shift[0] + 0.5));
        const auto v = static_cast<std::int64_t>(std::floor(q[1] - scheme1().window_shift[1] + 0.5));
        REQUIRE(scheme1().window.cells().contains({u, v}));
    }
}

TEST_CASE("enumeration completeness against a brute-force cube") {
    // The coefficient ball comes from the trace identity; scanning a much
    // larger coefficient cube must not find anything extra.
    const double radius = 4.3;
    const auto patch = generate_model_set(scheme1(), radius);
    std::size_t count = 0;
    const std::int64_t r = 9;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            for (std::int64_t c = -r; c <= r; ++c)
                for (std::int64_t d = -r; d <= r; ++d) {
                    const Cyc8 x{a, b, c, d};
                    const Vec2 p = embed_physical(x);
                    if (std::hypot(p[0], p[1]) > radius) continue;
                    const Vec2 q = embed_internal(x);
                    const auto u = static_cast<std::int64_t>(std::floor(q[0] - scheme1().window_shift[0] + 0.5));
                    const auto v = static_cast<std::int64_t>(std::floor(q[1] - scheme1().window_shift[1] + 0.5));
                    if (scheme1().window.cells().contains({u, v})) {
                        ++count;
                        REQUIRE(patch.contains(x));
                    }
                }
    CHECK(count == patch.size());
}

TEST_CASE("density and positive-density difference") {
    const auto p1 = generate_model_set(scheme1(), 30.0);
    const auto p2 = generate_model_set(scheme2(), 30.0);
    CHECK(p1.density() == doctest::Approx(3.75).epsilon(0.03));
    std::size_t only_first = 0;
    for (const auto& x : p1.points()) {
        if (!p2.contains(x)) ++only_first;
    }
    const double fraction = static_cast<double>(only_first) / static_cast<double>(p1.size());
    // Two of fifteen window cells differ.
    CHECK(fraction == doctest::Approx(2.0 / 15.0).epsilon(0.1));
}

TEST_CASE("patch monotonicity in the radius") {
    const auto small = generate_model_set(scheme2(), 12.0);
    const auto large = generate_model_set(scheme2(), 19.5);
    for (const auto& x : small.points()) REQUIRE(large.contains(x));
}

TEST_CASE("set differences are model sets of the cell differences") {
    const auto [f1, f2] = canonical_pair();
    const double radius = 25.0;
    const auto p1 = generate_model_set(scheme1(), radius);
    const auto p2 = generate_model_set(scheme2(), radius);
    const auto d12 = generate_model_set(make_scheme(Polyomino(set_difference(f1, f2))), radius);
    const auto d21 = generate_model_set(make_scheme(Polyomino(set_difference(f2, f1))), radius);
    std::vector<Cyc8> only1, only2;
    for (const auto& x : p1.points())
        if (!p2.contains(x)) only1.push_back(x);
    for (const auto& x : p2.points())
        if (!p1.contains(x)) only2.push_back(x);
    CHECK(only1 == d12.points());
    CHECK(only2 == d21.points());
}

TEST_CASE("boundary guard") {
    // With shift (1/2, 0) the origin projects onto the edge between cells
    // (-1, 0) and (0, 0).
    const SchemeConfig bad = make_scheme(polyomino_p1(), {0.5, 0.0});
    CHECK_THROWS_WITH_AS(generate_model_set(bad, 3.0), doctest::Contains("non-generic window position"), DomainError);
    CHECK_NOTHROW(generate_model_set(make_scheme(polyomino_p1(), {0.0, 0.0}), 3.0));
}

TEST_CASE("autocorrelation coefficients") {
    CHECK(autocorr_coefficient(scheme1(), Cyc8::zero()) == doctest::Approx(3.75));
    // |z*| = 10 exceeds the window diameter plus sqrt 2.
    CHECK(autocorr_coefficient(scheme1(), Cyc8(10, 0, 0, 0)) == 0.0);

    std::mt19937_64 rng(9);
    for (int i = 0; i < 500; ++i) {
        const Cyc8 z = random_cyc8(rng, 4);
        REQUIRE(autocorr_coefficient(scheme1(), z) ==
                doctest::Approx(autocorr_coefficient(scheme2(), z)).epsilon(1e-12));
    }

    const auto patch = generate_model_set(scheme1(), 50.0);
    CHECK(empirical_autocorr(patch, Cyc8::zero()) == doctest::Approx(patch.density()));
    const double eta = autocorr_coefficient(scheme1(), Cyc8::one());
    CHECK(std::abs(empirical_autocorr(patch, Cyc8::one()) - eta) <= 0.03 * eta);
    CHECK(empirical_autocorr(patch, Cyc8(10, 0, 0, 0)) == 0.0);
}

TEST_CASE("diffraction amplitudes and intensities") {
    const HalfCyc8 zero{Cyc8::zero()};
    CHECK(diffraction_amplitude(scheme1(), zero).real() == doctest::Approx(3.75));
    CHECK(std::abs(diffraction_amplitude(scheme1(), zero).imag()) < 1e-15);
    CHECK(diffraction_intensity(scheme1(), zero) == doctest::Approx(14.0625));

    std::mt19937_64 rng(21);
    double largest_gap = 0.0;
    for (int i = 0; i < 100; ++i) {
        const HalfCyc8 k{random_cyc8(rng, 3)};
        const double i1 = diffraction_intensity(scheme1(), k);
        const double i2 = diffraction_intensity(scheme2(), k);
        REQUIRE(std::abs(i1 - i2) <= 1e-10);
        REQUIRE(diffraction_intensity(scheme1(), HalfCyc8{-k.numerator}) == doctest::Approx(i1).epsilon(1e-12));
        largest_gap = std::max(largest_gap, std::abs(diffraction_amplitude(scheme1(), k) -
                                                     diffraction_amplitude(scheme2(), k)));
    }
    CHECK(largest_gap > 0.1);
}

TEST_CASE("intensity table covers the requested ball") {
    const auto table = intensity_table(scheme1(), 1.0, 1.0);
    CHECK_FALSE(table.empty());
    bool has_zero = false;
    for (const auto& e : table) {
        const Vec2 p = e.k.physical();
        const Vec2 q = e.k.internal();
        REQUIRE(std::hypot(p[0], p[1]) <= 1.0 + 1e-12);
        REQUIRE(std::hypot(q[0], q[1]) <= 1.0 + 1e-12);
        if (e.k.numerator == Cyc8::zero()) has_zero = true;
    }
    CHECK(has_zero);
}

TEST_CASE("amplitude ratio closed forms") {
    const auto at0 = amplitude_ratio({0.0, 0.0}).value();
    REQUIRE(at0);
    CHECK(std::abs(*at0 - 1.0) < 1e-15);

    const auto half = amplitude_ratio({0.5, 0.0}).value();
    REQUIRE(half);
    CHECK(std::abs(*half + 1.0) < 1e-12);

    const AmplitudeRatio sing = amplitude_ratio({0.0, 1.0 / 3.0});
    CHECK(sing.singular());
    CHECK_FALSE(sing.value());
    CHECK(std::abs(sing.numerator) < 1e-9);
    CHECK(std::abs(sing.denominator) < 1e-9);
    CHECK(amplitude_ratio({2.0, 2.0 + 2.0 / 3.0}).singular());
    CHECK_FALSE(amplitude_ratio({0.5, 1.0 / 3.0}).singular());

    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const Polyomino p1 = polyomino_p1(), p2 = polyomino_p2();
    for (int i = 0; i < 1000; ++i) {
        const Vec2 y{u(rng), u(rng)};
        const auto r = amplitude_ratio(y).value();
        const auto alt = amplitude_ratio_alt(y);
        REQUIRE(r);
        REQUIRE(alt);
        REQUIRE(std::abs(std::abs(*r) - 1.0) <= 1e-9);
        REQUIRE(std::abs(*r - *alt) <= 1e-9);
        // The printed form is the ratio of the window transforms at +y, i.e.
        // A1(-y) / A2(-y) with A_i(y) = dens * 1^_{P_i}(-y).
        REQUIRE(std::abs(*r - cell_sum(p1, y) / cell_sum(p2, y)) <= 1e-9);
    }
}

TEST_CASE("ratio agrees with diffraction amplitudes on (1/2)L") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 100; ++i) {
        const HalfCyc8 k{random_cyc8(rng, 3)};
        const auto a1 = diffraction_amplitude(scheme1(), HalfCyc8{-k.numerator});
        const auto a2 = diffraction_amplitude(scheme2(), HalfCyc8{-k.numerator});
        if (std::abs(a2) < 1e-6) continue;
        const auto r = amplitude_ratio(k.internal()).value();
        REQUIRE(r);
        REQUIRE(std::abs(*r - a1 / a2) <= 1e-8);
    }
}

TEST_CASE("additivity witness") {
    const AdditivityWitness w = additivity_witness();
    CHECK(w.violation > 0.05);
    const auto direct = additivity_violation(w.y, w.y_prime);
    REQUIRE(direct);
    CHECK(*direct == doctest::Approx(w.violation));
    CHECK(singular_margin(w.y[1]) >= 0.05);
    CHECK(singular_margin(w.y_prime[1]) >= 0.05);
    CHECK(singular_margin(w.y[1] + w.y_prime[1]) >= 0.05);

    for (double a = 0.0; a < 1.0; a += 0.13) {
        const auto v = additivity_violation({a, 0.1}, {0.0, 0.0});
        REQUIRE(v);
        CHECK(*v < 1e-12);
    }
    CHECK_THROWS_AS(additivity_witness(0.1, 0.05, 0.6), ClaimFalsified);
}

TEST_CASE("local derivability witness") {
    CHECK(mld_witness(polyomino_p1(), {4, 5}));
    CHECK(mld_witness(polyomino_p2(), {4, 5}));
    CHECK(mld_witness());
    const MldCheck wrong = mld_check(polyomino_p1(), {3, 5});
    CHECK_FALSE(wrong.intersection_is_unit_cell);
    CHECK(wrong.intersection == FinitePointSet(2, {{0, 0}, {1, 0}}));
    CHECK_FALSE(mld_witness(polyomino_p1(), {3, 5}));
    CHECK(mld_check(polyomino_p2(), {4, 5}).translate_count == 15);
}

TEST_CASE("three-point correlations") {
    const auto patch = generate_model_set(scheme1(), 30.0);
    CHECK(three_point_correlation(patch, Cyc8::zero(), Cyc8::zero()) == doctest::Approx(patch.density()));
    const Cyc8 z{1, -1, 0, 1};
    CHECK(three_point_correlation(patch, z, z) == doctest::Approx(empirical_autocorr(patch, z)));
    CHECK(three_point_coefficient(scheme1(), Cyc8::zero(), Cyc8::zero()) == doctest::Approx(3.75));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 50; ++i) {
        const Cyc8 w = random_cyc8(rng, 3);
        REQUIRE(three_point_coefficient(scheme1(), w, w) ==
                doctest::Approx(autocorr_coefficient(scheme1(), w)).epsilon(1e-12));
        REQUIRE(three_point_coefficient(scheme1(), w, Cyc8::zero()) ==
                doctest::Approx(autocorr_coefficient(scheme1(), w)).epsilon(1e-12));
    }
}

TEST_CASE("support lags") {
    const auto lags = support_lags(scheme1(), 20);
    REQUIRE(lags.size() == 20);
    double prev = 0.0;
    for (const auto& z : lags) {
        CHECK_FALSE(z == Cyc8::zero());
        CHECK(autocorr_coefficient(scheme1(), z) >= 0.25);
        const Vec2 p = embed_physical(z);
        const double norm = std::hypot(p[0], p[1]);
        CHECK(norm >= prev);
        prev = norm;
    }
    CHECK_THROWS_AS(support_lags(scheme1(), 100000, 1), DomainError);
}
