#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "homometry/error.hpp"
#include "homometry/io.hpp"

using namespace homometry;

TEST_CASE("double formatting round-trips") {
    CHECK(io::format_double(15.0) == "15");
    CHECK(io::format_double(0.25) == "0.25");
    CHECK(io::format_double(-0.5) == "-0.5");
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const double v = u(rng);
        REQUIRE(std::stod(io::format_double(v)) == v);
    }
}

TEST_CASE("point sets and multisets through json") {
    const auto [f1, f2] = canonical_pair();
    const io::json j = io::to_json(f1);
    CHECK(io::point_set_from_json(j) == f1);
    CHECK(io::point_set_from_json(io::json::parse(j.dump())) == f1);

    const DifferenceMultiset d = difference_multiset(f2);
    CHECK(io::multiset_from_json(io::to_json(d)) == d);

    CHECK_THROWS_AS(io::point_set_from_json(io::json::parse(R"({"dim": 2, "points": [[1, 2, 3]]})")), DomainError);
    CHECK_THROWS_AS(io::point_set_from_json(io::json::parse(R"([1, 2])")), DomainError);
}

TEST_CASE("point set files") {
    const auto path = std::filesystem::temp_directory_path() / "homometry_io_test.json";
    {
        std::ofstream os(path);
        os << io::to_json(canonical_pair().second).dump();
    }
    CHECK(io::read_point_set(path.string()) == canonical_pair().second);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::read_point_set("/nonexistent/set.json"), DomainError);
}

TEST_CASE("tables") {
    io::Table t({"a", "b", "c"});
    t.add({std::int64_t{1}, 0.5, std::string("x")});
    t.add({std::int64_t{-2}, 3.0, std::string("y")});
    std::ostringstream os;
    t.write_csv(os);
    CHECK(os.str() == "a,b,c\n1,0.5,x\n-2,3,y\n");
    const io::json j = t.to_json();
    REQUIRE(j.size() == 2);
    CHECK(j[1]["a"] == -2);
    CHECK(j[0]["c"] == "x");
    CHECK_THROWS_AS(t.add({std::int64_t{1}}), DomainError);
}

TEST_CASE("table builders") {
    const io::Table comb = io::comb_table(rs_fixed_point(4));
    CHECK(comb.columns() == std::vector<std::string>{"index", "weight"});
    CHECK(comb.rows() == 8);

    const auto patch = generate_model_set(make_scheme(polyomino_p1()), 3.0);
    const io::Table pt = io::patch_table(patch);
    CHECK(pt.columns().size() == 8);
    CHECK(pt.rows() == patch.size());
    CHECK(io::to_json(patch)["points"].size() == patch.size());

    const DenseGrid g = product_comb({constant_comb(2), constant_comb(3)}).materialise();
    const io::Table m = io::grid_matrix(g);
    CHECK(m.rows() == 4);
    CHECK(io::to_json(g)["shape"] == io::json::array({4, 6}));
}
