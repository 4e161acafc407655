#include "homometry/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>

#include "homometry/error.hpp"

namespace homometry::io {

std::string format_double(double v) {
    char buf[64];
    if (v == 0.0) v = 0.0;  // no "-0"
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

json to_json(const FinitePointSet& f) {
    json pts = json::array();
    for (const auto& p : f) pts.push_back(p.coords);
    return {{"dim", f.dim()}, {"points", std::move(pts)}};
}

FinitePointSet point_set_from_json(const json& j) {
    try {
        const auto dim = j.at("dim").get<std::size_t>();
        FinitePointSet f(dim);
        for (const auto& p : j.at("points")) f.insert(IntPoint(p.get<std::vector<std::int64_t>>()));
        return f;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed point set JSON: ") + e.what());
    }
}

json to_json(const DifferenceMultiset& m) {
    // std::map iteration is already lexicographic in z.
    json entries = json::array();
    for (const auto& [z, k] : m.entries()) entries.push_back({{"z", z.coords}, {"m", k}});
    return {{"entries", std::move(entries)}};
}

DifferenceMultiset multiset_from_json(const json& j) {
    try {
        DifferenceMultiset::Map m;
        for (const auto& e : j.at("entries")) {
            const auto k = e.at("m").get<std::int64_t>();
            if (k <= 0) throw DomainError("multiplicities must be positive");
            m[IntPoint(e.at("z").get<std::vector<std::int64_t>>())] += k;
        }
        return DifferenceMultiset(std::move(m));
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed multiset JSON: ") + e.what());
    }
}

json to_json(const ModelSetPatch& patch) {
    json pts = json::array();
    for (const auto& x : patch.points()) {
        const Vec2 p = embed_physical(x);
        const Vec2 q = embed_internal(x);
        pts.push_back({{"coeffs", x.c}, {"phys", {p[0], p[1]}}, {"int", {q[0], q[1]}}});
    }
    return {{"radius", patch.radius()}, {"window", to_json(patch.scheme().window.cells())}, {"points", std::move(pts)}};
}

json to_json(const DenseGrid& grid) {
    return {{"lo", grid.lo}, {"shape", grid.shape}, {"weights", grid.weights}};
}

FinitePointSet read_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    try {
        return point_set_from_json(json::parse(in));
    } catch (const json::parse_error& e) {
        throw DomainError("cannot parse " + path + ": " + e.what());
    }
}

void Table::add(std::vector<Cell> row) {
    if (row.size() != columns_.size()) throw DomainError("table row has the wrong number of cells");
    rows_.push_back(std::move(row));
}

namespace {

std::string render(const Table::Cell& c) {
    if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
    if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

}  // namespace

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i]);
        os << '\n';
    }
}

json Table::to_json() const {
    json out = json::array();
    for (const auto& row : rows_) {
        json obj = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { obj[columns_[i]] = v; }, row[i]);
        }
        out.push_back(std::move(obj));
    }
    return out;
}

Table patch_table(const ModelSetPatch& patch) {
    Table t({"a", "b", "c", "d", "px", "py", "ix", "iy"});
    for (const auto& x : patch.points()) {
        const Vec2 p = embed_physical(x);
        const Vec2 q = embed_internal(x);
        t.add({x.c[0], x.c[1], x.c[2], x.c[3], p[0], p[1], q[0], q[1]});
    }
    return t;
}

Table intensity_table_csv(const std::vector<IntensityEntry>& entries) {
    Table t({"ka", "kb", "kc", "kd", "half", "intensity"});
    for (const auto& e : entries) {
        const auto& n = e.k.numerator.c;
        t.add({n[0], n[1], n[2], n[3], std::int64_t{e.k.is_half() ? 1 : 0}, e.intensity});
    }
    return t;
}

Table comb_table(const WeightedComb& comb) {
    Table t({"index", "weight"});
    for (std::size_t j = 0; j < comb.size(); ++j) {
        t.add({comb.lo() + static_cast<std::int64_t>(j), comb.weights()[j]});
    }
    return t;
}

Table grid_matrix(const DenseGrid& grid) {
    if (grid.shape.size() != 2) throw DomainError("matrix export needs a two-dimensional grid");
    std::vector<std::string> cols{"x1"};
    for (std::size_t j = 0; j < grid.shape[1]; ++j) {
        cols.push_back(std::to_string(grid.lo[1] + static_cast<std::int64_t>(j)));
    }
    Table t(std::move(cols));
    for (std::size_t i = 0; i < grid.shape[0]; ++i) {
        std::vector<Table::Cell> row{grid.lo[0] + static_cast<std::int64_t>(i)};
        for (std::size_t j = 0; j < grid.shape[1]; ++j) row.emplace_back(grid.weights[i * grid.shape[1] + j]);
        t.add(std::move(row));
    }
    return t;
}

}  // namespace homometry::io
