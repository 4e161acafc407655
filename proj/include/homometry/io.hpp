#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "homometry/octagonal.hpp"
#include "homometry/pointset.hpp"
#include "homometry/sequences.hpp"
#include "homometry/tensor.hpp"

namespace homometry::io {

using nlohmann::json;

/// Shortest decimal that round-trips; identical on every run.
std::string format_double(double v);

json to_json(const FinitePointSet& f);
FinitePointSet point_set_from_json(const json& j);
json to_json(const DifferenceMultiset& m);
DifferenceMultiset multiset_from_json(const json& j);
json to_json(const ModelSetPatch& patch);
json to_json(const DenseGrid& grid);

FinitePointSet read_point_set(const std::string& path);

/// Plain table rendered as CSV or as a JSON array of row objects.
class Table {
public:
    using Cell = std::variant<std::int64_t, double, std::string>;

    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
    void add(std::vector<Cell> row);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    std::size_t rows() const noexcept { return rows_.size(); }

    void write_csv(std::ostream& os) const;
    json to_json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

Table patch_table(const ModelSetPatch& patch);
Table intensity_table_csv(const std::vector<IntensityEntry>& entries);
Table comb_table(const WeightedComb& comb);
/// Row per x_1, one column per x_2.
Table grid_matrix(const DenseGrid& grid);

}  // namespace homometry::io
