#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace homometry {

/// Integer lattice point of arbitrary dimension.
struct IntPoint {
    std::vector<std::int64_t> coords;

    IntPoint() = default;
    explicit IntPoint(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    IntPoint(std::initializer_list<std::int64_t> c) : coords(c) {}

    std::size_t dim() const noexcept { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }

    friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
    friend bool operator==(const IntPoint&, const IntPoint&) = default;
};

IntPoint operator+(const IntPoint& a, const IntPoint& b);
IntPoint operator-(const IntPoint& a, const IntPoint& b);
IntPoint operator-(const IntPoint& a);

/// Finite set of lattice points sharing one dimension. Inserting a duplicate
/// is a no-op; inserting a point of another dimension throws.
class FinitePointSet {
public:
    explicit FinitePointSet(std::size_t dim);
    FinitePointSet(std::size_t dim, std::initializer_list<IntPoint> points);
    FinitePointSet(std::size_t dim, const std::vector<IntPoint>& points);

    void insert(const IntPoint& p);
    bool contains(const IntPoint& p) const { return points_.count(p) != 0; }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    const std::set<IntPoint>& points() const noexcept { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    friend bool operator==(const FinitePointSet&, const FinitePointSet&) = default;

private:
    std::size_t dim_;
    std::set<IntPoint> points_;
};

/// Weighted difference set F - F: difference vector -> multiplicity.
class DifferenceMultiset {
public:
    using Map = std::map<IntPoint, std::int64_t>;

    DifferenceMultiset() = default;
    explicit DifferenceMultiset(Map entries) : entries_(std::move(entries)) {}

    const Map& entries() const noexcept { return entries_; }
    std::int64_t multiplicity(const IntPoint& z) const;
    std::int64_t total() const;

    friend bool operator==(const DifferenceMultiset&, const DifferenceMultiset&) = default;

private:
    Map entries_;
};

DifferenceMultiset difference_multiset(const FinitePointSet& f);

/// Straightforward O(|F|^2) double loop over a plain vector; kept separate
/// from difference_multiset as a reference for tests.
DifferenceMultiset difference_multiset_naive(const std::vector<IntPoint>& points);

bool are_homometric(const FinitePointSet& f, const FinitePointSet& g);

/// Returns t + F, or t - F when `invert` is set.
FinitePointSet transform(const FinitePointSet& f, const IntPoint& t, bool invert);

/// The 15-point homometric pair in Z^2.
std::pair<FinitePointSet, FinitePointSet> canonical_pair();

/// Set operations used for window bookkeeping.
FinitePointSet set_difference(const FinitePointSet& a, const FinitePointSet& b);
FinitePointSet set_intersection(const FinitePointSet& a, const FinitePointSet& b);

}  // namespace homometry
