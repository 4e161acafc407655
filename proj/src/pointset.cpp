#include "homometry/pointset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "homometry/error.hpp"

namespace homometry {

namespace {

void require_same_dim(std::size_t a, std::size_t b) {
    if (a != b) {
        throw DomainError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

IntPoint operator+(const IntPoint& a, const IntPoint& b) {
    require_same_dim(a.dim(), b.dim());
    IntPoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

IntPoint operator-(const IntPoint& a, const IntPoint& b) {
    require_same_dim(a.dim(), b.dim());
    IntPoint r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

IntPoint operator-(const IntPoint& a) {
    IntPoint r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

FinitePointSet::FinitePointSet(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw DomainError("point set dimension must be at least 1");
}

FinitePointSet::FinitePointSet(std::size_t dim, std::initializer_list<IntPoint> points)
    : FinitePointSet(dim) {
    for (const auto& p : points) insert(p);
}

FinitePointSet::FinitePointSet(std::size_t dim, const std::vector<IntPoint>& points)
    : FinitePointSet(dim) {
    for (const auto& p : points) insert(p);
}

void FinitePointSet::insert(const IntPoint& p) {
    require_same_dim(dim_, p.dim());
    points_.insert(p);
}

std::int64_t DifferenceMultiset::multiplicity(const IntPoint& z) const {
    auto it = entries_.find(z);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t DifferenceMultiset::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0},
                           [](std::int64_t s, const auto& kv) { return s + kv.second; });
}

DifferenceMultiset difference_multiset(const FinitePointSet& f) {
    if (f.empty()) throw DomainError("empty point set");
    DifferenceMultiset::Map m;
    for (const auto& x : f) {
        for (const auto& y : f) ++m[x - y];
    }
    return DifferenceMultiset(std::move(m));
}

DifferenceMultiset difference_multiset_naive(const std::vector<IntPoint>& points) {
    if (points.empty()) throw DomainError("empty point set");
    std::vector<IntPoint> diffs;
    diffs.reserve(points.size() * points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) diffs.push_back(points[i] - points[j]);
    }
    std::sort(diffs.begin(), diffs.end());
    DifferenceMultiset::Map m;
    for (std::size_t i = 0; i < diffs.size();) {
        std::size_t j = i;
        while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
        m.emplace(diffs[i], static_cast<std::int64_t>(j - i));
        i = j;
    }
    return DifferenceMultiset(std::move(m));
}

bool are_homometric(const FinitePointSet& f, const FinitePointSet& g) {
    require_same_dim(f.dim(), g.dim());
    if (f.size() != g.size()) return false;
    return difference_multiset(f) == difference_multiset(g);
}

FinitePointSet transform(const FinitePointSet& f, const IntPoint& t, bool invert) {
    FinitePointSet out(f.dim());
    for (const auto& x : f) out.insert(invert ? t - x : t + x);
    return out;
}

std::pair<FinitePointSet, FinitePointSet> canonical_pair() {
    FinitePointSet f1(2, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
                          {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}});
    FinitePointSet f2(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2},
                          {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 5}});
    return {std::move(f1), std::move(f2)};
}

FinitePointSet set_difference(const FinitePointSet& a, const FinitePointSet& b) {
    require_same_dim(a.dim(), b.dim());
    FinitePointSet out(a.dim());
    for (const auto& x : a) {
        if (!b.contains(x)) out.insert(x);
    }
    return out;
}

FinitePointSet set_intersection(const FinitePointSet& a, const FinitePointSet& b) {
    require_same_dim(a.dim(), b.dim());
    FinitePointSet out(a.dim());
    for (const auto& x : a) {
        if (b.contains(x)) out.insert(x);
    }
    return out;
}

}  // namespace homometry
