#include "homometry/octagonal.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <utility>

#include "homometry/error.hpp"
#include "homometry/parallel.hpp"

namespace homometry {

namespace {

using std::numbers::pi;

// Dense lookup for the window cells over their bounding box.
class CellMask {
public:
    explicit CellMask(const FinitePointSet& cells) {
        lo_ = {cells.begin()->coords[0], cells.begin()->coords[1]};
        hi_ = lo_;
        for (const auto& f : cells) {
            lo_[0] = std::min(lo_[0], f[0]);
            lo_[1] = std::min(lo_[1], f[1]);
            hi_[0] = std::max(hi_[0], f[0]);
            hi_[1] = std::max(hi_[1], f[1]);
        }
        width_ = hi_[0] - lo_[0] + 1;
        mask_.assign(static_cast<std::size_t>(width_ * (hi_[1] - lo_[1] + 1)), false);
        for (const auto& f : cells) mask_[offset(f[0], f[1])] = true;
    }

    bool contains(std::int64_t u, std::int64_t v) const {
        if (u < lo_[0] || u > hi_[0] || v < lo_[1] || v > hi_[1]) return false;
        return mask_[offset(u, v)];
    }

private:
    std::size_t offset(std::int64_t u, std::int64_t v) const {
        return static_cast<std::size_t>((v - lo_[1]) * width_ + (u - lo_[0]));
    }

    std::array<std::int64_t, 2> lo_{}, hi_{};
    std::int64_t width_ = 0;
    std::vector<bool> mask_;
};

double window_reach(const SchemeConfig& scheme) {
    double rho = 0.0;
    for (const auto& f : scheme.window.cells()) {
        for (double du : {-0.5, 0.5}) {
            for (double dv : {-0.5, 0.5}) {
                const double u = static_cast<double>(f[0]) + du + scheme.window_shift[0];
                const double v = static_cast<double>(f[1]) + dv + scheme.window_shift[1];
                rho = std::max(rho, std::hypot(u, v));
            }
        }
    }
    return rho;
}

std::string describe(const Cyc8& x) {
    std::ostringstream os;
    os << "(" << x.c[0] << "," << x.c[1] << "," << x.c[2] << "," << x.c[3] << ")";
    return os.str();
}

std::complex<double> unit(double t) {
    t -= std::floor(t);
    return std::polar(1.0, 2.0 * pi * t);
}

double interval_overlap(double a_lo, double a_hi, double b_lo, double b_hi, double c_lo,
                        double c_hi) {
    return std::max(0.0, std::min({a_hi, b_hi, c_hi}) - std::max({a_lo, b_lo, c_lo}));
}

}  // namespace

Vec2 default_window_shift() { return {1e-5, std::numbers::sqrt2 * 1e-5}; }

SchemeConfig make_scheme(Polyomino window) {
    return make_scheme(std::move(window), default_window_shift());
}

SchemeConfig make_scheme(Polyomino window, const Vec2& window_shift) {
    return SchemeConfig{std::move(window), window_shift, lattice_density()};
}

ModelSetPatch::ModelSetPatch(std::vector<Cyc8> points, double radius, SchemeConfig scheme)
    : points_(std::move(points)), radius_(radius), scheme_(std::move(scheme)) {
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
    index_.reserve(points_.size());
    index_.insert(points_.begin(), points_.end());
}

double ModelSetPatch::density() const {
    if (radius_ <= 0.0) throw DomainError("patch radius must be positive");
    return static_cast<double>(points_.size()) / (pi * radius_ * radius_);
}

ModelSetPatch generate_model_set(const SchemeConfig& scheme, double radius) {
    if (radius < 0.0 || !std::isfinite(radius)) throw DomainError("radius must be non-negative");
    const CellMask mask(scheme.window.cells());
    const double rho = window_reach(scheme);
    // |x|^2 + |x*|^2 = 2 * sum of squared coefficients.
    const auto bound = static_cast<std::int64_t>(std::floor((radius * radius + rho * rho) / 2.0));
    const auto extent = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(bound))));
    const double r2 = radius * radius;
    const Vec2 shift = scheme.window_shift;

    const auto rows = static_cast<std::size_t>(2 * extent + 1);
    std::vector<std::vector<Cyc8>> found(thread_count());
    std::exception_ptr failure;
    std::mutex failure_mutex;

    parallel_chunks(rows, [&](std::size_t worker, std::size_t begin, std::size_t end) {
        auto& out = found[worker];
        try {
            for (std::size_t row = begin; row < end; ++row) {
                const std::int64_t a = static_cast<std::int64_t>(row) - extent;
                const std::int64_t ra = bound - a * a;
                for (std::int64_t b = -extent; b <= extent; ++b) {
                    const std::int64_t rb = ra - b * b;
                    if (rb < 0) continue;
                    for (std::int64_t c = -extent; c <= extent; ++c) {
                        const std::int64_t rc = rb - c * c;
                        if (rc < 0) continue;
                        for (std::int64_t d = -extent; d <= extent; ++d) {
                            if (rc - d * d < 0) continue;
                            const Cyc8 x{a, b, c, d};
                            const Vec2 p = embed_physical(x);
                            if (p[0] * p[0] + p[1] * p[1] > r2) continue;
                            const Vec2 q = embed_internal(x);
                            const double u = q[0] - shift[0] + 0.5;
                            const double v = q[1] - shift[1] + 0.5;
                            const double fu = std::floor(u), fv = std::floor(v);
                            const bool edge_u = std::abs(u - std::round(u)) < kBoundaryTolerance;
                            const bool edge_v = std::abs(v - std::round(v)) < kBoundaryTolerance;
                            if (edge_u || edge_v) {
                                // Any window cell touching this edge makes membership
                                // depend on the half-open convention.
                                const auto cu = static_cast<std::int64_t>(edge_u ? std::round(u) : fu);
                                const auto cv = static_cast<std::int64_t>(edge_v ? std::round(v) : fv);
                                for (std::int64_t du = edge_u ? -1 : 0; du <= 0; ++du) {
                                    for (std::int64_t dv = edge_v ? -1 : 0; dv <= 0; ++dv) {
                                        if (mask.contains(cu + du, cv + dv)) {
                                            throw DomainError(
                                                "non-generic window position: internal image of " +
                                                describe(x) +
                                                " lies on a window cell boundary; perturb window_shift");
                                        }
                                    }
                                }
                            }
                            if (mask.contains(static_cast<std::int64_t>(fu), static_cast<std::int64_t>(fv)))
                                out.push_back(x);
                        }
                    }
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    std::vector<Cyc8> points;
    for (auto& part : found) points.insert(points.end(), part.begin(), part.end());
    return ModelSetPatch(std::move(points), radius, scheme);
}

double autocorr_coefficient(const SchemeConfig& scheme, const Cyc8& z) {
    return scheme.lattice_density * covariogram(scheme.window, embed_internal(z));
}

double empirical_autocorr(const ModelSetPatch& patch, const Cyc8& z) {
    if (patch.size() == 0) throw DomainError("empty patch");
    std::size_t count = 0;
    for (const auto& x : patch.points()) {
        if (patch.contains(x + z)) ++count;
    }
    return static_cast<double>(count) / (pi * patch.radius() * patch.radius());
}

std::vector<Cyc8> support_lags(const SchemeConfig& scheme, std::size_t count, std::int64_t range) {
    if (range < 0) throw DomainError("range must be non-negative");
    std::vector<std::pair<double, Cyc8>> found;
    for (std::int64_t a = -range; a <= range; ++a)
        for (std::int64_t b = -range; b <= range; ++b)
            for (std::int64_t c = -range; c <= range; ++c)
                for (std::int64_t d = -range; d <= range; ++d) {
                    const Cyc8 z{a, b, c, d};
                    if (z == Cyc8::zero() || autocorr_coefficient(scheme, z) < scheme.lattice_density) continue;
                    const Vec2 p = embed_physical(z);
                    found.emplace_back(std::hypot(p[0], p[1]), z);
                }
    if (found.size() < count) throw DomainError("not enough lags inside the covariogram support");
    std::sort(found.begin(), found.end());
    std::vector<Cyc8> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(found[i].second);
    return out;
}

std::complex<double> diffraction_amplitude(const SchemeConfig& scheme, const HalfCyc8& k) {
    const Vec2 y = k.internal();
    // Transform of the shifted window at -y picks up exp(2 pi i y.shift).
    const std::complex<double> phase = unit(y[0] * scheme.window_shift[0] + y[1] * scheme.window_shift[1]);
    return scheme.lattice_density * indicator_ft(scheme.window, {-y[0], -y[1]}) * phase;
}

double diffraction_intensity(const SchemeConfig& scheme, const HalfCyc8& k) {
    return std::norm(diffraction_amplitude(scheme, k));
}

std::vector<IntensityEntry> intensity_table(const SchemeConfig& scheme, double phys_radius,
                                            double internal_radius) {
    if (phys_radius < 0.0 || internal_radius < 0.0) throw DomainError("radii must be non-negative");
    // For k = nu / 2: |k|^2 + |k*|^2 = (sum nu_i^2) / 2.
    const double pr2 = 4.0 * phys_radius * phys_radius;
    const double ir2 = 4.0 * internal_radius * internal_radius;
    const auto bound = static_cast<std::int64_t>(std::floor((pr2 + ir2) / 2.0));
    const auto extent = static_cast<std::int64_t>(std::floor(std::sqrt(static_cast<double>(bound))));
    std::vector<IntensityEntry> table;
    for (std::int64_t a = -extent; a <= extent; ++a) {
        for (std::int64_t b = -extent; b <= extent; ++b) {
            for (std::int64_t c = -extent; c <= extent; ++c) {
                for (std::int64_t d = -extent; d <= extent; ++d) {
                    const Cyc8 nu{a, b, c, d};
                    if (nu.norm2() > bound) continue;
                    const Vec2 p = embed_physical(nu);
                    const Vec2 q = embed_internal(nu);
                    if (p[0] * p[0] + p[1] * p[1] > pr2 || q[0] * q[0] + q[1] * q[1] > ir2) continue;
                    const HalfCyc8 k{nu};
                    table.push_back({k, diffraction_intensity(scheme, k)});
                }
            }
        }
    }
    return table;
}

std::optional<std::complex<double>> AmplitudeRatio::value() const {
    if (singular()) return std::nullopt;
    return numerator / denominator;
}

AmplitudeRatio amplitude_ratio(const Vec2& y) {
    const std::complex<double> num = 1.0 + unit(y[1]) + unit(y[0] + 2.0 * y[1]);
    const std::complex<double> den =
        1.0 + 2.0 * unit((2.0 * y[0] + 3.0 * y[1]) / 2.0) * std::cos(pi * y[1]);
    return {num, den};
}

std::optional<std::complex<double>> amplitude_ratio_alt(const Vec2& y) {
    const std::complex<double> den = unit(y[0]) + unit(y[0] + y[1]) + unit(-y[1]);
    if (std::abs(den) < kSingularThreshold) return std::nullopt;
    return 1.0 + (1.0 - unit(y[0])) / den;
}

std::optional<double> ratio_phase(const Vec2& y) {
    const auto r = amplitude_ratio(y).value();
    if (!r) return std::nullopt;
    double chi = std::arg(*r) / (2.0 * pi);
    if (chi < 0.0) chi += 1.0;
    if (chi >= 1.0) chi -= 1.0;
    return chi;
}

double singular_margin(double y2) {
    const double frac = y2 - std::floor(y2);
    return std::min(std::abs(frac - 1.0 / 3.0), std::abs(frac - 2.0 / 3.0));
}

std::optional<double> additivity_violation(const Vec2& y, const Vec2& y_prime) {
    const auto a = ratio_phase(y);
    const auto b = ratio_phase(y_prime);
    const auto s = ratio_phase({y[0] + y_prime[0], y[1] + y_prime[1]});
    if (!a || !b || !s) return std::nullopt;
    double d = *s - *a - *b;
    d -= std::round(d);
    return std::abs(d);
}

AdditivityWitness additivity_witness(double step, double margin, double threshold) {
    if (!(step > 0.0) || step >= 1.0) throw DomainError("grid step must lie in (0, 1)");
    const auto n = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = static_cast<double>(i) * step;

    std::optional<AdditivityWitness> best;
    for (double y1 : grid) {
        for (double y2 : grid) {
            if (singular_margin(y2) < margin) continue;
            for (double w1 : grid) {
                for (double w2 : grid) {
                    if (singular_margin(w2) < margin || singular_margin(y2 + w2) < margin) continue;
                    const Vec2 y{y1, y2}, w{w1, w2};
                    const auto v = additivity_violation(y, w);
                    if (!v) continue;
                    if (!best || *v > best->violation) {
                        best = AdditivityWitness{y,  w, *ratio_phase(y), *ratio_phase(w),
                                                 *ratio_phase({y1 + w1, y2 + w2}), *v};
                    }
                }
            }
        }
    }
    if (!best || best->violation <= threshold) {
        throw ClaimFalsified("no additivity violation above threshold on the search grid");
    }
    return *best;
}

MldCheck mld_check(const Polyomino& window, const IntPoint& t) {
    const FinitePointSet& cells = window.cells();
    // -t + P consists of the cells f - t.
    const FinitePointSet shifted = transform(cells, -t, false);
    FinitePointSet meet = set_intersection(cells, shifted);
    const bool single = meet.size() == 1 && meet.contains({0, 0});

    // Integer translates of the unit cell contained in the window; their union
    // must reproduce the window exactly.
    FinitePointSet translates(2);
    for (const auto& f : cells) translates.insert(f);
    const bool tiles = translates == cells;
    return MldCheck{std::move(meet), single, translates.size(), tiles};
}

bool mld_witness(const Polyomino& window, const IntPoint& t) {
    const MldCheck check = mld_check(window, t);
    return check.intersection_is_unit_cell && check.union_of_translates;
}

bool mld_witness() {
    const IntPoint t{4, 5};
    for (const auto& window : {polyomino_p1(), polyomino_p2()}) {
        if (!mld_witness(window, t) || mld_check(window, t).translate_count != 15) return false;
    }
    return true;
}

double three_point_correlation(const ModelSetPatch& patch, const Cyc8& z1, const Cyc8& z2) {
    if (patch.size() == 0) throw DomainError("empty patch");
    std::size_t count = 0;
    for (const auto& x : patch.points()) {
        if (patch.contains(x + z1) && patch.contains(x + z2)) ++count;
    }
    return static_cast<double>(count) / (pi * patch.radius() * patch.radius());
}

double three_point_coefficient(const SchemeConfig& scheme, const Cyc8& z1, const Cyc8& z2) {
    const Vec2 a = embed_internal(z1);
    const Vec2 b = embed_internal(z2);
    const auto& cells = scheme.window.cells();
    double volume = 0.0;
    for (const auto& f : cells) {
        const double f0 = static_cast<double>(f[0]), f1 = static_cast<double>(f[1]);
        for (const auto& g : cells) {
            const double g0 = static_cast<double>(g[0]) - a[0], g1 = static_cast<double>(g[1]) - a[1];
            if (std::abs(f0 - g0) >= 1.0 || std::abs(f1 - g1) >= 1.0) continue;
            for (const auto& h : cells) {
                const double h0 = static_cast<double>(h[0]) - b[0], h1 = static_cast<double>(h[1]) - b[1];
                const double wx = interval_overlap(f0 - 0.5, f0 + 0.5, g0 - 0.5, g0 + 0.5, h0 - 0.5, h0 + 0.5);
                if (wx == 0.0) continue;
                volume += wx * interval_overlap(f1 - 0.5, f1 + 0.5, g1 - 0.5, g1 + 0.5, h1 - 0.5, h1 + 0.5);
            }
        }
    }
    return scheme.lattice_density * volume;
}

ThreePointWitness three_point_search(const SchemeConfig& first, const SchemeConfig& second,
                                     const ThreePointOptions& options) {
    if (options.reference_radius >= options.radii.size()) throw DomainError("reference radius index out of range");
    const std::int64_t r = options.coeff_range;
    std::vector<Cyc8> candidates;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            for (std::int64_t c = -r; c <= r; ++c)
                for (std::int64_t d = -r; d <= r; ++d) {
                    const Cyc8 z{a, b, c, d};
                    if (z == Cyc8::zero()) continue;
                    const Vec2 p = embed_physical(z);
                    if (std::hypot(p[0], p[1]) > options.max_physical_norm) continue;
                    if (autocorr_coefficient(first, z) <= 0.0) continue;
                    candidates.push_back(z);
                }

    struct Ranked {
        double gap;
        double first_value;
        double second_value;
        Cyc8 z1, z2;
    };
    std::vector<Ranked> ranked;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            const double t1 = three_point_coefficient(first, candidates[i], candidates[j]);
            const double t2 = three_point_coefficient(second, candidates[i], candidates[j]);
            if (t1 == t2) continue;
            ranked.push_back({std::abs(t1 - t2), t1, t2, candidates[i], candidates[j]});
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Ranked& x, const Ranked& y) { return x.gap > y.gap; });
    if (ranked.size() > options.max_pairs_checked) ranked.resize(options.max_pairs_checked);

    std::vector<ModelSetPatch> patches_first, patches_second;
    for (double radius : options.radii) {
        patches_first.push_back(generate_model_set(first, radius));
        patches_second.push_back(generate_model_set(second, radius));
    }

    for (const auto& cand : ranked) {
        ThreePointWitness w{cand.z1, cand.z2, options.radii, {}, {}, cand.first_value, cand.second_value, 0.0, 0.0};
        for (std::size_t i = 0; i < options.radii.size(); ++i) {
            w.first[i] = three_point_correlation(patches_first[i], cand.z1, cand.z2);
            w.second[i] = three_point_correlation(patches_second[i], cand.z1, cand.z2);
        }
        const auto spread = [](const std::array<double, 3>& v) {
            return *std::max_element(v.begin(), v.end()) - *std::min_element(v.begin(), v.end());
        };
        w.variation = std::max(spread(w.first), spread(w.second));
        w.difference = std::abs(w.first[options.reference_radius] - w.second[options.reference_radius]);
        if (w.difference > options.factor * w.variation) return w;
    }
    throw ClaimFalsified("no pair of lags separates the three-point correlations of the two schemes");
}

}  // namespace homometry
