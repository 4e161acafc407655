#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "homometry/covariogram.hpp"
#include "homometry/cyclotomic.hpp"

namespace homometry {

/// Polyomino window placed in internal space of the Z[xi_8] scheme.
struct SchemeConfig {
    Polyomino window;
    Vec2 window_shift;
    double lattice_density;
};

/// Offset used when no shift is given; keeps projected lattice points off
/// the cell edges.
Vec2 default_window_shift();

SchemeConfig make_scheme(Polyomino window);
SchemeConfig make_scheme(Polyomino window, const Vec2& window_shift);

/// Model-set points x with |x| <= radius in physical space. Points are sorted
/// lexicographically on their coefficient tuples.
class ModelSetPatch {
public:
    ModelSetPatch(std::vector<Cyc8> points, double radius, SchemeConfig scheme);

    const std::vector<Cyc8>& points() const noexcept { return points_; }
    double radius() const noexcept { return radius_; }
    const SchemeConfig& scheme() const noexcept { return scheme_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool contains(const Cyc8& x) const { return index_.count(x) != 0; }

    /// size / (pi R^2)
    double density() const;

private:
    std::vector<Cyc8> points_;
    double radius_;
    SchemeConfig scheme_;
    std::unordered_set<Cyc8, Cyc8Hash> index_;
};

/// Tolerance for the cell-boundary guard in generate_model_set.
inline constexpr double kBoundaryTolerance = 1e-12;

/// Enumerates all lattice points with |x| <= radius whose internal image,
/// minus the window shift, lies in a half-open window cell. Throws
/// DomainError if an internal image sits on a window cell edge.
ModelSetPatch generate_model_set(const SchemeConfig& scheme, double radius);

/// dens(L) * cov_W(z*).
double autocorr_coefficient(const SchemeConfig& scheme, const Cyc8& z);

/// |{x in patch : x + z in patch}| / (pi R^2)
double empirical_autocorr(const ModelSetPatch& patch, const Cyc8& z);

/// The `count` shortest nonzero z (physical norm, ties lexicographic) with
/// coefficients in [-range, range] and autocorr_coefficient >= lattice density,
/// i.e. cov_W(z*) >= 1.
std::vector<Cyc8> support_lags(const SchemeConfig& scheme, std::size_t count, std::int64_t range = 3);

std::complex<double> diffraction_amplitude(const SchemeConfig& scheme, const HalfCyc8& k);
double diffraction_intensity(const SchemeConfig& scheme, const HalfCyc8& k);

struct IntensityEntry {
    HalfCyc8 k;
    double intensity;
};

/// Intensities at all k in (1/2)L with |k| <= phys_radius and
/// |k*| <= internal_radius, sorted by numerator coefficients.
std::vector<IntensityEntry> intensity_table(const SchemeConfig& scheme, double phys_radius,
                                            double internal_radius);

// ---------------------------------------------------------------------------
// Amplitude ratio of the two canonical windows

inline constexpr double kSingularThreshold = 1e-9;

struct AmplitudeRatio {
    std::complex<double> numerator;
    std::complex<double> denominator;

    bool singular() const { return std::abs(denominator) < kSingularThreshold; }
    /// Empty when singular.
    std::optional<std::complex<double>> value() const;
};

/// (1 + e(y2) + e(y1 + 2 y2)) / (1 + 2 exp(pi i (2 y1 + 3 y2)) cos(pi y2)),
/// with e(t) = exp(2 pi i t).
AmplitudeRatio amplitude_ratio(const Vec2& y);

/// 1 + (1 - e(y1)) / (e(y1) + e(y1 + y2) + e(-y2)); the second closed form.
std::optional<std::complex<double>> amplitude_ratio_alt(const Vec2& y);

/// Phase arg(ratio) / 2 pi in [0, 1); empty at singular points.
std::optional<double> ratio_phase(const Vec2& y);

/// Distance of y2 from the set Z + {1/3, 2/3}.
double singular_margin(double y2);

struct AdditivityWitness {
    Vec2 y;
    Vec2 y_prime;
    double chi_y;
    double chi_y_prime;
    double chi_sum;
    /// |chi(y + y') - chi(y) - chi(y')| reduced to [0, 1/2].
    double violation;
};

/// Violation of chi(y + y') = chi(y) + chi(y') mod 1; empty if any argument
/// is singular.
std::optional<double> additivity_violation(const Vec2& y, const Vec2& y_prime);

/// Grid search over [0,1)^2 x [0,1)^2 with the given step; keeps points whose
/// y2 components stay `margin` away from the singular set and returns the
/// largest violation. Throws ClaimFalsified if none exceeds `threshold`.
AdditivityWitness additivity_witness(double step = 0.1, double margin = 0.05,
                                     double threshold = 0.05);

// ---------------------------------------------------------------------------
// Local derivability witness

struct MldCheck {
    /// Cells c with c in P and c + t in P, i.e. P ∩ (-t + P) as a cell set.
    FinitePointSet intersection;
    bool intersection_is_unit_cell;
    /// Number of integer translates of the unit cell that tile the window.
    std::size_t translate_count;
    bool union_of_translates;
};

MldCheck mld_check(const Polyomino& window, const IntPoint& t);
bool mld_witness(const Polyomino& window, const IntPoint& t);
/// Both canonical windows with t = (4, 5).
bool mld_witness();

// ---------------------------------------------------------------------------
// Three-point correlations

/// |{x in patch : x + z1 in patch and x + z2 in patch}| / (pi R^2)
double three_point_correlation(const ModelSetPatch& patch, const Cyc8& z1, const Cyc8& z2);

/// Limit of three_point_correlation: dens(L) vol(W ∩ (W - z1*) ∩ (W - z2*)).
double three_point_coefficient(const SchemeConfig& scheme, const Cyc8& z1, const Cyc8& z2);

struct ThreePointOptions {
    std::int64_t coeff_range = 3;
    double max_physical_norm = 2.0;
    std::array<double, 3> radii{40.0, 50.0, 60.0};
    std::size_t reference_radius = 1;  // index into radii
    double factor = 5.0;
    std::size_t max_pairs_checked = 64;
};

struct ThreePointWitness {
    Cyc8 z1;
    Cyc8 z2;
    std::array<double, 3> radii;
    std::array<double, 3> first;   // estimates for the first scheme
    std::array<double, 3> second;  // estimates for the second scheme
    double predicted_first;
    double predicted_second;
    double difference;  // at the reference radius
    double variation;   // max over both schemes of (max - min) across radii
};

/// Searches pairs (z1, z2) with coefficients in [-range, range] whose
/// three-point estimates separate the two schemes by more than `factor`
/// times their variation across radii. Candidates are ranked by the
/// difference of the limit coefficients and then checked on patches.
/// Throws ClaimFalsified when no checked pair qualifies.
ThreePointWitness three_point_search(const SchemeConfig& first, const SchemeConfig& second,
                                     const ThreePointOptions& options = {});

}  // namespace homometry
