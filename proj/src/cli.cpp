#include "homometry/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "homometry/covariogram.hpp"
#include "homometry/error.hpp"
#include "homometry/estimators.hpp"
#include "homometry/io.hpp"
#include "homometry/octagonal.hpp"
#include "homometry/pointset.hpp"
#include "homometry/sequences.hpp"
#include "homometry/tensor.hpp"

namespace homometry::cli {

namespace {

using io::format_double;
using io::json;

// Ordered key/value pairs echoed in the output header.
using Params = std::vector<std::pair<std::string, std::string>>;

struct Output {
    std::string format = "csv";
    std::string path;
};

struct CombOptions {
    std::string kind = "rs";
    double p = 0.5;
    std::uint64_t seed = 0;
    std::int64_t n = std::int64_t{1} << 20;
    bool seed_given = false;
};

class Emitter {
public:
    Emitter(const Output& o, std::ostream& fallback) : format_(o.format) {
        if (!o.path.empty()) {
            file_ = std::make_unique<std::ofstream>(o.path);
            if (!*file_) throw DomainError("cannot open output file " + o.path);
        }
        os_ = file_ ? file_.get() : &fallback;
    }

    std::ostream& os() { return *os_; }
    bool json_format() const { return format_ == "json"; }

    void header(const std::string& command, const std::optional<std::uint64_t>& seed, const Params& params) {
        if (json_format()) return;
        *os_ << "# homometry " << kVersion << " command=" << command
             << " seed=" << (seed ? std::to_string(*seed) : std::string("none"));
        for (const auto& [k, v] : params) *os_ << ' ' << k << '=' << v;
        *os_ << '\n';
    }

    static json meta(const std::string& command, const std::optional<std::uint64_t>& seed, const Params& params) {
        json m{{"version", kVersion}, {"command", command}};
        m["seed"] = seed ? json(*seed) : json(nullptr);
        json p = json::object();
        for (const auto& [k, v] : params) p[k] = v;
        m["params"] = std::move(p);
        return m;
    }

    void table(const std::string& command, const std::optional<std::uint64_t>& seed, const Params& params,
               const io::Table& t) {
        if (json_format()) {
            *os_ << json{{"meta", meta(command, seed, params)}, {"rows", t.to_json()}}.dump(1) << '\n';
        } else {
            header(command, seed, params);
            t.write_csv(*os_);
        }
    }

private:
    std::string format_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

Polyomino load_window(const std::string& id) {
    if (id == "P1") return polyomino_p1();
    if (id == "P2") return polyomino_p2();
    if (id == "P1-P2" || id == "P2-P1") {
        const auto [f1, f2] = canonical_pair();
        return Polyomino(id == "P1-P2" ? set_difference(f1, f2) : set_difference(f2, f1));
    }
    return Polyomino(io::read_point_set(id));
}

WeightedComb make_comb(const CombOptions& c) {
    const RandomSpec spec{c.p, c.seed};
    if (c.kind == "rs") return rs_fixed_point(c.n);
    if (c.kind == "bernoulli") return bernoulli_comb(spec, c.n);
    if (c.kind == "bernoullised") return bernoullise(rs_fixed_point(c.n), spec);
    if (c.kind == "ones") return constant_comb(c.n);
    throw DomainError("unknown comb kind " + c.kind);
}

std::optional<std::uint64_t> comb_seed(const CombOptions& c) {
    if (c.kind == "rs" || c.kind == "ones") return std::nullopt;
    return c.seed;
}

Params comb_params(const CombOptions& c) {
    return {{"kind", c.kind}, {"p", format_double(c.p)}, {"n", std::to_string(c.n)}};
}

void add_comb_flags(CLI::App* sub, CombOptions& c) {
    sub->add_option("--kind", c.kind, "rs, bernoulli, bernoullised or ones")
        ->check(CLI::IsMember({"rs", "bernoulli", "bernoullised", "ones"}));
    sub->add_option("--p", c.p, "probability of +1")->check(CLI::Range(0.0, 1.0));
    sub->add_option_function<std::uint64_t>("--seed", [&c](const std::uint64_t& s) {
        c.seed = s;
        c.seed_given = true;
    }, "random seed (default 0)");
    sub->add_option("--n", c.n, "window [-n, n)")->check(CLI::PositiveNumber);
}

void add_output_flags(CLI::App* sub, Output& o) {
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.path, "write to file instead of stdout");
}

Cyc8 to_cyc8(const std::vector<std::int64_t>& v) {
    if (v.size() != 4) throw DomainError("a Z[xi8] element needs four coefficients");
    return {v[0], v[1], v[2], v[3]};
}

std::string describe(const Cyc8& z) {
    std::ostringstream os;
    os << z.c[0] << ' ' << z.c[1] << ' ' << z.c[2] << ' ' << z.c[3];
    return os.str();
}

void warn_default_seed(const CombOptions& c, std::ostream& err) {
    if (comb_seed(c) && !c.seed_given) err << "note: no --seed given, using default seed 0\n";
}

}  // namespace

std::vector<long long> parse_lags(const std::string& text) {
    std::vector<long long> lags;
    const auto dots = text.find("..");
    try {
        if (dots != std::string::npos) {
            const long long a = std::stoll(text.substr(0, dots));
            const long long b = std::stoll(text.substr(dots + 2));
            if (b < a) throw DomainError("empty lag range " + text);
            for (long long m = a; m <= b; ++m) lags.push_back(m);
            return lags;
        }
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) lags.push_back(std::stoll(item));
    } catch (const std::logic_error&) {
        throw DomainError("cannot parse lag list " + text);
    }
    if (lags.empty()) throw DomainError("empty lag list");
    return lags;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homometric structures: construction and verification", "homometry"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    std::function<int()> action;

    // homometry ---------------------------------------------------------------
    Output hom_out;
    bool builtin = false;
    std::string set_a, set_b, multiset_path;
    auto* hom = app.add_subcommand("homometry", "check equality of difference multisets");
    hom->add_flag("--builtin", builtin, "use the canonical 15-point pair");
    hom->add_option("--a", set_a, "first point set (JSON)");
    hom->add_option("--b", set_b, "second point set (JSON)");
    hom->add_option("--multiset-out", multiset_path, "write the difference multiset of the first set");
    add_output_flags(hom, hom_out);
    hom->callback([&] {
        action = [&]() -> int {
            const bool use_builtin = builtin || (set_a.empty() && set_b.empty());
            if (!use_builtin && (set_a.empty() || set_b.empty())) throw DomainError("need both --a and --b");
            const auto [f, g] = use_builtin ? canonical_pair()
                                            : std::pair{io::read_point_set(set_a), io::read_point_set(set_b)};
            const bool same = are_homometric(f, g);
            const DifferenceMultiset mf = difference_multiset(f);
            const Params params{{"sets", use_builtin ? "builtin" : set_a + "," + set_b}};
            Emitter em(hom_out, out);
            if (em.json_format()) {
                em.os() << json{{"meta", Emitter::meta("homometry", std::nullopt, params)},
                                {"homometric", same},
                                {"size_a", f.size()},
                                {"size_b", g.size()},
                                {"total_multiplicity", mf.total()},
                                {"zero_multiplicity", mf.multiplicity(IntPoint(std::vector<std::int64_t>(f.dim(), 0)))}}
                                   .dump(1)
                        << '\n';
            } else {
                em.header("homometry", std::nullopt, params);
                em.os() << "homometric: " << (same ? "true" : "false") << '\n'
                        << "size_a: " << f.size() << '\n'
                        << "size_b: " << g.size() << '\n'
                        << "total_multiplicity: " << mf.total() << '\n'
                        << "zero_multiplicity: "
                        << mf.multiplicity(IntPoint(std::vector<std::int64_t>(f.dim(), 0))) << '\n';
            }
            if (!multiset_path.empty()) {
                std::ofstream ms(multiset_path);
                if (!ms) throw DomainError("cannot open " + multiset_path);
                ms << io::to_json(mf).dump(1) << '\n';
            }
            return (use_builtin && !same) ? kFalsified : kOk;
        };
    });

    // covariogram ---------------------------------------------------------------
    Output cov_out;
    std::string cov_window = "P1";
    std::vector<double> cov_at, cov_rect;
    double cov_step = 0.25, cov_scale = 1.0;
    auto* cov = app.add_subcommand("covariogram", "evaluate or tabulate a polyomino covariogram");
    cov->add_option("--window", cov_window, "P1, P2, P1-P2, P2-P1 or a point-set JSON file");
    cov->add_option("--at", cov_at, "single point x1 x2")->expected(2)->allow_extra_args(false);
    cov->add_option("--rect", cov_rect, "x1min x1max x2min x2max")->expected(4)->allow_extra_args(false);
    cov->add_option("--step", cov_step, "grid step for --rect")->check(CLI::PositiveNumber);
    cov->add_option("--scale", cov_scale, "scaling factor alpha");
    add_output_flags(cov, cov_out);
    cov->callback([&] {
        action = [&]() -> int {
            const Polyomino w = load_window(cov_window);
            const Params params{{"window", cov_window}, {"scale", format_double(cov_scale)}};
            Emitter em(cov_out, out);
            if (!cov_at.empty()) {
                const double v = covariogram_scaled(w, cov_scale, {cov_at[0], cov_at[1]});
                if (em.json_format()) {
                    em.os() << json{{"meta", Emitter::meta("covariogram", std::nullopt, params)},
                                    {"x", cov_at},
                                    {"cov", v}}
                                   .dump(1)
                            << '\n';
                } else {
                    em.header("covariogram", std::nullopt, params);
                    em.os() << format_double(v) << '\n';
                }
                return kOk;
            }
            if (cov_rect.empty()) cov_rect = {-6.0, 6.0, -6.0, 6.0};
            io::Table t({"x1", "x2", "cov"});
            const auto steps = [&](double lo, double hi) {
                return static_cast<std::int64_t>(std::floor((hi - lo) / cov_step + 1e-9));
            };
            for (std::int64_t i = 0; i <= steps(cov_rect[0], cov_rect[1]); ++i) {
                const double x1 = cov_rect[0] + static_cast<double>(i) * cov_step;
                for (std::int64_t j = 0; j <= steps(cov_rect[2], cov_rect[3]); ++j) {
                    const double x2 = cov_rect[2] + static_cast<double>(j) * cov_step;
                    t.add({x1, x2, covariogram_scaled(w, cov_scale, {x1, x2})});
                }
            }
            Params p = params;
            p.emplace_back("step", format_double(cov_step));
            em.table("covariogram", std::nullopt, p, t);
            return kOk;
        };
    });

    // modelset ----------------------------------------------------------------
    Output ms_out;
    std::string ms_window = "P1";
    double ms_radius = 50.0;
    std::vector<double> ms_shift;
    std::size_t ms_autocorr = 0;
    auto* ms = app.add_subcommand("modelset", "generate a model-set patch");
    ms->add_option("--window", ms_window, "P1, P2, P1-P2, P2-P1 or a point-set JSON file");
    ms->add_option("--R", ms_radius, "physical radius")->check(CLI::NonNegativeNumber);
    ms->add_option("--shift", ms_shift, "window shift s1 s2")->expected(2)->allow_extra_args(false);
    ms->add_option("--autocorr", ms_autocorr, "compare empirical and limit autocorrelation at this many short lags");
    add_output_flags(ms, ms_out);
    ms->callback([&] {
        action = [&]() -> int {
            const SchemeConfig scheme = ms_shift.empty()
                                            ? make_scheme(load_window(ms_window))
                                            : make_scheme(load_window(ms_window), {ms_shift[0], ms_shift[1]});
            const ModelSetPatch patch = generate_model_set(scheme, ms_radius);
            const Params params{{"window", ms_window},
                                {"R", format_double(ms_radius)},
                                {"shift", format_double(scheme.window_shift[0]) + "," +
                                              format_double(scheme.window_shift[1])},
                                {"points", std::to_string(patch.size())}};
            Emitter em(ms_out, out);
            if (ms_autocorr > 0) {
                io::Table t({"a", "b", "c", "d", "norm", "empirical", "predicted", "relative_error"});
                for (const Cyc8& z : support_lags(scheme, ms_autocorr)) {
                    const Vec2 v = embed_physical(z);
                    const double emp = empirical_autocorr(patch, z);
                    const double eta = autocorr_coefficient(scheme, z);
                    t.add({z.c[0], z.c[1], z.c[2], z.c[3], std::hypot(v[0], v[1]), emp, eta,
                           std::abs(emp - eta) / eta});
                }
                em.table("modelset", std::nullopt, params, t);
                return kOk;
            }
            if (em.json_format()) {
                json j = io::to_json(patch);
                j["meta"] = Emitter::meta("modelset", std::nullopt, params);
                em.os() << j.dump(1) << '\n';
            } else {
                em.header("modelset", std::nullopt, params);
                io::patch_table(patch).write_csv(em.os());
            }
            return kOk;
        };
    });

    // diffraction ---------------------------------------------------------------
    Output dif_out;
    std::string dif_window = "P1";
    double dif_radius = 2.0, dif_int_radius = 2.0, dif_min = 0.0;
    auto* dif = app.add_subcommand("diffraction", "intensity table over a ball in (1/2)L");
    dif->add_option("--window", dif_window, "P1, P2, P1-P2, P2-P1, both or a point-set JSON file");
    dif->add_option("--R", dif_radius, "physical radius of k")->check(CLI::NonNegativeNumber);
    dif->add_option("--Rint", dif_int_radius, "internal radius of k*")->check(CLI::NonNegativeNumber);
    dif->add_option("--min-intensity", dif_min, "drop rows below this intensity");
    add_output_flags(dif, dif_out);
    dif->callback([&] {
        action = [&]() -> int {
            const Params params{{"window", dif_window},
                                {"R", format_double(dif_radius)},
                                {"Rint", format_double(dif_int_radius)},
                                {"min_intensity", format_double(dif_min)}};
            if (dif_window == "both") {
                // Side by side: intensities of P1 and P2 and the relative amplitude gap.
                const SchemeConfig s1 = make_scheme(polyomino_p1()), s2 = make_scheme(polyomino_p2());
                io::Table t({"ka", "kb", "kc", "kd", "half", "intensity_P1", "intensity_P2", "intensity_diff",
                             "amplitude_gap"});
                for (const auto& e : intensity_table(s1, dif_radius, dif_int_radius)) {
                    const double i2 = diffraction_intensity(s2, e.k);
                    if (std::max(e.intensity, i2) < dif_min) continue;
                    const auto a1 = diffraction_amplitude(s1, e.k), a2 = diffraction_amplitude(s2, e.k);
                    const double scale = std::max(std::abs(a1), std::abs(a2));
                    const auto& c = e.k.numerator.c;
                    t.add({c[0], c[1], c[2], c[3], std::int64_t{e.k.is_half() ? 1 : 0}, e.intensity, i2,
                           std::abs(e.intensity - i2), scale > 1e-9 ? std::abs(a1 - a2) / scale : 0.0});
                }
                Emitter em(dif_out, out);
                em.table("diffraction", std::nullopt, params, t);
                return kOk;
            }
            const SchemeConfig scheme = make_scheme(load_window(dif_window));
            std::vector<IntensityEntry> rows;
            for (const auto& e : intensity_table(scheme, dif_radius, dif_int_radius)) {
                if (e.intensity >= dif_min) rows.push_back(e);
            }
            Emitter em(dif_out, out);
            em.table("diffraction", std::nullopt, params, io::intensity_table_csv(rows));
            return kOk;
        };
    });

    // ratio -------------------------------------------------------------------
    Output rat_out;
    std::vector<double> rat_at;
    bool rat_witness = false;
    double rat_grid = 0.0, rat_step = 0.1;
    auto* rat = app.add_subcommand("ratio", "amplitude ratio of the canonical windows");
    rat->add_option("--at", rat_at, "y1 y2")->expected(2)->allow_extra_args(false);
    rat->add_flag("--witness", rat_witness, "search for an additivity violation");
    rat->add_option("--step", rat_step, "grid step of the witness search")->check(CLI::PositiveNumber);
    rat->add_option("--grid", rat_grid, "tabulate on [0,1)^2 with this step")->check(CLI::PositiveNumber);
    add_output_flags(rat, rat_out);
    rat->callback([&] {
        action = [&]() -> int {
            Emitter em(rat_out, out);
            if (rat_witness) {
                const Params params{{"step", format_double(rat_step)}};
                const AdditivityWitness w = additivity_witness(rat_step);
                if (em.json_format()) {
                    em.os() << json{{"meta", Emitter::meta("ratio", std::nullopt, params)},
                                    {"y", w.y},
                                    {"y_prime", w.y_prime},
                                    {"chi_y", w.chi_y},
                                    {"chi_y_prime", w.chi_y_prime},
                                    {"chi_sum", w.chi_sum},
                                    {"violation", w.violation}}
                                   .dump(1)
                            << '\n';
                } else {
                    em.header("ratio", std::nullopt, params);
                    em.os() << "y: " << format_double(w.y[0]) << ' ' << format_double(w.y[1]) << '\n'
                            << "y_prime: " << format_double(w.y_prime[0]) << ' ' << format_double(w.y_prime[1]) << '\n'
                            << "chi(y): " << format_double(w.chi_y) << '\n'
                            << "chi(y'): " << format_double(w.chi_y_prime) << '\n'
                            << "chi(y+y'): " << format_double(w.chi_sum) << '\n'
                            << "violation: " << format_double(w.violation) << '\n';
                }
                return kOk;
            }
            if (!rat_at.empty()) {
                const AmplitudeRatio r = amplitude_ratio({rat_at[0], rat_at[1]});
                const Params params{{"y", format_double(rat_at[0]) + "," + format_double(rat_at[1])}};
                if (em.json_format()) {
                    json j{{"meta", Emitter::meta("ratio", std::nullopt, params)}, {"singular", r.singular()}};
                    if (const auto v = r.value()) j["ratio"] = {v->real(), v->imag()};
                    em.os() << j.dump(1) << '\n';
                } else {
                    em.header("ratio", std::nullopt, params);
                    if (const auto v = r.value()) {
                        em.os() << format_double(v->real()) << ' ' << format_double(v->imag()) << '\n';
                    } else {
                        em.os() << "SINGULAR\n";
                    }
                }
                return kOk;
            }
            const double step = rat_grid > 0.0 ? rat_grid : 0.05;
            io::Table t({"y1", "y2", "re", "im", "chi", "singular"});
            const auto n = static_cast<std::int64_t>(std::floor(1.0 / step + 1e-9));
            for (std::int64_t i = 0; i < n; ++i) {
                for (std::int64_t j = 0; j < n; ++j) {
                    const Vec2 y{static_cast<double>(i) * step, static_cast<double>(j) * step};
                    const auto v = amplitude_ratio(y).value();
                    if (v) {
                        t.add({y[0], y[1], v->real(), v->imag(), *ratio_phase(y), std::int64_t{0}});
                    } else {
                        t.add({y[0], y[1], std::string(""), std::string(""), std::string(""), std::int64_t{1}});
                    }
                }
            }
            em.table("ratio", std::nullopt, {{"grid", format_double(step)}}, t);
            return kOk;
        };
    });

    // mld ---------------------------------------------------------------------
    Output mld_out;
    std::string mld_window = "both";
    std::vector<std::int64_t> mld_t{4, 5};
    auto* mld = app.add_subcommand("mld", "check P ∩ (-t + P) is the unit cell");
    mld->add_option("--window", mld_window, "P1, P2, both or a point-set JSON file");
    mld->add_option("--t", mld_t, "translation t1 t2")->expected(2)->allow_extra_args(false);
    add_output_flags(mld, mld_out);
    mld->callback([&] {
        action = [&]() -> int {
            std::vector<std::string> ids =
                mld_window == "both" ? std::vector<std::string>{"P1", "P2"} : std::vector<std::string>{mld_window};
            const IntPoint t{mld_t[0], mld_t[1]};
            io::Table table({"window", "intersection_cells", "unit_cell", "translates", "holds"});
            bool all = true;
            for (const auto& id : ids) {
                const MldCheck c = mld_check(load_window(id), t);
                const bool holds = c.intersection_is_unit_cell && c.union_of_translates;
                all = all && holds;
                table.add({id, static_cast<std::int64_t>(c.intersection.size()),
                           std::int64_t{c.intersection_is_unit_cell ? 1 : 0},
                           static_cast<std::int64_t>(c.translate_count), std::int64_t{holds ? 1 : 0}});
            }
            Emitter em(mld_out, out);
            em.table("mld", std::nullopt,
                     {{"window", mld_window}, {"t", std::to_string(mld_t[0]) + "," + std::to_string(mld_t[1])}},
                     table);
            return all ? kOk : kFalsified;
        };
    });

    // threepoint ----------------------------------------------------------------
    Output tp_out;
    std::vector<std::int64_t> tp_z1, tp_z2;
    double tp_radius = 50.0;
    bool tp_search = false;
    auto* tp = app.add_subcommand("threepoint", "three-point correlations of the P1 and P2 model sets");
    tp->add_option("--z1", tp_z1, "a b c d")->expected(4)->allow_extra_args(false);
    tp->add_option("--z2", tp_z2, "a b c d")->expected(4)->allow_extra_args(false);
    tp->add_option("--R", tp_radius, "patch radius")->check(CLI::PositiveNumber);
    tp->add_flag("--search", tp_search, "search for a discriminating pair");
    add_output_flags(tp, tp_out);
    tp->callback([&] {
        action = [&]() -> int {
            const SchemeConfig s1 = make_scheme(polyomino_p1());
            const SchemeConfig s2 = make_scheme(polyomino_p2());
            Emitter em(tp_out, out);
            if (tp_search) {
                const ThreePointWitness w = three_point_search(s1, s2);
                io::Table t({"R", "first", "second"});
                for (std::size_t i = 0; i < w.radii.size(); ++i) t.add({w.radii[i], w.first[i], w.second[i]});
                em.table("threepoint", std::nullopt,
                         {{"z1", describe(w.z1)},
                          {"z2", describe(w.z2)},
                          {"predicted_first", format_double(w.predicted_first)},
                          {"predicted_second", format_double(w.predicted_second)},
                          {"difference", format_double(w.difference)},
                          {"variation", format_double(w.variation)}},
                         t);
                return kOk;
            }
            if (tp_z1.empty() || tp_z2.empty()) throw DomainError("need --z1 and --z2, or --search");
            const Cyc8 z1 = to_cyc8(tp_z1), z2 = to_cyc8(tp_z2);
            io::Table t({"window", "empirical", "predicted"});
            t.add({std::string("P1"), three_point_correlation(generate_model_set(s1, tp_radius), z1, z2),
                   three_point_coefficient(s1, z1, z2)});
            t.add({std::string("P2"), three_point_correlation(generate_model_set(s2, tp_radius), z1, z2),
                   three_point_coefficient(s2, z1, z2)});
            em.table("threepoint", std::nullopt,
                     {{"z1", describe(z1)}, {"z2", describe(z2)}, {"R", format_double(tp_radius)}}, t);
            return kOk;
        };
    });

    // comb --------------------------------------------------------------------
    Output comb_out;
    CombOptions comb_opts;
    auto* comb = app.add_subcommand("comb", "generate a +-1 comb");
    add_comb_flags(comb, comb_opts);
    add_output_flags(comb, comb_out);
    comb->callback([&] {
        action = [&]() -> int {
            warn_default_seed(comb_opts, err);
            Emitter em(comb_out, out);
            em.table("comb", comb_seed(comb_opts), comb_params(comb_opts), io::comb_table(make_comb(comb_opts)));
            return kOk;
        };
    });

    // autocorr ----------------------------------------------------------------
    Output ac_out;
    CombOptions ac_opts;
    std::string ac_lags = "1..8";
    auto* ac = app.add_subcommand("autocorr", "empirical autocorrelation coefficients");
    add_comb_flags(ac, ac_opts);
    ac->add_option("--lags", ac_lags, "lag range a..b or list a,b,c");
    add_output_flags(ac, ac_out);
    ac->callback([&] {
        action = [&]() -> int {
            warn_default_seed(ac_opts, err);
            const WeightedComb s = make_comb(ac_opts);
            io::Table t({"m", "value", "N"});
            for (long long m : parse_lags(ac_lags)) {
                const AutocorrEstimate e = empirical_autocorr(s, m);
                t.add({static_cast<std::int64_t>(e.m), e.value, static_cast<std::int64_t>(e.N)});
            }
            Params p = comb_params(ac_opts);
            p.emplace_back("lags", ac_lags);
            Emitter em(ac_out, out);
            em.table("autocorr", comb_seed(ac_opts), p, t);
            return kOk;
        };
    });

    // periodogram ---------------------------------------------------------------
    Output pg_out;
    CombOptions pg_opts;
    std::size_t pg_bins = 512;
    std::vector<double> pg_at;
    auto* pg = app.add_subcommand("periodogram", "periodogram on an equispaced frequency grid");
    add_comb_flags(pg, pg_opts);
    pg->add_option("--bins", pg_bins, "number of bins in [0,1)")->check(CLI::PositiveNumber);
    pg->add_option("--at", pg_at, "explicit frequencies instead of the grid");
    add_output_flags(pg, pg_out);
    pg->callback([&] {
        action = [&]() -> int {
            warn_default_seed(pg_opts, err);
            const WeightedComb s = make_comb(pg_opts);
            std::vector<PeriodogramBin> bins;
            if (pg_at.empty()) {
                bins = periodogram_grid(s, pg_bins);
            } else {
                for (double k : pg_at) bins.push_back(periodogram(s, k));
            }
            double mean = 0.0;
            io::Table t({"k", "value"});
            for (const auto& b : bins) {
                t.add({b.k, b.value});
                mean += b.value;
            }
            mean /= static_cast<double>(bins.size());
            Params p = comb_params(pg_opts);
            p.emplace_back("bins", std::to_string(bins.size()));
            p.emplace_back("average", format_double(mean));
            Emitter em(pg_out, out);
            em.table("periodogram", comb_seed(pg_opts), p, t);
            return kOk;
        };
    });

    // entropy -----------------------------------------------------------------
    Output en_out;
    CombOptions en_opts;
    std::string en_blocks;
    std::optional<double> en_p;
    auto* en = app.add_subcommand("entropy", "binary entropy of p, or block entropies of a comb");
    en->add_option("--kind", en_opts.kind, "comb kind for a block-entropy sweep")
        ->check(CLI::IsMember({"rs", "bernoulli", "bernoullised", "ones"}));
    en->add_option_function<double>("--p", [&](const double& p) { en_p = p; en_opts.p = p; }, "probability of +1");
    en->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& s) {
        en_opts.seed = s;
        en_opts.seed_given = true;
    }, "random seed (default 0)");
    en->add_option("--n", en_opts.n, "window [-n, n)")->check(CLI::PositiveNumber);
    en->add_option("--L", en_blocks, "block lengths a..b or list");
    add_output_flags(en, en_out);
    en->callback([&] {
        action = [&]() -> int {
            Emitter em(en_out, out);
            if (en_blocks.empty() && en->count("--kind") == 0) {
                const double p = en_p.value_or(0.5);
                const double h = entropy(p);
                if (em.json_format()) {
                    em.os() << json{{"meta", Emitter::meta("entropy", std::nullopt, {{"p", format_double(p)}})},
                                    {"entropy", h}}
                                   .dump(1)
                            << '\n';
                } else {
                    em.header("entropy", std::nullopt, {{"p", format_double(p)}});
                    em.os() << format_double(h) << '\n';
                }
                return kOk;
            }
            warn_default_seed(en_opts, err);
            const WeightedComb s = make_comb(en_opts);
            io::Table t({"L", "entropy"});
            for (long long L : parse_lags(en_blocks.empty() ? "1..10" : en_blocks)) {
                if (L < 1) throw DomainError("block length must be positive");
                t.add({static_cast<std::int64_t>(L), block_entropy(s, static_cast<std::size_t>(L))});
            }
            Params p = comb_params(en_opts);
            p.emplace_back("L", en_blocks.empty() ? "1..10" : en_blocks);
            em.table("entropy", comb_seed(en_opts), p, t);
            return kOk;
        };
    });

    // tensor ------------------------------------------------------------------
    Output ts_out;
    CombOptions ts_opts;
    ts_opts.n = 128;
    std::size_t ts_dim = 2, ts_rank = 0, ts_block = 0;
    std::string ts_lag = "1,0";
    bool ts_export = false, ts_brute = false;
    auto* ts = app.add_subcommand("tensor", "product combs on Z^d and rank-k Bernoullisation");
    add_comb_flags(ts, ts_opts);
    ts->add_option("--d", ts_dim, "dimension")->check(CLI::PositiveNumber);
    ts->add_option("--rank", ts_rank, "rank k of the sign flip");
    ts->add_option("--lag", ts_lag, "lag vector m1,m2,...");
    ts->add_flag("--brute", ts_brute, "also evaluate the brute-force autocorrelation");
    ts->add_flag("--export", ts_export, "export the weights (2-d: matrix CSV or JSON)");
    ts->add_option("--axis-entropy", ts_block, "block length for per-axis entropy through the origin");
    add_output_flags(ts, ts_out);
    ts->callback([&] {
        action = [&]() -> int {
            warn_default_seed(ts_opts, err);
            CombOptions factor_opts = ts_opts;
            // Factors stay deterministic; randomness enters through the flip.
            if (factor_opts.kind == "bernoullised") factor_opts.kind = "rs";
            std::vector<WeightedComb> factors;
            for (std::size_t l = 0; l < ts_dim; ++l) {
                CombOptions o = factor_opts;
                o.seed = ts_opts.seed + l;
                factors.push_back(make_comb(o));
            }
            ProductComb base = product_comb(factors);
            const bool flipped = ts_opts.kind == "bernoullised" || ts_rank > 0;
            const std::size_t rank = ts_opts.kind == "bernoullised" && ts_rank == 0 ? ts_dim : ts_rank;
            const ProductComb comb =
                flipped ? rank_k_bernoullise(base, rank, RandomSpec{ts_opts.p, ts_opts.seed}) : base;
            Params p = comb_params(ts_opts);
            p.emplace_back("d", std::to_string(ts_dim));
            p.emplace_back("rank", std::to_string(flipped ? rank : 0));
            Emitter em(ts_out, out);
            const std::optional<std::uint64_t> seed = ts_opts.seed;

            if (ts_export) {
                const DenseGrid g = comb.materialise();
                if (em.json_format()) {
                    json j = io::to_json(g);
                    j["meta"] = Emitter::meta("tensor", seed, p);
                    em.os() << j.dump(1) << '\n';
                } else {
                    em.table("tensor", seed, p, io::grid_matrix(g));
                }
                return kOk;
            }
            if (ts_block > 0) {
                io::Table t({"axis", "L", "entropy"});
                const std::vector<std::int64_t> origin(ts_dim, 0);
                for (std::size_t l = 0; l < ts_dim; ++l) {
                    t.add({static_cast<std::int64_t>(l + 1), static_cast<std::int64_t>(ts_block),
                           block_entropy(comb.line(l, origin), ts_block)});
                }
                em.table("tensor", seed, p, t);
                return kOk;
            }
            const auto lag_list = parse_lags(ts_lag);
            if (lag_list.size() != ts_dim) throw DomainError("lag vector must have d components");
            const std::vector<std::int64_t> m(lag_list.begin(), lag_list.end());
            io::Table t({"method", "value"});
            if (!flipped) t.add({std::string("factorised"), product_autocorr(factors, m)});
            if (ts_brute || flipped) t.add({std::string("brute_force"), brute_force_autocorr(comb, m).value});
            p.emplace_back("lag", ts_lag);
            em.table("tensor", seed, p, t);
            return kOk;
        };
    });

    std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }
    if (!action) {
        err << app.help();
        return kUsage;
    }
    try {
        return action();
    } catch (const ClaimFalsified& e) {
        err << "claim falsified: " << e.what() << '\n';
        return kFalsified;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    }
}

}  // namespace homometry::cli
