#include "hopftube/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "hopftube/duality.hpp"
#include "hopftube/hypersurface.hpp"
#include "hopftube/polynomial.hpp"
#include "hopftube/tubes.hpp"
#include "hopftube/version.hpp"

namespace hopftube {

namespace {

constexpr double kPi = std::numbers::pi;

// ---------------------------------------------------------------- parsing --

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& v, int ln) {
    try {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos]))) ++pos;
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return x;
    } catch (const std::exception&) {
        throw ParseError(ln, "expected a real number, got '" + v + "'");
    }
}

long long parse_int(const std::string& v, int ln) {
    try {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos]))) ++pos;
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return x;
    } catch (const std::exception&) {
        throw ParseError(ln, "expected an integer, got '" + v + "'");
    }
}

unsigned long long parse_ull(const std::string& v, int ln) {
    try {
        std::size_t pos = 0;
        const unsigned long long x = std::stoull(v, &pos);
        while (pos < v.size() && std::isspace(static_cast<unsigned char>(v[pos]))) ++pos;
        if (pos != v.size()) throw std::invalid_argument("trailing");
        return x;
    } catch (const std::exception&) {
        throw ParseError(ln, "expected a nonnegative integer, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, int ln) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ParseError(ln, "expected true/false, got '" + v + "'");
}

std::vector<double> parse_double_list(const std::string& v, int ln) {
    std::vector<double> out;
    for (const auto& tok : split_ws(v)) out.push_back(parse_double(tok, ln));
    return out;
}

std::vector<int> parse_int_list(const std::string& v, int ln) {
    std::vector<int> out;
    for (const auto& tok : split_ws(v))
        out.push_back(static_cast<int>(parse_int(tok, ln)));
    return out;
}

// ------------------------------------------------------- canned polynomials --

const char* kQuadric2Text =
    "# sum of squares, three variables\n"
    "1 0 : 2 0 0\n"
    "1 0 : 0 2 0\n"
    "1 0 : 0 0 2\n";

const char* kQuadric3Text =
    "# sum of squares, four variables\n"
    "1 0 : 2 0 0 0\n"
    "1 0 : 0 2 0 0\n"
    "1 0 : 0 0 2 0\n"
    "1 0 : 0 0 0 2\n";

const char* kHyperplane2Text =
    "# coordinate hyperplane z2 = 0 in three variables\n"
    "1 0 : 0 0 1\n";

const char* kSexticText =
    "# octic with an isolated singular point at (1,0,0,0)\n"
    "1 0 : 6 0 0 2\n"
    "1 0 : 0 3 5 0\n";

// Calibrated approach curve into the singular point of kSexticText: the path
// stays exactly on the variety (w^2 = -a^3 b^5) while the two monomial scales
// cross, which drives the curvature blow-up at the smallest scales.
constexpr double kSexticCurveAmp = 0.0020016519169454285569;

CVec sextic_approach(double sigma) {
    const double m = 1000.0 * sigma;
    const double a = kSexticCurveAmp * std::pow(m, 4.0 / 3.0);
    const double b = 0.4 * std::cbrt(m);
    const Complex w =
        Complex(0.0, 1.0) * std::pow(a, 1.5) * std::pow(b, 2.5);
    CVec x(4);
    x << Complex(1.0, 0.0), Complex(a, 0.0), Complex(b, 0.0), w;
    return x;
}

// Smooth control path on the quadric: curvature stays bounded as sigma -> 0.
CVec quadric_approach(double sigma) {
    CVec x(4);
    x << Complex(1.0, 0.0), Complex(0.0, std::sqrt(1.0 + 2.0 * sigma * sigma)),
        Complex(sigma, 0.0), Complex(sigma, 0.0);
    return x;
}

// --------------------------------------------------------------- utilities --

CVec pairs_to_cvec(const std::vector<double>& pairs) {
    CVec out(static_cast<int>(pairs.size() / 2));
    for (int j = 0; j < out.size(); ++j)
        out(j) = Complex(pairs[2 * j], pairs[2 * j + 1]);
    return out;
}

std::string join_doubles(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += format_value(v[i]);
    }
    return out;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::string join_strings(const std::vector<std::string>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += v[i];
    }
    return out;
}

bool has_check(const Scenario& sc, const std::string& name) {
    return std::find(sc.checks.begin(), sc.checks.end(), name) != sc.checks.end();
}

bool needs_patch_grid(const Scenario& sc) {
    for (const char* c : {"spectrum", "hopf", "identity", "bound", "focal",
                          "rank_sweep"})
        if (has_check(sc, c)) return true;
    return false;
}

int parse_cpk_base(const std::string& base, int n) {
    if (base.size() < 3 || base.compare(0, 2, "cp") != 0) return -1;
    int k = 0;
    for (std::size_t i = 2; i < base.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(base[i]))) return -1;
        k = 10 * k + (base[i] - '0');
    }
    if (k < 1 || k > n - 1) return -2;
    return k;
}

// -------------------------------------------------------------- run context --

struct RunContext {
    Scenario sc;
    SpaceForm space;
    std::optional<AlgebraicHypersurface> poly;
    std::optional<HypersurfacePatch> main_patch;
    std::optional<HypersurfacePatch> inward_patch;
    std::vector<RVec> full_grid;

    explicit RunContext(const Scenario& s)
        : sc(s), space(s.curvature_sign, s.n) {}

    bool inward_main() const { return sc.object.orientation == "inward"; }

    RVec box_lo() const {
        RVec lo(static_cast<int>(sc.grid_lo.size()));
        for (int i = 0; i < lo.size(); ++i) lo(i) = sc.grid_lo[i];
        return lo;
    }
    RVec box_hi() const {
        RVec hi(static_cast<int>(sc.grid_hi.size()));
        for (int i = 0; i < hi.size(); ++i) hi(i) = sc.grid_hi[i];
        return hi;
    }
    RVec midpoint() const {
        RVec lo = box_lo(), hi = box_hi();
        return 0.5 * (lo + hi);
    }

    const std::vector<RVec>& grid() {
        if (full_grid.empty())
            full_grid = grid_linspace(box_lo(), box_hi(), sc.grid_counts);
        return full_grid;
    }

    HypersurfacePatch build_patch(bool inward) const {
        const ScenarioObject& ob = sc.object;
        HypersurfacePatch p;
        if (ob.kind == "sphere") {
            p = geodesic_sphere_patch(space, ob.radius, inward);
            if (!ob.center.empty()) {
                // complex Householder reflection taking e0 to the gauged center
                const CVec c = make_point(space, pairs_to_cvec(ob.center)).coords;
                CVec cg = c;
                if (std::abs(cg(0)) > 0.0) cg *= std::conj(cg(0)) / std::abs(cg(0));
                CVec w = -cg;
                w(0) += 1.0;
                const double wn2 = w.squaredNorm();
                auto reflect = [w, wn2](const CVec& z) -> CVec {
                    if (wn2 < 1e-24) return z;
                    return z - w * (2.0 * w.dot(z) / wn2);
                };
                auto chart0 = p.chart;
                auto orient0 = p.orient_ref;
                p.chart = [chart0, reflect](const RVec& u) { return reflect(chart0(u)); };
                p.orient_ref = [orient0, reflect](const RVec& u) { return reflect(orient0(u)); };
            }
        } else {
            const int k = parse_cpk_base(ob.base, sc.n);
            if (k > 0) {
                p = tube_cpk_patch(sc.n, k, ob.radius, inward);
            } else if (ob.base == "rp2") {
                p = tube_rp2_patch(ob.radius, inward);
            } else if (ob.base == "quadric") {
                p = tube_quadric_patch(sc.n, ob.radius, inward);
            } else {  // algebraic / custom_chart
                p = tube_algebraic_patch(*poly, pairs_to_cvec(ob.seed_point),
                                         ob.radius, inward);
            }
        }
        p.fd_step = sc.fd_step;
        p.richardson = sc.richardson;
        return p;
    }

    const HypersurfacePatch& patch_main() {
        if (!main_patch) main_patch = build_patch(inward_main());
        return *main_patch;
    }
    const HypersurfacePatch& patch_inward() {
        if (inward_main()) return patch_main();
        if (!inward_patch) inward_patch = build_patch(true);
        return *inward_patch;
    }
};

// Closed-form outward principal-curvature list for the canned object kinds;
// nullopt when the base has no closed form (algebraic charts).
std::optional<std::vector<std::pair<double, int>>> reference_outward(
    const Scenario& sc) {
    const double r = sc.object.radius;
    if (sc.curvature_sign < 0) {
        if (sc.object.kind != "sphere") return std::nullopt;
        std::vector<std::pair<double, int>> out;
        out.emplace_back(-1.0 / std::tanh(r), 2 * sc.n - 2);
        out.emplace_back(-2.0 / std::tanh(2.0 * r), 1);
        return out;
    }
    TubeSpectrumParams params;
    if (sc.object.kind == "sphere") {
        params = point_base_params(sc.n);
    } else {
        const int k = parse_cpk_base(sc.object.base, sc.n);
        if (k > 0)
            params = cpk_base_params(sc.n, k);
        else if (sc.object.base == "rp2")
            params = rp2_base_params(sc.n);
        else if (sc.object.base == "quadric")
            params = quadric_base_params(sc.n);
        else
            return std::nullopt;
    }
    return predicted_spectrum(params.theta_list, params.Theta, params.k, r);
}

struct ExpectedFocal {
    double r;
    int mult;
    bool from_hopf;
};

// Focal distances implied by the closed-form inward spectrum of a canned
// cp-model object.
std::optional<std::vector<ExpectedFocal>> expected_focal_list(const Scenario& sc) {
    if (sc.curvature_sign < 0) return std::nullopt;
    TubeSpectrumParams params;
    if (sc.object.kind == "sphere") {
        params = point_base_params(sc.n);
    } else {
        const int k = parse_cpk_base(sc.object.base, sc.n);
        if (k > 0)
            params = cpk_base_params(sc.n, k);
        else if (sc.object.base == "rp2")
            params = rp2_base_params(sc.n);
        else if (sc.object.base == "quadric")
            params = quadric_base_params(sc.n);
        else
            return std::nullopt;
    }
    const double r = sc.object.radius;
    std::vector<ExpectedFocal> out;
    if (params.k - 1 > 0)
        out.push_back({std::atan2(1.0, 1.0 / std::tan(r)), params.k - 1, false});
    for (const auto& [theta, mult] : params.theta_list)
        out.push_back({std::atan2(1.0, -1.0 / std::tan(theta - r)), mult, false});
    const double mu_in = -2.0 / std::tan(2.0 * (params.Theta - r));
    out.push_back({0.5 * std::atan2(2.0, mu_in), 1, true});
    std::stable_sort(out.begin(), out.end(),
                     [](const ExpectedFocal& a, const ExpectedFocal& b) {
                         if (std::abs(a.r - b.r) > 1e-12) return a.r < b.r;
                         return a.from_hopf < b.from_hopf;
                     });
    return out;
}

// deterministic thinned selection of `want` grid indices
std::vector<std::size_t> thin_indices(std::size_t total, std::size_t want) {
    std::vector<std::size_t> out;
    if (total == 0) return out;
    const std::size_t stride = std::max<std::size_t>(1, total / std::max<std::size_t>(1, want));
    for (std::size_t i = 0; i < total && out.size() < want; i += stride)
        out.push_back(i);
    return out;
}

// ------------------------------------------------------------ check runners --

CheckResult run_spectrum_check(RunContext& ctx) {
    CheckResult res;
    res.name = "spectrum";
    const ShapeSpectrum sp = spectrum(ctx.patch_main(), ctx.midpoint());
    for (int i = 0; i < sp.eigenvalues.size(); ++i)
        res.metrics.emplace_back("eig_" + std::to_string(i), sp.eigenvalues(i));
    res.metrics.emplace_back("mu", sp.mu);
    res.metrics.emplace_back("hopf_defect", sp.hopf_defect);
    auto ref = reference_outward(ctx.sc);
    if (!ref) {
        res.applicable = false;
        res.passed = true;
        res.notes.push_back("no closed-form spectrum for this base; values recorded only");
        return res;
    }
    std::vector<double> expect;
    const double sign = ctx.inward_main() ? -1.0 : 1.0;
    for (const auto& [val, mult] : *ref)
        for (int i = 0; i < mult; ++i) expect.push_back(sign * val);
    std::sort(expect.begin(), expect.end());
    double max_dev = 0.0;
    for (int i = 0; i < sp.eigenvalues.size(); ++i)
        max_dev = std::max(max_dev, std::abs(sp.eigenvalues(i) - expect[i]));
    res.metrics.emplace_back("max_deviation", max_dev);
    res.passed = max_dev <= 1e-5;
    return res;
}

CheckResult run_hopf_check(RunContext& ctx) {
    CheckResult res;
    res.name = "hopf";
    const HopfReport hr = hopf_report(ctx.patch_main(), ctx.grid(), ctx.sc.tol);
    res.metrics.emplace_back("points", static_cast<double>(hr.points_evaluated));
    res.metrics.emplace_back("failed_points", static_cast<double>(hr.failed_points.size()));
    res.metrics.emplace_back("max_defect", hr.max_defect);
    res.metrics.emplace_back("mu_mean", hr.mu_mean);
    res.metrics.emplace_back("mu_stddev", hr.mu_stddev);
    res.metrics.emplace_back("mu_max_deviation", hr.mu_max_deviation);
    res.passed = hr.is_hopf && hr.mu_stddev <= ctx.sc.tol && hr.failed_points.empty();
    return res;
}

CheckResult run_identity_check(RunContext& ctx) {
    CheckResult res;
    res.name = "identity";
    const auto& grid = ctx.grid();
    const auto idx = thin_indices(grid.size(), 20);
    double worst_identity = 0.0, worst_pairing = 0.0;
    int pairing_points = 0;
    for (std::size_t i : idx) {
        const ShapeIdentityResiduals r =
            shape_identity_residuals(ctx.patch_main(), grid[i], ctx.sc.tol);
        worst_identity = std::max(worst_identity, r.identity_residual);
        if (r.pairing_applicable) {
            ++pairing_points;
            worst_pairing = std::max(worst_pairing, r.pairing_residual);
        }
    }
    res.metrics.emplace_back("points", static_cast<double>(idx.size()));
    res.metrics.emplace_back("max_identity_residual", worst_identity);
    res.metrics.emplace_back("pairing_points", static_cast<double>(pairing_points));
    res.metrics.emplace_back("max_pairing_residual", worst_pairing);
    res.passed = worst_identity <= 1e-5 &&
                 (pairing_points == 0 || worst_pairing <= 1e-5);
    return res;
}

CheckResult run_bound_check(RunContext& ctx) {
    CheckResult res;
    res.name = "bound";
    if (ctx.sc.curvature_sign < 0) {
        res.applicable = false;
        res.passed = true;
        res.notes.push_back("bound diagnostic is defined in the positive-curvature model");
        return res;
    }
    const ShapeSpectrum sp = spectrum(ctx.patch_inward(), ctx.midpoint());
    const CurvatureBoundCheck bc = mean_curvature_bound_check(sp, ctx.sc.n);
    res.metrics.emplace_back("mu", bc.lhs);
    res.metrics.emplace_back("bound", bc.rhs);
    res.metrics.emplace_back("slack", bc.lhs - bc.rhs);
    res.applicable = bc.applicable;
    res.passed = bc.applicable ? bc.satisfied : true;
    if (!bc.applicable) res.notes.push_back("bound angle degenerate at this spectrum");
    return res;
}

CheckResult run_focal_check(RunContext& ctx) {
    CheckResult res;
    res.name = "focal";
    const ShapeSpectrum sp = spectrum(ctx.patch_inward(), ctx.midpoint());
    const FocalReport fr = focal_radii(sp, std::max(ctx.sc.tol, 1e-6));
    for (std::size_t i = 0; i < fr.radii.size(); ++i) {
        res.metrics.emplace_back("focal_" + std::to_string(i) + "_r", fr.radii[i].r);
        res.metrics.emplace_back("focal_" + std::to_string(i) + "_mult",
                                 static_cast<double>(fr.radii[i].multiplicity));
    }
    auto expect = expected_focal_list(ctx.sc);
    if (!expect) {
        res.applicable = false;
        res.passed = true;
        res.notes.push_back("no closed-form focal distances for this base; values recorded only");
        return res;
    }
    bool ok = fr.radii.size() == expect->size();
    double max_dev = 0.0;
    if (ok) {
        for (std::size_t i = 0; i < expect->size(); ++i) {
            max_dev = std::max(max_dev, std::abs(fr.radii[i].r - (*expect)[i].r));
            ok = ok && fr.radii[i].multiplicity == (*expect)[i].mult &&
                 fr.radii[i].from_hopf == (*expect)[i].from_hopf &&
                 std::abs(fr.radii[i].r - (*expect)[i].r) <= 1e-6;
        }
    }
    res.metrics.emplace_back("max_deviation", max_dev);
    res.passed = ok;
    return res;
}

CheckResult run_rank_sweep_check(RunContext& ctx, Report& rep) {
    CheckResult res;
    res.name = "rank_sweep";
    const HypersurfacePatch& patch = ctx.patch_inward();

    // focal distances measured at the box midpoint
    const ShapeSpectrum sp = spectrum(patch, ctx.midpoint());
    const FocalReport fr = focal_radii(sp, std::max(ctx.sc.tol, 1e-6));

    std::vector<double> radii(ctx.sc.sweep_steps);
    for (int i = 0; i < ctx.sc.sweep_steps; ++i)
        radii[i] = ctx.sc.sweep_lo + (ctx.sc.sweep_hi - ctx.sc.sweep_lo) * i /
                                         (ctx.sc.sweep_steps - 1);

    // coarse corner grid: 2 samples per axis
    std::vector<int> counts2(static_cast<std::size_t>(patch.param_dim()), 2);
    const std::vector<RVec> grid2 = grid_linspace(ctx.box_lo(), ctx.box_hi(), counts2);

    const std::vector<RankRow> rows = rank_sweep(patch, radii, grid2);

    ReportTable table;
    table.name = "rank_sweep";
    table.columns = {"r", "min_rank", "max_rank", "min_sigma_ratio",
                     "min_sigma_min", "max_sigma_max"};
    double global_smax = 0.0;
    for (const auto& row : rows) {
        table.rows.push_back({format_value(row.r), std::to_string(row.min_rank),
                              std::to_string(row.max_rank),
                              format_value(row.min_sigma_ratio),
                              format_value(row.min_sigma_min),
                              format_value(row.max_sigma_max)});
        global_smax = std::max(global_smax, row.max_sigma_max);
    }
    rep.tables.push_back(table);

    if (!(global_smax > 0.0)) {
        res.passed = false;
        res.notes.push_back("sweep produced no usable Jacobians");
        return res;
    }

    // collapse indicator per sampled radius, on the sweep-global scale
    std::vector<double> ind(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        ind[i] = rows[i].min_rank < 0 ? std::numeric_limits<double>::infinity()
                                      : rows[i].min_sigma_min / global_smax;

    // nearest-sample index for each focal distance inside the sweep window
    std::vector<std::size_t> focal_samples;
    std::vector<double> focal_in_range;
    for (const auto& f : fr.radii) {
        if (f.r < ctx.sc.sweep_lo || f.r > ctx.sc.sweep_hi) continue;
        std::size_t best = 0;
        for (std::size_t i = 1; i < radii.size(); ++i)
            if (std::abs(radii[i] - f.r) < std::abs(radii[best] - f.r)) best = i;
        focal_samples.push_back(best);
        focal_in_range.push_back(f.r);
    }
    res.metrics.emplace_back("focal_values_in_window",
                             static_cast<double>(focal_in_range.size()));

    auto adjacent = [&](std::size_t i) {
        for (std::size_t s : focal_samples) {
            const std::size_t lo = s > 0 ? s - 1 : 0;
            if (i >= lo && i <= s + 1) return true;
        }
        return false;
    };
    auto near_focal = [&](std::size_t i) {
        for (std::size_t s : focal_samples) {
            const std::size_t d = i > s ? i - s : s - i;
            if (d < 3) return true;
        }
        return false;
    };

    bool dips_ok = !focal_samples.empty();
    double deepest_adj = 0.0;
    for (std::size_t j = 0; j < focal_samples.size(); ++j) {
        const std::size_t s = focal_samples[j];
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = (s > 0 ? s - 1 : 0); i <= std::min(s + 1, rows.size() - 1); ++i)
            best = std::min(best, ind[i]);
        res.metrics.emplace_back("dip_" + std::to_string(j) + "_indicator", best);
        deepest_adj = std::max(deepest_adj, best);
        if (!std::isfinite(best)) dips_ok = false;
    }
    double floor_nonadj = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ind.size(); ++i)
        if (!near_focal(i)) floor_nonadj = std::min(floor_nonadj, ind[i]);
    res.metrics.emplace_back("off_focal_floor", floor_nonadj);
    // the dips at focal cells must stand clear of everything measured away
    // from them (factor-2 separation)
    if (!(deepest_adj * 2.0 < floor_nonadj)) dips_ok = false;
    (void)adjacent;

    // measured image rank at the exact focal distances: must be even
    bool ranks_ok = true;
    for (std::size_t j = 0; j < focal_in_range.size(); ++j) {
        int rank_at = -1;
        for (const RVec& u : grid2) {
            const int rk = normal_map_rank(patch, u, focal_in_range[j]);
            rank_at = std::max(rank_at, rk);
        }
        res.metrics.emplace_back("focal_" + std::to_string(j) + "_rank",
                                 static_cast<double>(rank_at));
        if (rank_at < 0 || rank_at % 2 != 0 || rank_at >= patch.param_dim())
            ranks_ok = false;
    }

    res.passed = dips_ok && ranks_ok;
    if (!dips_ok) res.notes.push_back("collapse dips not isolated at the focal cells");
    if (!ranks_ok) res.notes.push_back("focal image rank not even");
    return res;
}

CheckResult run_duality_check(RunContext& ctx) {
    CheckResult res;
    res.name = "duality";
    const AlgebraicHypersurface& f = *ctx.poly;

    const std::vector<CVec> xs = sample_variety_points(f, 50, ctx.sc.seed);
    double gauss_max = 0.0;
    for (const CVec& x : xs) {
        const IncidencePair pr = incidence_pair(f, x);
        gauss_max = std::max(gauss_max,
                             std::abs(distance(pr.x, pr.y) - kPi / 2.0));
    }
    res.metrics.emplace_back("gauss_points", static_cast<double>(xs.size()));
    res.metrics.emplace_back("max_gauss_distance_residual", gauss_max);

    double direct_max = 0.0, nearest_max = 0.0;
    const int nradii = 20;
    for (int i = 0; i < nradii; ++i) {
        const double r = 0.1 + (1.4 - 0.1) * i / (nradii - 1);
        const TubeDualityResult td =
            tube_duality_check(f, r, 8, ctx.sc.seed + 1000 + static_cast<unsigned>(i));
        direct_max = std::max(direct_max, td.max_direct_residual);
        nearest_max = std::max(nearest_max, td.max_nearest_residual);
    }
    res.metrics.emplace_back("radii", static_cast<double>(nradii));
    res.metrics.emplace_back("max_direct_circle_residual", direct_max);
    res.metrics.emplace_back("max_nearest_residual", nearest_max);

    int bid_pass = 0, bid_fail = 0, bid_na = 0;
    for (std::size_t i = 0; i < xs.size() && i < 20; ++i) {
        switch (biduality_spot_check(f, xs[i])) {
            case SpotCheck::passed: ++bid_pass; break;
            case SpotCheck::failed: ++bid_fail; break;
            case SpotCheck::inapplicable: ++bid_na; break;
        }
    }
    res.metrics.emplace_back("biduality_passed", static_cast<double>(bid_pass));
    res.metrics.emplace_back("biduality_failed", static_cast<double>(bid_fail));
    res.metrics.emplace_back("biduality_inapplicable", static_cast<double>(bid_na));
    if (bid_na > 0 && bid_pass == 0)
        res.notes.push_back("biduality has no closed-form dual map for this variety");

    res.passed = gauss_max <= 1e-9 && direct_max <= 1e-8 && bid_fail == 0;
    return res;
}

CheckResult run_membership_check(RunContext& ctx) {
    CheckResult res;
    res.name = "membership";
    const AlgebraicHypersurface& f = *ctx.poly;
    const SpaceForm sp(+1, ctx.sc.n);

    // dual of a hyperplane degenerates to a single point: verify constancy
    CVec en = CVec::Zero(sp.ambient_dim());
    en(sp.ambient_dim() - 1) = 1.0;
    const ModelPoint dual_pt = make_point(sp, en);
    const std::vector<CVec> xs = sample_variety_points(f, 20, ctx.sc.seed);
    double const_max = 0.0;
    for (const CVec& x : xs)
        const_max = std::max(const_max, distance(gauss_point(f, x), dual_pt));
    res.metrics.emplace_back("max_dual_point_spread", const_max);

    // the tube of radius pi/2 - r0 over the hyperplane is the geodesic sphere
    // of radius r0 about the dual point
    const double r0 = ctx.sc.object.radius;
    const TubeSpec tube = make_tube_spec(cpk_base(ctx.sc.n, ctx.sc.n - 1),
                                         kPi / 2.0 - r0);
    const int base_dim = tube.base.base_param_dim;
    const int fiber_dim = tube.base.normal_param_dim;
    RVec lo(base_dim + fiber_dim), hi(base_dim + fiber_dim);
    for (int i = 0; i < base_dim; ++i) { lo(i) = -0.8; hi(i) = 0.8; }
    for (int i = base_dim; i < lo.size(); ++i) { lo(i) = 0.1; hi(i) = 1.4; }
    double sphere_max = 0.0;
    for (const RVec& q : sample_box(lo, hi, 20, ctx.sc.seed + 7)) {
        const ModelPoint p = tube_point(tube, q.head(base_dim), q.tail(fiber_dim));
        sphere_max = std::max(sphere_max, std::abs(distance(p, dual_pt) - r0));
    }
    res.metrics.emplace_back("max_tube_sphere_residual", sphere_max);

    res.passed = const_max <= 1e-7 && sphere_max <= 1e-8;
    return res;
}

CheckResult run_singular_locus_check(RunContext& ctx) {
    CheckResult res;
    res.name = "singular_locus";
    const AlgebraicHypersurface& f = *ctx.poly;
    const int m = f.nvars;
    std::vector<CVec> grid;
    for (int j = 0; j < m; ++j) {
        CVec e = CVec::Zero(m);
        e(j) = 1.0;
        grid.push_back(e);
    }
    const double inv = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (const Complex s : {Complex(1, 0), Complex(-1, 0), Complex(0, 1),
                                    Complex(0, -1)}) {
                CVec v = CVec::Zero(m);
                v(i) = inv;
                v(j) = s * inv;
                grid.push_back(v);
            }
    const auto cands = singular_locus_probe(f, grid);
    res.metrics.emplace_back("candidates", static_cast<double>(cands.size()));
    const std::size_t shown = std::min<std::size_t>(cands.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
        res.metrics.emplace_back("candidate_" + std::to_string(i) + "_grad_norm",
                                 cands[i].grad_norm);
    }
    // The pass rule depends on whether the chart seed itself sits on the
    // singular set: a singular seed must be recovered by the probe, while a
    // smooth seed asserts the probe stays quiet over the whole sample grid.
    bool seed_singular = false;
    if (!ctx.sc.object.seed_point.empty()) {
        CVec P = pairs_to_cvec(ctx.sc.object.seed_point);
        P /= P.norm();
        const double gn = f.gradient(P).norm();
        const double gs = std::max(1.0, f.gradient_scale(P).norm());
        seed_singular = gn <= 1e-10 * gs;
    }
    if (!seed_singular) {
        res.passed = cands.empty();
        if (!res.passed) res.notes.push_back("unexpected singular candidates on a smooth variety");
    } else {
        const SpaceForm sp(+1, ctx.sc.n);
        const ModelPoint target = make_point(sp, pairs_to_cvec(ctx.sc.object.seed_point));
        bool found = false;
        for (const auto& c : cands)
            if (same_point(c.point, target, 1e-6)) found = true;
        res.passed = found;
        if (!found) res.notes.push_back("anchor singular point not recovered");
    }
    return res;
}

CheckResult run_blowup_check(RunContext& ctx, Report& rep) {
    CheckResult res;
    res.name = "blowup";
    const AlgebraicHypersurface& f = *ctx.poly;
    const std::vector<double>& scales = ctx.sc.blowup_scales;

    std::function<CVec(double)> curve;
    if (ctx.sc.blowup_curve == "sextic")
        curve = sextic_approach;
    else
        curve = quadric_approach;

    const CVec P = pairs_to_cvec(ctx.sc.object.seed_point);
    const auto vals = singular_blowup_probe(f, P, ctx.sc.object.radius, scales,
                                            curve, ctx.sc.fd_step,
                                            ctx.sc.richardson);

    // smooth control: the same probe machinery on the quadric's smooth path
    const AlgebraicHypersurface fq = parse_polynomial(kQuadric3Text);
    const auto ctrl = singular_blowup_probe(fq, CVec(), ctx.sc.object.radius,
                                            scales, quadric_approach,
                                            ctx.sc.fd_step, ctx.sc.richardson);

    ReportTable table;
    table.name = "blowup";
    table.columns = {"scale", "max_abs_curvature", "control_max_abs_curvature"};
    for (std::size_t i = 0; i < scales.size(); ++i) {
        table.rows.push_back(
            {format_value(scales[i]),
             vals[i] ? format_value(*vals[i]) : std::string("skipped"),
             ctrl[i] ? format_value(*ctrl[i]) : std::string("skipped")});
        if (vals[i])
            res.metrics.emplace_back("scale_" + std::to_string(i), *vals[i]);
    }
    rep.tables.push_back(table);

    bool ok = true;
    for (const auto& v : vals) ok = ok && v.has_value();
    for (const auto& v : ctrl) ok = ok && v.has_value();
    if (!ok) {
        res.passed = false;
        res.notes.push_back("probe skipped an approach point as singular");
        return res;
    }
    const std::size_t N = vals.size();
    bool increasing = N >= 3;
    for (std::size_t i = N - 3; i + 1 < N && increasing; ++i)
        increasing = *vals[i] < *vals[i + 1];
    const bool final_large = *vals[N - 1] > 1e3;
    double ctrl_max = 0.0;
    for (const auto& v : ctrl) ctrl_max = std::max(ctrl_max, *v);
    const bool ctrl_flat = ctrl_max <= 10.0 * *ctrl[0];
    res.metrics.emplace_back("final_value", *vals[N - 1]);
    res.metrics.emplace_back("control_first", *ctrl[0]);
    res.metrics.emplace_back("control_max", ctrl_max);
    res.passed = increasing && final_large && ctrl_flat;
    if (!increasing) res.notes.push_back("tail of the curvature table is not increasing");
    if (!final_large) res.notes.push_back("final curvature below the blow-up threshold");
    if (!ctrl_flat) res.notes.push_back("smooth control drifted by more than 10x");
    return res;
}

// ---------------------------------------------------------------- validation --

void fail(const std::string& msg) { throw PreconditionError("scenario: " + msg); }

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> v = {
        "spectrum", "hopf",       "identity",       "bound", "focal",
        "rank_sweep", "duality",  "membership",     "singular_locus", "blowup"};
    return v;
}

std::optional<AlgebraicHypersurface> validate_and_load(Scenario& sc) {
    if (sc.name.empty()) fail("missing name");
    if (sc.curvature_sign != 1 && sc.curvature_sign != -1) fail("space must be cp or ch");
    if (sc.n < 2) fail("n must be >= 2");
    ScenarioObject& ob = sc.object;
    if (ob.kind != "sphere" && ob.kind != "tube" && ob.kind != "custom_chart")
        fail("object kind must be sphere, tube or custom_chart");
    if (ob.orientation.empty())
        ob.orientation = ob.kind == "sphere" ? "inward" : "outward";
    if (ob.orientation != "inward" && ob.orientation != "outward")
        fail("orientation must be inward or outward");
    if (sc.curvature_sign > 0) {
        if (!(ob.radius > 0.0 && ob.radius < kPi / 2.0))
            fail("radius must lie in (0, pi/2) in the cp model");
    } else {
        if (!(ob.radius > 0.0)) fail("radius must be positive");
        if (ob.kind != "sphere") fail("tube bases are defined in the cp model");
        if (!ob.center.empty()) fail("sphere center is supported in the cp model only");
    }
    std::optional<AlgebraicHypersurface> poly;
    const bool algebraic_base =
        ob.kind == "custom_chart" || (ob.kind == "tube" && ob.base == "algebraic");
    if (ob.kind == "tube" || ob.kind == "custom_chart") {
        if (ob.kind == "tube" && !algebraic_base) {
            const int k = parse_cpk_base(ob.base, sc.n);
            if (ob.base == "rp2") {
                if (sc.n != 2) fail("rp2 base requires n = 2");
            } else if (ob.base == "quadric") {
                if (sc.n != 2 && sc.n != 3) fail("quadric base requires n = 2 or 3");
            } else if (k == -1) {
                fail("unknown tube base '" + ob.base + "'");
            } else if (k == -2) {
                fail("cp base index must satisfy 1 <= k <= n-1");
            }
        }
        if (algebraic_base) {
            if (ob.polynomial_text.empty() && ob.polynomial_file.empty())
                fail("algebraic base needs a polynomial");
            poly = ob.polynomial_text.empty()
                       ? parse_polynomial_file(ob.polynomial_file)
                       : parse_polynomial(ob.polynomial_text);
            if (poly->nvars != sc.n + 1)
                fail("polynomial has " + std::to_string(poly->nvars) +
                     " variables, scenario needs " + std::to_string(sc.n + 1));
            if (ob.seed_point.empty())
                fail("algebraic base needs a seed_point");
            if (static_cast<int>(ob.seed_point.size()) != 2 * (sc.n + 1))
                fail("seed_point needs " + std::to_string(2 * (sc.n + 1)) +
                     " reals (re/im pairs)");
        }
    }
    if (!ob.center.empty() &&
        static_cast<int>(ob.center.size()) != 2 * (sc.n + 1))
        fail("center needs " + std::to_string(2 * (sc.n + 1)) + " reals (re/im pairs)");
    if (sc.checks.empty()) fail("no checks listed");
    for (const auto& c : sc.checks) {
        if (std::find(known_checks().begin(), known_checks().end(), c) ==
            known_checks().end())
            fail("unknown check '" + c + "'");
    }
    if (needs_patch_grid(sc)) {
        const std::size_t dim = static_cast<std::size_t>(2 * sc.n - 1);
        if (sc.grid_counts.size() != dim || sc.grid_lo.size() != dim ||
            sc.grid_hi.size() != dim)
            fail("grid counts/lo/hi need " + std::to_string(dim) + " entries");
        for (std::size_t i = 0; i < dim; ++i) {
            if (sc.grid_counts[i] < 1) fail("grid counts must be >= 1");
            if (!(sc.grid_lo[i] <= sc.grid_hi[i])) fail("grid lo must not exceed hi");
        }
    }
    for (const char* c : {"duality", "membership", "singular_locus", "blowup"}) {
        if (has_check(sc, c) && !poly) {
            if (ob.polynomial_text.empty() && ob.polynomial_file.empty())
                fail(std::string(c) + " check needs a polynomial object");
            poly = ob.polynomial_text.empty()
                       ? parse_polynomial_file(ob.polynomial_file)
                       : parse_polynomial(ob.polynomial_text);
        }
    }
    if (has_check(sc, "blowup")) {
        if (sc.blowup_scales.empty()) fail("blowup check needs approach scales");
        if (sc.blowup_curve != "sextic" && sc.blowup_curve != "quadric")
            fail("blowup curve must be sextic or quadric");
        if (sc.object.seed_point.empty()) fail("blowup check needs the anchor seed_point");
    }
    if (has_check(sc, "rank_sweep")) {
        if (!(sc.sweep_steps >= 2)) fail("sweep steps must be >= 2");
        if (!(sc.sweep_lo > 0.0 && sc.sweep_lo < sc.sweep_hi))
            fail("sweep window must satisfy 0 < lo < hi");
    }
    if (!(sc.fd_step > 0.0)) fail("fd_step must be positive");
    if (!(sc.tol > 0.0)) fail("tol must be positive");
    return poly;
}

// -------------------------------------------------------------------- echo --

std::vector<std::pair<std::string, std::string>> make_echo(
    const Scenario& sc, const std::optional<AlgebraicHypersurface>& poly) {
    std::vector<std::pair<std::string, std::string>> e;
    e.emplace_back("name", sc.name);
    e.emplace_back("description", sc.description);
    e.emplace_back("space", sc.curvature_sign > 0 ? "cp" : "ch");
    e.emplace_back("n", std::to_string(sc.n));
    e.emplace_back("object.kind", sc.object.kind);
    if (sc.object.kind != "sphere" && !sc.object.base.empty())
        e.emplace_back("object.base", sc.object.base);
    e.emplace_back("object.radius", format_value(sc.object.radius));
    e.emplace_back("object.orientation", sc.object.orientation);
    if (!sc.object.center.empty())
        e.emplace_back("object.center", join_doubles(sc.object.center));
    if (!sc.object.seed_point.empty())
        e.emplace_back("object.seed_point", join_doubles(sc.object.seed_point));
    if (poly) {
        std::string p = format_polynomial(*poly);
        std::string flat;
        for (char c : p) {
            if (c == '\n') {
                if (!flat.empty() && flat.back() != ';') flat += "; ";
            } else {
                flat += c;
            }
        }
        while (!flat.empty() && (flat.back() == ' ' || flat.back() == ';'))
            flat.pop_back();
        e.emplace_back("object.polynomial", flat);
    }
    e.emplace_back("checks", join_strings(sc.checks));
    if (!sc.grid_counts.empty()) {
        e.emplace_back("grid.counts", join_ints(sc.grid_counts));
        e.emplace_back("grid.lo", join_doubles(sc.grid_lo));
        e.emplace_back("grid.hi", join_doubles(sc.grid_hi));
    }
    e.emplace_back("seed", std::to_string(sc.seed));
    e.emplace_back("fd_step", format_value(sc.fd_step));
    e.emplace_back("richardson", sc.richardson ? "true" : "false");
    e.emplace_back("tol", format_value(sc.tol));
    if (has_check(sc, "rank_sweep")) {
        e.emplace_back("sweep.lo", format_value(sc.sweep_lo));
        e.emplace_back("sweep.hi", format_value(sc.sweep_hi));
        e.emplace_back("sweep.steps", std::to_string(sc.sweep_steps));
    }
    if (has_check(sc, "blowup")) {
        e.emplace_back("blowup.scales", join_doubles(sc.blowup_scales));
        e.emplace_back("blowup.curve", sc.blowup_curve);
    }
    return e;
}

}  // namespace

// ------------------------------------------------------------------ parsing --

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int ln = 0;
    while (std::getline(in, raw)) {
        ++ln;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(ln, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section != "scenario" && section != "object" &&
                section != "checks" && section != "grid" &&
                section != "numerics" && section != "sweep" &&
                section != "blowup")
                throw ParseError(ln, "unknown section [" + section + "]");
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(ln, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) throw ParseError(ln, "empty key");
        if (section.empty())
            throw ParseError(ln, "key '" + key + "' outside any section");

        if (section == "scenario") {
            if (key == "name") sc.name = val;
            else if (key == "description") sc.description = val;
            else if (key == "space") {
                if (val == "cp") sc.curvature_sign = +1;
                else if (val == "ch") sc.curvature_sign = -1;
                else throw ParseError(ln, "space must be cp or ch");
            } else if (key == "n") sc.n = static_cast<int>(parse_int(val, ln));
            else throw ParseError(ln, "unknown key '" + key + "' in [scenario]");
        } else if (section == "object") {
            if (key == "kind") sc.object.kind = val;
            else if (key == "radius") sc.object.radius = parse_double(val, ln);
            else if (key == "orientation") sc.object.orientation = val;
            else if (key == "base") sc.object.base = val;
            else if (key == "polynomial") sc.object.polynomial_file = val;
            else if (key == "seed_point") sc.object.seed_point = parse_double_list(val, ln);
            else if (key == "center") sc.object.center = parse_double_list(val, ln);
            else throw ParseError(ln, "unknown key '" + key + "' in [object]");
        } else if (section == "checks") {
            if (key == "names") sc.checks = split_ws(val);
            else throw ParseError(ln, "unknown key '" + key + "' in [checks]");
        } else if (section == "grid") {
            if (key == "counts") sc.grid_counts = parse_int_list(val, ln);
            else if (key == "lo") sc.grid_lo = parse_double_list(val, ln);
            else if (key == "hi") sc.grid_hi = parse_double_list(val, ln);
            else throw ParseError(ln, "unknown key '" + key + "' in [grid]");
        } else if (section == "numerics") {
            if (key == "seed") sc.seed = parse_ull(val, ln);
            else if (key == "fd_step") sc.fd_step = parse_double(val, ln);
            else if (key == "richardson") sc.richardson = parse_bool(val, ln);
            else if (key == "tol") sc.tol = parse_double(val, ln);
            else throw ParseError(ln, "unknown key '" + key + "' in [numerics]");
        } else if (section == "sweep") {
            if (key == "lo") sc.sweep_lo = parse_double(val, ln);
            else if (key == "hi") sc.sweep_hi = parse_double(val, ln);
            else if (key == "steps") sc.sweep_steps = static_cast<int>(parse_int(val, ln));
            else throw ParseError(ln, "unknown key '" + key + "' in [sweep]");
        } else {  // blowup
            if (key == "scales") sc.blowup_scales = parse_double_list(val, ln);
            else if (key == "curve") sc.blowup_curve = val;
            else throw ParseError(ln, "unknown key '" + key + "' in [blowup]");
        }
    }
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Scenario sc = parse_scenario(buf.str());
    if (!sc.object.polynomial_file.empty()) {
        const std::filesystem::path p(sc.object.polynomial_file);
        if (p.is_relative()) {
            const std::filesystem::path dir =
                std::filesystem::path(path).parent_path();
            sc.object.polynomial_file = (dir / p).string();
        }
    }
    return sc;
}

// ------------------------------------------------------------------- canned --

namespace {

Scenario make_sphere_cp2() {
    Scenario sc;
    sc.name = "sphere_cp2";
    sc.description = "geodesic sphere of radius pi/3 in the projective plane";
    sc.curvature_sign = +1;
    sc.n = 2;
    sc.object.kind = "sphere";
    sc.object.radius = kPi / 3.0;
    sc.checks = {"spectrum", "hopf", "identity", "bound", "focal"};
    sc.grid_counts = {5, 5, 5};
    sc.grid_lo = {0.55, 0.6, 0.65};
    sc.grid_hi = {1.05, 1.1, 1.15};
    sc.seed = 1;
    return sc;
}

Scenario make_sphere_ch2() {
    Scenario sc;
    sc.name = "sphere_ch2";
    sc.description = "geodesic sphere of radius 0.7 in the complex hyperbolic plane";
    sc.curvature_sign = -1;
    sc.n = 2;
    sc.object.kind = "sphere";
    sc.object.radius = 0.7;
    sc.checks = {"spectrum", "hopf", "identity"};
    sc.grid_counts = {5, 5, 5};
    sc.grid_lo = {0.4, 0.5, 0.6};
    sc.grid_hi = {1.0, 1.1, 1.2};
    sc.seed = 2;
    return sc;
}

Scenario make_tube_cp1_in_cp2() {
    Scenario sc;
    sc.name = "tube_cp1_in_cp2";
    sc.description = "tube of radius pi/6 over a complex line in the projective plane";
    sc.curvature_sign = +1;
    sc.n = 2;
    sc.object.kind = "tube";
    sc.object.base = "cp1";
    sc.object.radius = kPi / 6.0;
    sc.checks = {"spectrum", "hopf", "identity", "bound", "focal", "rank_sweep"};
    sc.grid_counts = {5, 5, 5};
    sc.grid_lo = {-0.5, -0.4, 0.2};
    sc.grid_hi = {0.5, 0.6, 1.2};
    sc.seed = 3;
    sc.sweep_lo = 0.06;
    sc.sweep_hi = 2.2;
    sc.sweep_steps = 50;
    return sc;
}

Scenario make_tube_cp1_in_cp3() {
    Scenario sc;
    sc.name = "tube_cp1_in_cp3";
    sc.description = "tube of radius pi/5 over a complex line in projective 3-space";
    sc.curvature_sign = +1;
    sc.n = 3;
    sc.object.kind = "tube";
    sc.object.base = "cp1";
    sc.object.radius = kPi / 5.0;
    sc.checks = {"spectrum", "hopf", "identity", "focal"};
    sc.grid_counts = {3, 3, 3, 2, 2};
    sc.grid_lo = {-0.3, -0.4, 0.3, 0.4, 0.5};
    sc.grid_hi = {0.5, 0.4, 0.9, 0.9, 1.0};
    sc.seed = 4;
    return sc;
}

Scenario make_tube_quadric_cp2() {
    Scenario sc;
    sc.name = "tube_quadric_cp2";
    sc.description = "tube of radius pi/8 over the plane quadric";
    sc.curvature_sign = +1;
    sc.n = 2;
    sc.object.kind = "tube";
    sc.object.base = "quadric";
    sc.object.radius = kPi / 8.0;
    sc.checks = {"spectrum", "hopf", "identity", "focal"};
    sc.grid_counts = {5, 5, 5};
    sc.grid_lo = {-0.25, -0.3, 0.2};
    sc.grid_hi = {0.45, 0.3, 1.2};
    sc.seed = 5;
    return sc;
}

Scenario make_tube_quadric_cp3() {
    Scenario sc;
    sc.name = "tube_quadric_cp3";
    sc.description = "tube of radius pi/8 over the quadric surface in projective 3-space";
    sc.curvature_sign = +1;
    sc.n = 3;
    sc.object.kind = "tube";
    sc.object.base = "quadric";
    sc.object.radius = kPi / 8.0;
    sc.checks = {"spectrum", "hopf", "identity"};
    sc.grid_counts = {3, 3, 3, 2, 2};
    sc.grid_lo = {-0.3, -0.2, -0.05, -0.15, 0.2};
    sc.grid_hi = {0.3, 0.4, 0.55, 0.35, 1.2};
    sc.seed = 6;
    return sc;
}

Scenario make_tube_rp2_in_cp2() {
    Scenario sc;
    sc.name = "tube_rp2_in_cp2";
    sc.description = "tube of radius pi/8 over the real projective plane";
    sc.curvature_sign = +1;
    sc.n = 2;
    sc.object.kind = "tube";
    sc.object.base = "rp2";
    sc.object.radius = kPi / 8.0;
    sc.checks = {"spectrum", "hopf", "identity", "focal"};
    sc.grid_counts = {5, 5, 5};
    sc.grid_lo = {-0.2, -0.3, 0.1};
    sc.grid_hi = {0.6, 0.5, 1.1};
    sc.seed = 7;
    return sc;
}

Scenario make_singular_sextic() {
    Scenario sc;
    sc.name = "singular_sextic";
    sc.description = "curvature blow-up toward the singular point of an octic surface";
    sc.curvature_sign = +1;
    sc.n = 3;
    sc.object.kind = "tube";
    sc.object.base = "algebraic";
    sc.object.polynomial_text = kSexticText;
    sc.object.radius = 0.5;
    sc.object.seed_point = {1, 0, 0, 0, 0, 0, 0, 0};
    sc.checks = {"blowup", "singular_locus"};
    sc.blowup_scales = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
    sc.blowup_curve = "sextic";
    sc.seed = 8;
    return sc;
}

Scenario make_duality_quadric() {
    Scenario sc;
    sc.name = "duality_quadric";
    sc.description = "projective duality checks on the self-dual plane quadric";
    sc.curvature_sign = +1;
    sc.n = 2;
    sc.object.kind = "tube";
    sc.object.base = "algebraic";
    sc.object.polynomial_text = kQuadric2Text;
    sc.object.radius = kPi / 4.0;
    sc.object.seed_point = {1, 0, 0, 1, 0, 0};
    sc.checks = {"duality", "singular_locus"};
    sc.seed = 9;
    return sc;
}

Scenario make_hyperplane_dual_point() {
    Scenario sc;
    sc.name = "hyperplane_dual_point";
    sc.description = "the dual of a hyperplane is a point; its tubes are spheres about it";
    sc.curvature_sign = +1;
    sc.n = 2;
    sc.object.kind = "tube";
    sc.object.base = "algebraic";
    sc.object.polynomial_text = kHyperplane2Text;
    sc.object.radius = 0.4;
    sc.object.seed_point = {1, 0, 0, 0, 0, 0};
    sc.checks = {"duality", "membership"};
    sc.seed = 10;
    return sc;
}

}  // namespace

const std::vector<Scenario>& canned_scenarios() {
    static const std::vector<Scenario> all = {
        make_sphere_cp2(),        make_sphere_ch2(),
        make_tube_cp1_in_cp2(),   make_tube_cp1_in_cp3(),
        make_tube_quadric_cp2(),  make_tube_quadric_cp3(),
        make_tube_rp2_in_cp2(),   make_singular_sextic(),
        make_duality_quadric(),   make_hyperplane_dual_point()};
    return all;
}

std::string list_scenarios() {
    std::ostringstream out;
    for (const auto& sc : canned_scenarios())
        out << sc.name << " - " << sc.description << "\n";
    return out.str();
}

Scenario resolve_scenario(const std::string& name_or_path) {
    for (const auto& sc : canned_scenarios())
        if (sc.name == name_or_path) return sc;
    if (std::filesystem::exists(name_or_path))
        return parse_scenario_file(name_or_path);
    throw Error("no canned scenario or config file named '" + name_or_path + "'");
}

// --------------------------------------------------------------------- run --

Report run_scenario(const Scenario& scenario, const RunOverrides& overrides) {
    Scenario sc = scenario;
    if (overrides.seed) sc.seed = *overrides.seed;
    if (overrides.fd_step) sc.fd_step = *overrides.fd_step;
    if (overrides.tol) sc.tol = *overrides.tol;

    RunContext ctx(sc);
    ctx.poly = validate_and_load(ctx.sc);

    Report rep;
    rep.scenario_name = ctx.sc.name;
    rep.version = kVersion;
    rep.seed = ctx.sc.seed;
    rep.scenario_echo = make_echo(ctx.sc, ctx.poly);

    for (const auto& name : ctx.sc.checks) {
        try {
            if (name == "spectrum") rep.checks.push_back(run_spectrum_check(ctx));
            else if (name == "hopf") rep.checks.push_back(run_hopf_check(ctx));
            else if (name == "identity") rep.checks.push_back(run_identity_check(ctx));
            else if (name == "bound") rep.checks.push_back(run_bound_check(ctx));
            else if (name == "focal") rep.checks.push_back(run_focal_check(ctx));
            else if (name == "rank_sweep") rep.checks.push_back(run_rank_sweep_check(ctx, rep));
            else if (name == "duality") rep.checks.push_back(run_duality_check(ctx));
            else if (name == "membership") rep.checks.push_back(run_membership_check(ctx));
            else if (name == "singular_locus") rep.checks.push_back(run_singular_locus_check(ctx));
            else if (name == "blowup") rep.checks.push_back(run_blowup_check(ctx, rep));
        } catch (const Error& e) {
            CheckResult bad;
            bad.name = name;
            bad.passed = false;
            bad.notes.push_back(std::string("check aborted: ") + e.what());
            rep.checks.push_back(bad);
        }
    }
    return rep;
}

}  // namespace hopftube
