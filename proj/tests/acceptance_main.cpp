// Acceptance gate: twelve structural criteria with pinned tolerances.  Each
// prints exactly one [PASS]/[FAIL] line; the process exits nonzero when any
// criterion fails.  argv[1] points at the bundled data directory.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "hopftube/duality.hpp"
#include "hopftube/hypersurface.hpp"
#include "hopftube/polynomial.hpp"
#include "hopftube/report.hpp"
#include "hopftube/scenario.hpp"
#include "hopftube/tubes.hpp"

using namespace hopftube;
using std::numbers::pi;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

void report_line(int idx, bool ok, const char* what, const std::string& detail,
                 long ms) {
    std::printf("[%s] %2d. %s: %s [%ld ms]\n", ok ? "PASS" : "FAIL", idx, what,
                detail.c_str(), ms);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

RVec rv(std::initializer_list<double> xs) {
    RVec u(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) u(i++) = x;
    return u;
}

HypersurfacePatch rich(HypersurfacePatch p) {
    p.fd_step = 1e-3;
    p.richardson = true;
    return p;
}

std::vector<RVec> canned_grid(const char* scenario_name) {
    Scenario sc = resolve_scenario(scenario_name);
    RVec lo(static_cast<int>(sc.grid_lo.size()));
    RVec hi(static_cast<int>(sc.grid_hi.size()));
    for (std::size_t i = 0; i < sc.grid_lo.size(); ++i) {
        lo(static_cast<int>(i)) = sc.grid_lo[i];
        hi(static_cast<int>(i)) = sc.grid_hi[i];
    }
    return grid_linspace(lo, hi, sc.grid_counts);
}

std::vector<RVec> thin(const std::vector<RVec>& grid, std::size_t want) {
    if (grid.size() <= want) return grid;
    std::vector<RVec> out;
    const double stride = static_cast<double>(grid.size()) / static_cast<double>(want);
    for (std::size_t i = 0; i < want; ++i)
        out.push_back(grid[static_cast<std::size_t>(i * stride)]);
    return out;
}

struct Example {
    const char* label;
    HypersurfacePatch patch;
    std::vector<RVec> grid;
    int curvature_sign;
};

// the seven canned Hopf examples (two spheres, five tubes), Richardson step
std::vector<Example> canned_examples() {
    std::vector<Example> ex;
    ex.push_back({"sphere_cp2",
                  rich(geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, true)),
                  canned_grid("sphere_cp2"), +1});
    ex.push_back({"sphere_ch2",
                  rich(geodesic_sphere_patch(SpaceForm(-1, 2), 0.7, true)),
                  canned_grid("sphere_ch2"), -1});
    ex.push_back({"tube_cp1_in_cp2", rich(tube_cpk_patch(2, 1, pi / 6, false)),
                  canned_grid("tube_cp1_in_cp2"), +1});
    ex.push_back({"tube_cp1_in_cp3", rich(tube_cpk_patch(3, 1, pi / 5, false)),
                  canned_grid("tube_cp1_in_cp3"), +1});
    ex.push_back({"tube_quadric_cp2",
                  rich(tube_quadric_patch(2, pi / 8, false)),
                  canned_grid("tube_quadric_cp2"), +1});
    ex.push_back({"tube_quadric_cp3",
                  rich(tube_quadric_patch(3, pi / 8, false)),
                  canned_grid("tube_quadric_cp3"), +1});
    ex.push_back({"tube_rp2_in_cp2", rich(tube_rp2_patch(pi / 8, false)),
                  canned_grid("tube_rp2_in_cp2"), +1});
    return ex;
}

bool is_tube(const Example& e) {
    return std::string(e.label).rfind("tube_", 0) == 0;
}

// frozen approach curve toward the octic's singular point
const double kCurveAmp = 0.0020016519169454285569;
CVec octic_approach(double sigma) {
    const double m = 1000.0 * sigma;
    const double a = kCurveAmp * std::pow(m, 4.0 / 3.0);
    const double b = 0.4 * std::cbrt(m);
    const Complex w = Complex(0, 1) * std::pow(a, 1.5) * std::pow(b, 2.5);
    CVec x(4);
    x << Complex(1, 0), Complex(a, 0), Complex(b, 0), w;
    return x;
}

// smooth control path on the quadric surface
CVec quadric_approach(double sigma) {
    CVec x(4);
    x << Complex(1, 0), Complex(0, 1) * std::sqrt(1.0 + 2.0 * sigma * sigma),
        Complex(sigma, 0), Complex(sigma, 0);
    return x;
}

std::vector<std::pair<double, int>> tube_reference(const Example& e) {
    const std::string label = e.label;
    if (label == "tube_cp1_in_cp2")
        return predicted_spectrum(cpk_base_params(2, 1).theta_list, pi / 2, 1,
                                  pi / 6);
    if (label == "tube_cp1_in_cp3") {
        auto ps = cpk_base_params(3, 1);
        return predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 5);
    }
    if (label == "tube_quadric_cp2") {
        auto ps = quadric_base_params(2);
        return predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 8);
    }
    if (label == "tube_quadric_cp3") {
        auto ps = quadric_base_params(3);
        return predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 8);
    }
    auto ps = rp2_base_params(2);
    return predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 8);
}

std::vector<double> flatten_sorted(const std::vector<std::pair<double, int>>& sp) {
    std::vector<double> out;
    for (const auto& [v, m] : sp)
        for (int i = 0; i < m; ++i) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string data_dir = argc > 1 ? argv[1] : "data";

    // 1. geodesic-sphere spectrum against the closed form, plain step 1e-4
    {
        const auto t0 = Clock::now();
        HypersurfacePatch p =
            geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, true);
        p.fd_step = 1e-4;
        p.richardson = false;
        ShapeSpectrum sp = spectrum(p, rv({0.7, 0.8, 0.9}));
        const double c3 = 1.0 / std::sqrt(3.0);
        const double expect[3] = {-2.0 * c3, c3, c3};
        double dev = 0;
        for (int i = 0; i < 3; ++i)
            dev = std::max(dev, std::abs(sp.eigenvalues(i) - expect[i]));
        const long ms = ms_since(t0);
        report_line(1, dev <= 1e-5 && ms < 1000,
                    "geodesic-sphere spectrum vs closed form",
                    fmt("max_dev=%.2e (tol 1e-05)", dev), ms);
    }

    // computed once, shared by criteria 2 and 3
    std::vector<Example> examples = canned_examples();

    // 2. constancy of the principal value of the structure direction
    {
        const auto t0 = Clock::now();
        const char* wanted[] = {"sphere_cp2", "tube_cp1_in_cp2",
                                "tube_quadric_cp3", "tube_rp2_in_cp2"};
        double worst_stddev = 0;
        std::size_t fewest = SIZE_MAX;
        bool ok = true;
        for (const char* name : wanted) {
            for (const Example& e : examples) {
                if (std::string(e.label) != name) continue;
                HopfReport hr = hopf_report(e.patch, e.grid, 1e-6);
                worst_stddev = std::max(worst_stddev, hr.mu_stddev);
                fewest = std::min(fewest,
                                  static_cast<std::size_t>(hr.points_evaluated));
                ok = ok && hr.failed_points.empty() && hr.mu_stddev <= 1e-6;
            }
        }
        const long ms = ms_since(t0);
        ok = ok && fewest >= 100 && ms < 30000;
        report_line(2, ok, "principal value constant across four surfaces",
                    fmt("worst_stddev=%.2e (tol 1e-06), min_points=%.0f",
                        worst_stddev, static_cast<double>(fewest)),
                    ms);
    }

    // 3. structure-vector defect on every grid point of every canned tube
    {
        const auto t0 = Clock::now();
        double worst = 0;
        bool ok = true;
        for (const Example& e : examples) {
            if (!is_tube(e)) continue;
            HopfReport hr = hopf_report(e.patch, e.grid, 1e-6);
            worst = std::max(worst, hr.max_defect);
            ok = ok && hr.failed_points.empty() && hr.is_hopf;
        }
        ok = ok && worst <= 1e-6;
        report_line(3, ok, "tube structure-vector defect",
                    fmt("worst_defect=%.2e (tol 1e-06)", worst), ms_since(t0));
    }

    // 4./5. operator identity residual and eigenvalue-pairing closure
    {
        const auto t0 = Clock::now();
        double worst_identity = 0;
        double worst_pairing = 0;
        int pairing_points = 0;
        bool ok = true;
        std::size_t fewest = SIZE_MAX;
        for (const Example& e : examples) {
            const auto pts = thin(e.grid, 20);
            fewest = std::min(fewest, pts.size());
            for (const RVec& u : pts) {
                ShapeIdentityResiduals res =
                    shape_identity_residuals(e.patch, u);
                worst_identity = std::max(worst_identity, res.identity_residual);
                if (e.curvature_sign > 0 && res.pairing_applicable) {
                    worst_pairing = std::max(worst_pairing, res.pairing_residual);
                    ++pairing_points;
                }
            }
        }
        const long ms = ms_since(t0);
        ok = worst_identity <= 1e-5 && fewest >= 20;
        report_line(4, ok, "shape/structure operator identity residual",
                    fmt("worst=%.2e (tol 1e-05)", worst_identity), ms);
        const bool ok5 = worst_pairing <= 1e-5 && pairing_points > 0;
        report_line(5, ok5, "eigenvalue pairing closure",
                    fmt("worst=%.2e (tol 1e-05), points=%.0f", worst_pairing,
                        static_cast<double>(pairing_points)),
                    0);
    }

    // 6. predicted vs finite-difference tube spectra, plus the angle identity
    {
        const auto t0 = Clock::now();
        double worst = 0;
        bool ok = true;
        for (const Example& e : examples) {
            if (!is_tube(e)) continue;
            const auto expect = flatten_sorted(tube_reference(e));
            for (const RVec& u : thin(e.grid, 20)) {
                ShapeSpectrum sp = spectrum(e.patch, u);
                if (sp.eigenvalues.size() !=
                    static_cast<int>(expect.size())) {
                    ok = false;
                    continue;
                }
                for (std::size_t i = 0; i < expect.size(); ++i)
                    worst = std::max(
                        worst, std::abs(sp.eigenvalues(static_cast<int>(i)) -
                                        expect[i]));
            }
        }
        ok = ok && worst <= 1e-5;
        // tan(rho - Theta) = cot(Theta - (rho - pi/2)) identically
        double worst_trig = 0;
        for (double Theta : {pi / 4, pi / 3, 0.45 * pi}) {
            for (double off : {0.25, 0.6, 1.0}) {
                const double rho = Theta + off;
                const double lhs = std::tan(rho - Theta);
                const double rhs = 1.0 / std::tan(Theta - (rho - pi / 2));
                worst_trig = std::max(worst_trig, std::abs(lhs - rhs));
            }
        }
        ok = ok && worst_trig <= 1e-12;
        report_line(6, ok, "tube spectra vs prediction + angle identity",
                    fmt("worst_dev=%.2e (tol 1e-05), trig=%.2e (tol 1e-12)",
                        worst, worst_trig),
                    ms_since(t0));
    }

    // 7. focal radii localized by the rank sweep, with even image ranks
    {
        const auto t0 = Clock::now();
        Report rep = run_scenario(resolve_scenario("tube_cp1_in_cp2"));
        bool focal_ok = false, sweep_ok = false;
        for (const auto& c : rep.checks) {
            if (c.name == "focal") focal_ok = c.passed;
            if (c.name == "rank_sweep") sweep_ok = c.passed;
        }
        const long ms = ms_since(t0);
        report_line(7, focal_ok && sweep_ok && ms < 60000,
                    "focal rank collapse localization",
                    std::string("focal=") + (focal_ok ? "ok" : "bad") +
                        ", sweep=" + (sweep_ok ? "ok" : "bad"),
                    ms);
    }

    // 8. dual-variety distance, direct-circle tube duality, biduality
    {
        const auto t0 = Clock::now();
        const char* files[] = {"quadric_cp2.poly", "quadric_cp3.poly",
                               "hyperplane_cp2.poly", "octic_cp3.poly"};
        bool ok = true;
        double worst_gauss = 0, worst_direct = 0;
        unsigned long long seed = 1000;
        for (const char* file : files) {
            AlgebraicHypersurface f =
                parse_polynomial_file(data_dir + "/" + file);
            const SpaceForm sp(+1, f.nvars - 1);
            for (const CVec& x : sample_variety_points(f, 50, ++seed)) {
                const double d = distance(make_point(sp, x), gauss_point(f, x));
                worst_gauss = std::max(worst_gauss, std::abs(d - pi / 2));
            }
            for (int i = 0; i < 20; ++i) {
                const double r = 0.1 + (1.4 - 0.1) * i / 19.0;
                TubeDualityResult res = tube_duality_check(f, r, 8, ++seed);
                worst_direct = std::max(worst_direct, res.max_direct_residual);
            }
        }
        ok = ok && worst_gauss <= 1e-9 && worst_direct <= 1e-8;
        AlgebraicHypersurface quad =
            parse_polynomial_file(data_dir + "/quadric_cp2.poly");
        int bidual_passed = 0;
        for (const CVec& x : sample_variety_points(quad, 20, 4242ull))
            if (biduality_spot_check(quad, x) == SpotCheck::passed)
                ++bidual_passed;
        ok = ok && bidual_passed == 20;
        report_line(8, ok, "dual-variety distance / tube duality / biduality",
                    fmt("gauss=%.2e (tol 1e-09), direct=%.2e (tol 1e-08)",
                        worst_gauss, worst_direct) +
                        ", bidual=" + std::to_string(bidual_passed) + "/20",
                    ms_since(t0));
    }

    // 9. curvature blow-up toward a singular point, with a smooth control
    {
        const auto t0 = Clock::now();
        AlgebraicHypersurface f =
            parse_polynomial_file(data_dir + "/octic_cp3.poly");
        CVec P = CVec::Zero(4);
        P(0) = 1.0;
        const std::vector<double> scales = {1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
        auto vals = singular_blowup_probe(f, P, 0.5, scales, octic_approach);
        bool ok = vals.size() == 5;
        for (const auto& v : vals) ok = ok && v.has_value();
        double final_value = 0;
        if (ok) {
            ok = ok && *vals[2] < *vals[3] && *vals[3] < *vals[4];
            final_value = *vals[4];
            ok = ok && final_value > 1e3;
        }
        AlgebraicHypersurface q =
            parse_polynomial_file(data_dir + "/quadric_cp3.poly");
        auto ctrl =
            singular_blowup_probe(q, CVec(), 0.5, scales, quadric_approach);
        double ctrl_max = 0, ctrl_first = 0;
        bool ctrl_ok = ctrl.size() == 5 && ctrl[0].has_value();
        if (ctrl_ok) {
            ctrl_first = *ctrl[0];
            for (const auto& v : ctrl) {
                ctrl_ok = ctrl_ok && v.has_value();
                if (v) ctrl_max = std::max(ctrl_max, *v);
            }
            ctrl_ok = ctrl_ok && ctrl_max <= 10.0 * ctrl_first;
        }
        report_line(9, ok && ctrl_ok, "curvature blow-up toward a singular point",
                    fmt("final=%.4g (min 1e+03), control_max=%.4g", final_value,
                        ctrl_max),
                    ms_since(t0));
    }

    // 10. hyperbolic geodesic sphere: principal value and its constancy
    {
        const auto t0 = Clock::now();
        HypersurfacePatch p =
            rich(geodesic_sphere_patch(SpaceForm(-1, 2), 0.7, true));
        ShapeSpectrum sp = spectrum(p, rv({0.7, 0.8, 0.9}));
        const double expect = 2.0 / std::tanh(1.4);
        const double dev = std::abs(sp.mu - expect);
        HopfReport hr = hopf_report(p, canned_grid("sphere_ch2"), 1e-6);
        const bool ok =
            dev <= 1e-5 && hr.mu_stddev <= 1e-6 && hr.failed_points.empty();
        report_line(10, ok, "hyperbolic sphere principal value",
                    fmt("dev=%.2e (tol 1e-05), stddev=%.2e (tol 1e-06)", dev,
                        hr.mu_stddev),
                    ms_since(t0));
    }

    // 11. mean-curvature bound with equality on geodesic spheres
    {
        const auto t0 = Clock::now();
        double worst = 0;
        bool ok = true;
        for (double r : {pi / 6, pi / 4, pi / 3}) {
            HypersurfacePatch p =
                rich(geodesic_sphere_patch(SpaceForm(+1, 2), r, true));
            ShapeSpectrum sp = spectrum(p, rv({0.7, 0.8, 0.9}));
            CurvatureBoundCheck cb = mean_curvature_bound_check(sp, 2, +1);
            ok = ok && cb.applicable && cb.satisfied;
            worst = std::max(worst, std::abs(cb.lhs - cb.rhs));
        }
        ok = ok && worst <= 1e-9;
        report_line(11, ok, "mean-curvature bound equality for spheres",
                    fmt("worst_gap=%.2e (tol 1e-09)", worst), ms_since(t0));
    }

    // 12. byte-identical reruns of every canned scenario
    {
        const auto t0 = Clock::now();
        bool ok = true;
        int compared = 0;
        for (const Scenario& sc : canned_scenarios()) {
            Report a = run_scenario(sc);
            Report b = run_scenario(sc);
            ok = ok && format_report_text(a) == format_report_text(b) &&
                 format_report_json(a) == format_report_json(b) &&
                 a.tables.size() == b.tables.size();
            for (std::size_t i = 0; ok && i < a.tables.size(); ++i)
                ok = format_table_csv(a.tables[i]) == format_table_csv(b.tables[i]);
            ++compared;
        }
        report_line(12, ok && compared >= 10, "byte-identical reruns",
                    std::to_string(compared) + " scenarios compared",
                    ms_since(t0));
    }

    if (g_failures > 0) {
        std::printf("acceptance: %d of 12 criteria failed\n", g_failures);
        return 1;
    }
    std::printf("acceptance: all 12 criteria passed\n");
    return 0;
}
