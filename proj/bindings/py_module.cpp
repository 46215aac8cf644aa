// Python bindings for the hopftube core: space-form points, hypersurface
// patches and their finite-difference shape spectra, tube builders and
// predictions, algebraic varieties, duality checks, and the scenario runner.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hopftube/duality.hpp"
#include "hopftube/hypersurface.hpp"
#include "hopftube/polynomial.hpp"
#include "hopftube/report.hpp"
#include "hopftube/scenario.hpp"
#include "hopftube/space_forms.hpp"
#include "hopftube/tubes.hpp"
#include "hopftube/version.hpp"

namespace py = pybind11;
using namespace hopftube;

PYBIND11_MODULE(_hopftube, m) {
    m.doc() =
        "Numerical laboratory for real hypersurfaces of the complex "
        "projective and hyperbolic planes/spaces: tube construction, "
        "finite-difference shape operators, and structure checks.";

    m.def("version", [] { return std::string(kVersion); },
          "Library version string.");

    // --- exceptions ----------------------------------------------------------
    auto err = py::register_exception<Error>(m, "Error");
    py::register_exception<DimensionError>(m, "DimensionError", err.ptr());
    py::register_exception<BaseMismatchError>(m, "BaseMismatchError", err.ptr());
    py::register_exception<DegenerateChartError>(m, "DegenerateChartError",
                                                 err.ptr());
    py::register_exception<NoisyDerivativeError>(m, "NoisyDerivativeError",
                                                 err.ptr());
    py::register_exception<FocalDegeneracyError>(m, "FocalDegeneracyError",
                                                 err.ptr());
    py::register_exception<SingularPointError>(m, "SingularPointError",
                                               err.ptr());
    py::register_exception<OffVarietyError>(m, "OffVarietyError", err.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", err.ptr());
    py::register_exception<ParseError>(m, "ParseError", err.ptr());

    // --- space forms ---------------------------------------------------------
    py::class_<SpaceForm>(m, "SpaceForm",
                          "Complex space form of holomorphic curvature +4 or "
                          "-4, held as the homogeneous model.")
        .def(py::init<int, int>(), py::arg("curvature_sign"), py::arg("n"))
        .def_readonly("curvature_sign", &SpaceForm::curvature_sign)
        .def_readonly("complex_dim", &SpaceForm::complex_dim)
        .def("ambient_dim", &SpaceForm::ambient_dim)
        .def("__repr__", [](const SpaceForm& s) {
            return "SpaceForm(curvature_sign=" +
                   std::to_string(s.curvature_sign) +
                   ", n=" + std::to_string(s.complex_dim) + ")";
        });

    py::class_<ModelPoint>(m, "ModelPoint",
                           "Normalized, phase-gauged homogeneous representative.")
        .def_readonly("space", &ModelPoint::space)
        .def_readonly("coords", &ModelPoint::coords)
        .def("__repr__", [](const ModelPoint& p) {
            return "ModelPoint(dim=" + std::to_string(p.coords.size()) + ")";
        });

    m.def("make_point", &make_point, py::arg("space"), py::arg("raw"),
          "Normalize and phase-gauge a raw homogeneous representative.");
    m.def("distance",
          py::overload_cast<const ModelPoint&, const ModelPoint&>(&distance),
          py::arg("x"), py::arg("y"), "Geodesic distance between model points.");
    m.def("same_point", &same_point, py::arg("x"), py::arg("y"),
          py::arg("tol") = 1e-9,
          "Whether two representatives describe the same model point.");

    // --- hypersurface patches and shape spectra ------------------------------
    py::class_<HypersurfacePatch>(
        m, "HypersurfacePatch",
        "Chart from a box in R^(2n-1) into the homogeneous model, with the "
        "finite-difference settings used by every downstream operator.")
        .def_readonly("space", &HypersurfacePatch::space)
        .def_readwrite("fd_step", &HypersurfacePatch::fd_step)
        .def_readwrite("richardson", &HypersurfacePatch::richardson)
        .def_property_readonly("param_dim", &HypersurfacePatch::param_dim);

    m.def(
        "custom_patch",
        [](const SpaceForm& space, std::function<CVec(const RVec&)> chart,
           std::function<CVec(const RVec&)> orient_ref,
           std::vector<std::array<double, 2>> domain_box, double fd_step,
           bool richardson) {
            HypersurfacePatch p;
            p.space = space;
            p.chart = std::move(chart);
            p.orient_ref = std::move(orient_ref);
            p.domain_box = std::move(domain_box);
            p.fd_step = fd_step;
            p.richardson = richardson;
            return p;
        },
        py::arg("space"), py::arg("chart"), py::arg("orient_ref"),
        py::arg("domain_box") = std::vector<std::array<double, 2>>{},
        py::arg("fd_step") = 1e-4, py::arg("richardson") = false,
        "Build a patch from Python callables: chart(u) -> complex rep, "
        "orient_ref(u) -> ambient reference fixing the normal sign.");

    py::class_<ShapeResult>(m, "ShapeResult")
        .def_readonly("matrix", &ShapeResult::matrix)
        .def_readonly("asymmetry", &ShapeResult::asymmetry);

    py::class_<ShapeSpectrum>(m, "ShapeSpectrum")
        .def_readonly("eigenvalues", &ShapeSpectrum::eigenvalues)
        .def_readonly("eigenvectors", &ShapeSpectrum::eigenvectors)
        .def_readonly("hopf_direction", &ShapeSpectrum::hopf_direction)
        .def_readonly("mu", &ShapeSpectrum::mu)
        .def_readonly("hopf_defect", &ShapeSpectrum::hopf_defect)
        .def_readonly("mean_curvature", &ShapeSpectrum::mean_curvature);

    py::class_<HopfReport>(m, "HopfReport")
        .def_readonly("max_defect", &HopfReport::max_defect)
        .def_readonly("mu_mean", &HopfReport::mu_mean)
        .def_readonly("mu_stddev", &HopfReport::mu_stddev)
        .def_readonly("mu_max_deviation", &HopfReport::mu_max_deviation)
        .def_readonly("is_hopf", &HopfReport::is_hopf)
        .def_readonly("points_evaluated", &HopfReport::points_evaluated)
        .def_readonly("failed_points", &HopfReport::failed_points);

    py::class_<ShapeIdentityResiduals>(m, "ShapeIdentityResiduals")
        .def_readonly("identity_residual",
                      &ShapeIdentityResiduals::identity_residual)
        .def_readonly("pairing_residual",
                      &ShapeIdentityResiduals::pairing_residual)
        .def_readonly("pairing_applicable",
                      &ShapeIdentityResiduals::pairing_applicable);

    py::class_<CurvatureBoundCheck>(m, "CurvatureBoundCheck")
        .def_readonly("lhs", &CurvatureBoundCheck::lhs)
        .def_readonly("rhs", &CurvatureBoundCheck::rhs)
        .def_readonly("satisfied", &CurvatureBoundCheck::satisfied)
        .def_readonly("applicable", &CurvatureBoundCheck::applicable);

    m.def("shape_operator", &shape_operator, py::arg("patch"), py::arg("u"),
          "Symmetric Weingarten matrix in an orthonormal tangent frame, "
          "honoring the patch step and Richardson settings.");
    m.def("shape_operator_plain", &shape_operator_plain, py::arg("patch"),
          py::arg("u"), py::arg("h"),
          "Weingarten matrix at one explicit finite-difference step.");
    m.def("spectrum", &spectrum, py::arg("patch"), py::arg("u"),
          "Principal curvatures, the structure direction U = -J xi, and its "
          "principal value mu = g(AU, U).");
    m.def("hopf_report", &hopf_report, py::arg("patch"), py::arg("grid"),
          py::arg("tol"),
          "Constancy statistics of mu over a parameter grid.");
    m.def("shape_identity_residuals", &shape_identity_residuals,
          py::arg("patch"), py::arg("u"), py::arg("hopf_tol") = 1e-6,
          "Residuals of the operator identity 2A phi A = mu(phi A + A phi) + "
          "2c phi and of the eigenvalue pairing closure.");
    m.def("mean_curvature_bound_check", &mean_curvature_bound_check,
          py::arg("spectrum"), py::arg("n"), py::arg("curvature_sign") = +1,
          "mu versus the mean-curvature lower bound (positive curvature only).");
    m.def("grid_linspace", &grid_linspace, py::arg("lo"), py::arg("hi"),
          py::arg("counts"), "Row-major rectangular grid of parameters.");
    m.def("sample_box", &sample_box, py::arg("lo"), py::arg("hi"),
          py::arg("count"), py::arg("seed"),
          "Deterministic uniform draws from a box.");

    // --- tubes ---------------------------------------------------------------
    py::class_<FocalSource>(m, "FocalSource")
        .def_readonly("r", &FocalSource::r)
        .def_readonly("multiplicity", &FocalSource::multiplicity)
        .def_readonly("from_hopf", &FocalSource::from_hopf);

    py::class_<FocalReport>(m, "FocalReport")
        .def_readonly("radii", &FocalReport::radii);

    py::class_<RankRow>(m, "RankRow")
        .def_readonly("r", &RankRow::r)
        .def_readonly("min_rank", &RankRow::min_rank)
        .def_readonly("max_rank", &RankRow::max_rank)
        .def_readonly("min_sigma_ratio", &RankRow::min_sigma_ratio)
        .def_readonly("min_sigma_min", &RankRow::min_sigma_min)
        .def_readonly("max_sigma_max", &RankRow::max_sigma_max);

    py::class_<TubeSpectrumParams>(m, "TubeSpectrumParams")
        .def_readonly("theta_list", &TubeSpectrumParams::theta_list)
        .def_readonly("Theta", &TubeSpectrumParams::Theta)
        .def_readonly("k", &TubeSpectrumParams::k);

    m.def("predicted_spectrum", &predicted_spectrum, py::arg("theta_list"),
          py::arg("Theta"), py::arg("k"), py::arg("r"),
          "Outward tube spectrum (value, multiplicity) from the base "
          "principal angles.");
    m.def("focal_radii", &focal_radii, py::arg("spectrum"),
          py::arg("hopf_tol") = 1e-6,
          "Focal distances recovered from an inward-normal spectrum.");
    m.def("point_base_params", &point_base_params, py::arg("n"));
    m.def("cpk_base_params", &cpk_base_params, py::arg("n"), py::arg("k"));
    m.def("rp2_base_params", &rp2_base_params, py::arg("n"));
    m.def("quadric_base_params", &quadric_base_params, py::arg("n"));

    m.def("geodesic_sphere_patch", &geodesic_sphere_patch, py::arg("space"),
          py::arg("r"), py::arg("inward"),
          py::arg("warp") = std::function<double(const RVec&)>(),
          "Geodesic sphere about the first coordinate point; a warp callable "
          "perturbs the radius to make a non-Hopf control surface.");
    m.def("tube_cpk_patch", &tube_cpk_patch, py::arg("n"), py::arg("k"),
          py::arg("r"), py::arg("inward"),
          "Tube over a totally geodesic complex subspace.");
    m.def("tube_rp2_patch", &tube_rp2_patch, py::arg("r"), py::arg("inward"),
          "Tube over the real form of the projective plane.");
    m.def("tube_quadric_patch", &tube_quadric_patch, py::arg("n"),
          py::arg("r"), py::arg("inward"),
          "Tube over the quadric sum of squares, rational chart.");
    m.def("tube_algebraic_patch", &tube_algebraic_patch, py::arg("f"),
          py::arg("seed"), py::arg("r"), py::arg("inward"),
          "Tube over f = 0 near a smooth seed point (Newton chart).");
    m.def("normal_map_rank", &normal_map_rank, py::arg("patch"), py::arg("u"),
          py::arg("r"), py::arg("tol_ratio") = 1e-6, py::arg("h") = 1e-4,
          "Rank of the normal-exponential map at radius r.");
    m.def("normal_map_sigma_ratio", &normal_map_sigma_ratio, py::arg("patch"),
          py::arg("u"), py::arg("r"), py::arg("h") = 1e-4);
    m.def("rank_sweep", &rank_sweep, py::arg("patch"), py::arg("radii"),
          py::arg("grid"), py::arg("tol_ratio") = 1e-6, py::arg("h") = 1e-4,
          "Per-radius rank extrema of the normal-exponential map over a grid.");
    m.def(
        "singular_blowup_probe",
        [](const AlgebraicHypersurface& f, std::optional<CVec> singular_point,
           double r, const std::vector<double>& scales,
           const std::function<CVec(double)>& approach, double fd_step,
           bool richardson) {
            return singular_blowup_probe(f,
                                         singular_point ? *singular_point
                                                        : CVec(),
                                         r, scales, approach, fd_step,
                                         richardson);
        },
        py::arg("f"), py::arg("singular_point"), py::arg("r"),
        py::arg("approach_scales"), py::arg("approach"),
        py::arg("fd_step") = 1e-3, py::arg("richardson") = true,
        "Max |principal curvature| of the radius-r tube along an approach "
        "curve; pass None as singular_point for a smooth control run.");

    // --- algebraic varieties and duality --------------------------------------
    py::class_<AlgebraicHypersurface>(m, "AlgebraicHypersurface",
                                      "Homogeneous polynomial in n+1 complex "
                                      "variables, stored as monomials.")
        .def_readonly("degree", &AlgebraicHypersurface::degree)
        .def_readonly("nvars", &AlgebraicHypersurface::nvars)
        .def("value", &AlgebraicHypersurface::value, py::arg("z"))
        .def("gradient", &AlgebraicHypersurface::gradient, py::arg("z"))
        .def("hessian", &AlgebraicHypersurface::hessian, py::arg("z"))
        .def("__repr__", [](const AlgebraicHypersurface& f) {
            return "AlgebraicHypersurface(degree=" + std::to_string(f.degree) +
                   ", nvars=" + std::to_string(f.nvars) + ")";
        });

    m.def("parse_polynomial", &parse_polynomial, py::arg("text"),
          "Parse the shared monomial text format: '<re> <im> : e0 e1 ... en' "
          "per line, '#' comments.");
    m.def("parse_polynomial_file", &parse_polynomial_file, py::arg("path"));
    m.def("format_polynomial", &format_polynomial, py::arg("f"));

    py::class_<TubeDualityResult>(m, "TubeDualityResult")
        .def_readonly("max_direct_residual",
                      &TubeDualityResult::max_direct_residual)
        .def_readonly("max_nearest_residual",
                      &TubeDualityResult::max_nearest_residual)
        .def_readonly("samples", &TubeDualityResult::samples);

    py::enum_<SpotCheck>(m, "SpotCheck")
        .value("passed", SpotCheck::passed)
        .value("failed", SpotCheck::failed)
        .value("inapplicable", SpotCheck::inapplicable);

    py::class_<SingularCandidate>(m, "SingularCandidate")
        .def_readonly("point", &SingularCandidate::point)
        .def_readonly("f_residual", &SingularCandidate::f_residual)
        .def_readonly("grad_norm", &SingularCandidate::grad_norm);

    m.def("gauss_point", &gauss_point, py::arg("f"), py::arg("x"),
          "Dual point: conjugated gradient of f at x, normalized and gauged.");
    m.def("tube_duality_check", &tube_duality_check, py::arg("f"),
          py::arg("r"), py::arg("sample_count"),
          py::arg("seed") = 20240816ull,
          "Residuals of the constant distance pi/2 - r between tube points "
          "over f = 0 and the dual variety.");
    m.def("biduality_spot_check", &biduality_spot_check, py::arg("f"),
          py::arg("x"),
          "Apply the dual construction twice and compare with x (closed-form "
          "duals only; otherwise inapplicable).");
    m.def("singular_locus_probe", &singular_locus_probe, py::arg("f"),
          py::arg("grid"),
          "Candidate singular points: small |f| and |grad f|, refined by "
          "damped descent.");
    m.def("sample_variety_points", &sample_variety_points, py::arg("f"),
          py::arg("count"), py::arg("seed"),
          "Deterministic smooth points of f = 0 by Newton iteration on "
          "random affine slices.");

    // --- scenarios and reports -------------------------------------------------
    py::class_<Scenario>(m, "Scenario")
        .def_readonly("name", &Scenario::name)
        .def_readonly("description", &Scenario::description)
        .def_readonly("curvature_sign", &Scenario::curvature_sign)
        .def_readonly("n", &Scenario::n)
        .def_readonly("checks", &Scenario::checks)
        .def_readonly("seed", &Scenario::seed)
        .def_readonly("fd_step", &Scenario::fd_step)
        .def_readonly("richardson", &Scenario::richardson)
        .def_readonly("tol", &Scenario::tol)
        .def("__repr__", [](const Scenario& s) {
            return "Scenario('" + s.name + "')";
        });

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("applicable", &CheckResult::applicable)
        .def_readonly("metrics", &CheckResult::metrics)
        .def_readonly("notes", &CheckResult::notes);

    py::class_<ReportTable>(m, "ReportTable")
        .def_readonly("name", &ReportTable::name)
        .def_readonly("columns", &ReportTable::columns)
        .def_readonly("rows", &ReportTable::rows)
        .def("csv", [](const ReportTable& t) { return format_table_csv(t); });

    py::class_<Report>(m, "Report")
        .def_readonly("scenario_name", &Report::scenario_name)
        .def_readonly("version", &Report::version)
        .def_readonly("seed", &Report::seed)
        .def_readonly("checks", &Report::checks)
        .def_readonly("tables", &Report::tables)
        .def("overall_pass", &Report::overall_pass)
        .def("text", [](const Report& r) { return format_report_text(r); })
        .def("json", [](const Report& r) { return format_report_json(r); });

    m.def("canned_scenario_names", [] {
        std::vector<std::string> names;
        for (const Scenario& s : canned_scenarios()) names.push_back(s.name);
        return names;
    });
    m.def("resolve_scenario", &resolve_scenario, py::arg("name_or_path"),
          "Canned scenario by name, or a config file parsed from disk.");
    m.def("parse_scenario", &parse_scenario, py::arg("text"));
    m.def(
        "run_scenario",
        [](const Scenario& sc, std::optional<unsigned long long> seed,
           std::optional<double> fd_step, std::optional<double> tol) {
            RunOverrides ov;
            ov.seed = seed;
            ov.fd_step = fd_step;
            ov.tol = tol;
            return run_scenario(sc, ov);
        },
        py::arg("scenario"), py::arg("seed") = std::nullopt,
        py::arg("fd_step") = std::nullopt, py::arg("tol") = std::nullopt,
        "Run every check of a scenario and return the report.");
    m.def("write_report_files", &write_report_files, py::arg("report"),
          py::arg("out_dir"),
          "Write report.txt, report.json, and per-table CSVs; returns paths.");
}
