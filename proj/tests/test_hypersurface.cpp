#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hopftube/hypersurface.hpp"
#include "hopftube/tubes.hpp"

using namespace hopftube;
using std::numbers::pi;

namespace {

RVec rvec3(double a, double b, double c) {
    RVec u(3);
    u << a, b, c;
    return u;
}

HypersurfacePatch sphere_patch_rich(int c, double r, bool inward) {
    HypersurfacePatch p = geodesic_sphere_patch(SpaceForm(c, 2), r, inward);
    p.fd_step = 1e-3;
    p.richardson = true;
    return p;
}

const RVec kU0 = rvec3(0.7, 0.8, 0.9);

}  // namespace

TEST_CASE("frame: orthonormal tangents, unit horizontal normal") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 3, true);
    Frame fr = frame_at(p, kU0);
    REQUIRE(fr.tangent_basis.size() == 3);
    const SpaceForm& s = p.space;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double gij =
                detail::metric_raw(s, fr.tangent_basis[i], fr.tangent_basis[j]);
            CHECK(std::abs(gij - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
        CHECK(std::abs(detail::metric_raw(s, fr.normal, fr.tangent_basis[i])) <
              1e-10);
        CHECK(std::abs(hermitian_form(s, fr.tangent_basis[i],
                                      fr.base.coords)) < 1e-10);
    }
    CHECK(std::abs(detail::metric_raw(s, fr.normal, fr.normal) - 1.0) < 1e-12);
    CHECK(std::abs(hermitian_form(s, fr.normal, fr.base.coords)) < 1e-12);
    CHECK(std::abs(std::abs(fr.gauge_phase) - 1.0) < 1e-14);
}

TEST_CASE("geodesic sphere spectrum matches the closed form (projective)") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 3, true);
    ShapeSpectrum sp = spectrum(p, kU0);
    REQUIRE(sp.eigenvalues.size() == 3);
    // ascending: 2 cot(2pi/3), cot(pi/3), cot(pi/3)
    CHECK(std::abs(sp.eigenvalues(0) - (-1.1547005383792515)) < 1e-8);
    CHECK(std::abs(sp.eigenvalues(1) - 0.57735026918962576) < 1e-8);
    CHECK(std::abs(sp.eigenvalues(2) - 0.57735026918962576) < 1e-8);
    CHECK(std::abs(sp.mu - (-1.1547005383792515)) < 1e-8);
    CHECK(sp.hopf_defect < 1e-7);
    CHECK(std::abs(sp.mean_curvature - sp.eigenvalues.sum() / 3.0) < 1e-14);
}

TEST_CASE("geodesic sphere at the balanced radius has a vanishing Hopf value") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 4, true);
    ShapeSpectrum sp = spectrum(p, kU0);
    CHECK(std::abs(sp.eigenvalues(0) - 0.0) < 1e-8);
    CHECK(std::abs(sp.eigenvalues(1) - 1.0) < 1e-8);
    CHECK(std::abs(sp.eigenvalues(2) - 1.0) < 1e-8);
}

TEST_CASE("geodesic sphere spectrum matches the closed form (hyperbolic)") {
    HypersurfacePatch p = sphere_patch_rich(-1, 0.7, true);
    ShapeSpectrum sp = spectrum(p, kU0);
    const double mu = 2.0 / std::tanh(1.4);      // 2.2589894129197929
    const double lam = 1.0 / std::tanh(0.7);     // 1.6546216358026294
    CHECK(std::abs(sp.eigenvalues(0) - lam) < 1e-8);
    CHECK(std::abs(sp.eigenvalues(1) - lam) < 1e-8);
    CHECK(std::abs(sp.eigenvalues(2) - mu) < 1e-8);
    CHECK(std::abs(sp.mu - mu) < 1e-8);
    CHECK(sp.hopf_defect < 1e-7);
}

TEST_CASE("flipping the normal orientation negates the shape operator exactly") {
    HypersurfacePatch pin = geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, true);
    HypersurfacePatch pout =
        geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, false);
    ShapeResult a = shape_operator_plain(pin, kU0, 1e-4);
    ShapeResult b = shape_operator_plain(pout, kU0, 1e-4);
    CHECK((a.matrix + b.matrix).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((a.frame.normal + b.frame.normal).norm() < 1e-15);
}

TEST_CASE("structure tensors satisfy the almost-contact identities") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 3, true);
    Frame fr = frame_at(p, kU0);
    StructureTensors st = structure_tensors(fr);
    const int m = 3;
    CHECK((st.phi + st.phi.transpose()).norm() < 1e-9);
    CHECK(std::abs(st.U.norm() - 1.0) < 1e-9);
    CHECK((st.f_form - st.U).norm() < 1e-9);
    CHECK((st.phi * st.U).norm() < 1e-9);
    Eigen::MatrixXd phi2 = st.phi * st.phi;
    Eigen::MatrixXd expect =
        -Eigen::MatrixXd::Identity(m, m) + st.U * st.U.transpose();
    CHECK((phi2 - expect).norm() < 1e-9);
}

TEST_CASE("hopf report: sphere grid is Hopf with constant principal value") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 3, true);
    RVec lo = rvec3(0.55, 0.6, 0.65), hi = rvec3(1.05, 1.1, 1.15);
    auto grid = grid_linspace(lo, hi, {3, 3, 3});
    HopfReport rep = hopf_report(p, grid, 1e-6);
    CHECK(rep.points_evaluated == 27);
    CHECK(rep.failed_points.empty());
    CHECK(rep.is_hopf);
    CHECK(rep.max_defect < 1e-6);
    CHECK(rep.mu_stddev < 1e-8);
    CHECK(std::abs(rep.mu_mean - (-1.1547005383792515)) < 1e-7);
}

TEST_CASE("a warped sphere is detected as non-Hopf") {
    // additive perturbation on top of the base radius pi/4
    auto warp = [](const RVec& u) {
        return 0.01 * (std::sin(1.3 * u(0) + 0.2) +
                       0.8 * std::cos(0.9 * u(1) - 0.4) +
                       0.5 * std::sin(1.1 * u(2) + 0.7));
    };
    HypersurfacePatch p =
        geodesic_sphere_patch(SpaceForm(+1, 2), pi / 4, true, warp);
    p.fd_step = 1e-3;
    p.richardson = true;
    ShapeSpectrum sp = spectrum(p, kU0);
    CHECK(sp.hopf_defect > 1e-3);   // rehearsed value ~1.19e-2
    CHECK(sp.hopf_defect < 1e-1);
    ShapeSpectrum sp2 = spectrum(p, rvec3(0.9, 0.7, 1.05));
    CHECK(sp2.hopf_defect > 1e-3);  // rehearsed value ~9.48e-3
    std::vector<RVec> grid = {kU0, rvec3(0.9, 0.7, 1.05)};
    HopfReport rep = hopf_report(p, grid, 1e-6);
    CHECK_FALSE(rep.is_hopf);
}

TEST_CASE("identity and pairing residuals at Hopf points") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 3, true);
    ShapeIdentityResiduals res = shape_identity_residuals(p, kU0);
    CHECK(res.identity_residual < 1e-5);
    CHECK(res.pairing_applicable);
    CHECK(res.pairing_residual < 1e-5);

    HypersurfacePatch ph = sphere_patch_rich(-1, 0.7, true);
    ShapeIdentityResiduals resh = shape_identity_residuals(ph, kU0);
    CHECK(resh.identity_residual < 1e-5);
    CHECK_FALSE(resh.pairing_applicable);  // closed-form pairing is c=+1 only
}

TEST_CASE("mean-curvature bound: equality for spheres, honest failure for rp2") {
    HypersurfacePatch p = sphere_patch_rich(+1, pi / 3, true);
    CurvatureBoundCheck cb = mean_curvature_bound_check(spectrum(p, kU0), 2);
    CHECK(cb.applicable);
    CHECK(cb.satisfied);
    CHECK(std::abs(cb.lhs - cb.rhs) < 1e-8);

    HypersurfacePatch prp = tube_rp2_patch(pi / 8, true);
    prp.fd_step = 1e-3;
    prp.richardson = true;
    CurvatureBoundCheck cb2 =
        mean_curvature_bound_check(spectrum(prp, rvec3(0.2, -0.3, 0.5)), 2);
    CHECK(cb2.applicable);
    CHECK_FALSE(cb2.satisfied);

    HypersurfacePatch ph = sphere_patch_rich(-1, 0.7, true);
    CurvatureBoundCheck cb3 =
        mean_curvature_bound_check(spectrum(ph, kU0), 2, -1);
    CHECK_FALSE(cb3.applicable);
}

TEST_CASE("degenerate charts are rejected with the offending singular value") {
    HypersurfacePatch p = geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, true);
    auto inner = p.chart;
    p.chart = [inner](const RVec& u) {
        RVec v = u;
        v(2) = 0.33;  // third parameter has no effect: rank-deficient chart
        return inner(v);
    };
    try {
        frame_at(p, kU0);
        FAIL("expected DegenerateChartError");
    } catch (const DegenerateChartError& e) {
        CHECK(e.sigma_min < 1e-9);
    }
}

TEST_CASE("evaluation too close to the domain boundary is a precondition error") {
    HypersurfacePatch p = geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, true);
    p.domain_box = {{0.0, 2.0}, {0.0, 2.0}, {0.0, 2.0}};
    CHECK_THROWS_AS(frame_at(p, rvec3(1e-4, 1.0, 1.0)), PreconditionError);
    CHECK_NOTHROW(frame_at(p, rvec3(1.0, 1.0, 1.0)));
}

TEST_CASE("grid and seeded sampling helpers are deterministic") {
    RVec lo = rvec3(0.0, -1.0, 2.0), hi = rvec3(1.0, 1.0, 3.0);
    auto grid = grid_linspace(lo, hi, {2, 3, 2});
    REQUIRE(grid.size() == 12);
    CHECK((grid.front() - lo).norm() < 1e-15);
    CHECK((grid.back() - hi).norm() < 1e-15);

    auto a = sample_box(lo, hi, 16, 42ull);
    auto b = sample_box(lo, hi, 16, 42ull);
    auto c = sample_box(lo, hi, 16, 43ull);
    REQUIRE(a.size() == 16);
    double dab = 0, dac = 0;
    for (int i = 0; i < 16; ++i) {
        dab = std::max(dab, (a[i] - b[i]).norm());
        dac = std::max(dac, (a[i] - c[i]).norm());
        for (int j = 0; j < 3; ++j) {
            CHECK(a[i](j) >= lo(j));
            CHECK(a[i](j) <= hi(j));
        }
    }
    CHECK(dab == 0.0);
    CHECK(dac > 1e-6);
}
