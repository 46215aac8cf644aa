#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hopftube/hypersurface.hpp"
#include "hopftube/polynomial.hpp"
#include "hopftube/tubes.hpp"

using namespace hopftube;
using std::numbers::pi;

namespace {

const char* kQuadric3 =
    "1 0 : 2 0 0 0\n"
    "1 0 : 0 2 0 0\n"
    "1 0 : 0 0 2 0\n"
    "1 0 : 0 0 0 2\n";

const char* kOctic =
    "1 0 : 6 0 0 2\n"
    "1 0 : 0 3 5 0\n";

RVec rv(std::initializer_list<double> xs) {
    RVec u(static_cast<int>(xs.size()));
    int i = 0;
    for (double x : xs) u(i++) = x;
    return u;
}

std::vector<double> flatten(const std::vector<std::pair<double, int>>& sp) {
    std::vector<double> out;
    for (const auto& [v, m] : sp)
        for (int i = 0; i < m; ++i) out.push_back(v);
    std::sort(out.begin(), out.end());
    return out;
}

void check_spectrum(const HypersurfacePatch& p, const RVec& u,
                    const std::vector<double>& expect, double tol) {
    ShapeSpectrum sp = spectrum(p, u);
    REQUIRE(sp.eigenvalues.size() == static_cast<int>(expect.size()));
    for (std::size_t i = 0; i < expect.size(); ++i)
        CHECK(std::abs(sp.eigenvalues(static_cast<int>(i)) - expect[i]) < tol);
}

HypersurfacePatch rich(HypersurfacePatch p) {
    p.fd_step = 1e-3;
    p.richardson = true;
    return p;
}

// approach curve toward the octic's singular point, matching the canned probe
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

}  // namespace

TEST_CASE("predicted tube spectra match the frozen closed forms") {
    // tube over CP^1 in CP^2, radius pi/6, outward normal
    {
        auto ps = cpk_base_params(2, 1);
        auto sp = flatten(predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 6));
        REQUIRE(sp.size() == 3);
        CHECK(std::abs(sp[0] - (-1.1547005383792515)) < 1e-14);
        CHECK(std::abs(sp[1] - 0.57735026918962576) < 1e-14);
        CHECK(std::abs(sp[2] - 0.57735026918962576) < 1e-14);
    }
    // tube over RP^2 in CP^2, radius pi/8
    {
        auto ps = rp2_base_params(2);
        auto sp = flatten(predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 8));
        REQUIRE(sp.size() == 3);
        CHECK(std::abs(sp[0] - (-2.414213562373095)) < 1e-14);
        CHECK(std::abs(sp[1] - 0.41421356237309505) < 1e-14);
        CHECK(std::abs(sp[2] - 2.0) < 1e-14);
    }
    // tube over the quadric in CP^2, radius pi/8
    {
        auto ps = quadric_base_params(2);
        auto sp = flatten(predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 8));
        REQUIRE(sp.size() == 3);
        CHECK(std::abs(sp[0] - (-2.0)) < 1e-14);
        CHECK(std::abs(sp[1] - (-0.41421356237309505)) < 1e-14);
        CHECK(std::abs(sp[2] - 2.414213562373095) < 1e-14);
    }
    // geodesic sphere written as a tube over a point (outward orientation)
    {
        auto ps = point_base_params(2);
        auto sp = flatten(predicted_spectrum(ps.theta_list, ps.Theta, ps.k, pi / 3));
        REQUIRE(sp.size() == 3);
        CHECK(std::abs(sp[0] - (-0.57735026918962576)) < 1e-14);
        CHECK(std::abs(sp[1] - (-0.57735026918962576)) < 1e-14);
        CHECK(std::abs(sp[2] - 1.1547005383792515) < 1e-14);
    }
}

TEST_CASE("degenerate radii are rejected") {
    // outside the open interval (0, pi/2) the construction is refused outright
    auto point = point_base_params(2);
    CHECK_THROWS_AS(
        predicted_spectrum(point.theta_list, point.Theta, point.k, pi / 2),
        Error);
    // in-range radii that hit a cotangent pole are focal-degenerate:
    // r equal to a base principal angle theta_j = pi/4 ...
    auto quad = quadric_base_params(2);
    CHECK_THROWS_AS(predicted_spectrum(quad.theta_list, quad.Theta, quad.k, pi / 4),
                    FocalDegeneracyError);
    // ... or r such that 2(Theta - r) hits the pole of the doubled cotangent
    auto rp2 = rp2_base_params(2);
    CHECK_THROWS_AS(predicted_spectrum(rp2.theta_list, rp2.Theta, rp2.k, pi / 4),
                    FocalDegeneracyError);
}

TEST_CASE("finite-difference tube spectra match the predictions") {
    // tube over CP^1 in CP^2 at radius pi/6 (outward)
    check_spectrum(rich(tube_cpk_patch(2, 1, pi / 6, false)),
                   rv({0.3, -0.2, 0.6}),
                   {-1.1547005383792515, 0.57735026918962576,
                    0.57735026918962576},
                   1e-8);
    // tube over CP^1 in CP^3 at radius pi/5 (outward)
    check_spectrum(rich(tube_cpk_patch(3, 1, pi / 5, false)),
                   rv({0.3, -0.2, 0.6, 0.5, 0.7}),
                   {-1.3763819204711735, -1.3763819204711735,
                    -0.64983939246581265, 0.72654252800536089,
                    0.72654252800536089},
                   1e-8);
    // tube over RP^2 in CP^2 at radius pi/8
    check_spectrum(rich(tube_rp2_patch(pi / 8, false)), rv({0.2, -0.3, 0.5}),
                   {-2.414213562373095, 0.41421356237309505, 2.0}, 1e-8);
    // tube over the quadric in CP^2 at radius pi/8
    check_spectrum(rich(tube_quadric_patch(2, pi / 8, false)),
                   rv({0.15, -0.2, 0.5}),
                   {-2.0, -0.41421356237309505, 2.414213562373095}, 1e-8);
    // tube over the quadric in CP^3 at radius pi/8
    check_spectrum(rich(tube_quadric_patch(3, pi / 8, false)),
                   rv({0.15, -0.2, 0.25, 0.1, 0.5}),
                   {-2.0, -0.41421356237309505, -0.41421356237309505,
                    2.414213562373095, 2.414213562373095},
                   1e-8);
}

TEST_CASE("implicit Newton chart reproduces the quadric tube spectrum") {
    AlgebraicHypersurface f = parse_polynomial(kQuadric3);
    CVec seed(4);
    seed << Complex(1, 0), Complex(0, 1) * std::sqrt(1.5), Complex(0.5, 0),
        Complex(0.5, 0);
    HypersurfacePatch p = rich(tube_algebraic_patch(f, seed, 0.5, false));
    check_spectrum(p, rv({0.0, 0.0, 0.0, 0.0, 0.4}),
                   {-1.2841852318686614, -0.29340799302602339,
                    -0.29340799302602339, 3.4082234423358278,
                    3.4082234423358278},
                   1e-8);
}

TEST_CASE("algebraic tube seeds are validated") {
    AlgebraicHypersurface f = parse_polynomial(kQuadric3);
    CVec off(4);
    off << Complex(1, 0), Complex(0.5, 0), Complex(0.3, 0), Complex(0.2, 0);
    CHECK_THROWS_AS(tube_algebraic_patch(f, off, 0.5, false), OffVarietyError);

    AlgebraicHypersurface g = parse_polynomial(kOctic);
    CVec sing(4);
    sing << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0);
    CHECK_THROWS_AS(tube_algebraic_patch(g, sing, 0.5, false),
                    SingularPointError);
}

TEST_CASE("focal radii from the inward spectrum") {
    // geodesic sphere of radius pi/3: every focal distance equals the radius;
    // the eigenvalue source and the Hopf source coincide there up to
    // finite-difference noise, so identify the entries by their flag
    {
        HypersurfacePatch p =
            rich(geodesic_sphere_patch(SpaceForm(+1, 2), pi / 3, true));
        FocalReport fr = focal_radii(spectrum(p, rv({0.7, 0.8, 0.9})));
        REQUIRE(fr.radii.size() == 2);
        int eigen_idx = fr.radii[0].from_hopf ? 1 : 0;
        const FocalSource& eig = fr.radii[eigen_idx];
        const FocalSource& hop = fr.radii[1 - eigen_idx];
        CHECK(std::abs(eig.r - pi / 3) < 1e-8);
        CHECK(eig.multiplicity == 2);
        CHECK_FALSE(eig.from_hopf);
        CHECK(std::abs(hop.r - pi / 3) < 1e-8);
        CHECK(hop.multiplicity == 1);
        CHECK(hop.from_hopf);
    }
    // tube over CP^1: partial focal set at r, total collapse at the polar
    // distance 2pi/3
    {
        HypersurfacePatch p = rich(tube_cpk_patch(2, 1, pi / 6, true));
        FocalReport fr = focal_radii(spectrum(p, rv({0.3, -0.2, 0.6})));
        REQUIRE(fr.radii.size() == 2);
        CHECK(std::abs(fr.radii[0].r - pi / 6) < 1e-8);
        CHECK(fr.radii[0].multiplicity == 1);
        CHECK(fr.radii[0].from_hopf);
        CHECK(std::abs(fr.radii[1].r - 2 * pi / 3) < 1e-8);
        CHECK(fr.radii[1].multiplicity == 2);
        CHECK_FALSE(fr.radii[1].from_hopf);
    }
}

TEST_CASE("tube points sit at the tube radius from the base") {
    BaseSubmanifold base = cpk_base(2, 1);
    TubeSpec spec = make_tube_spec(base, pi / 6);
    RVec bu = rv({0.4, -0.3});
    RVec nu = rv({0.8});
    ModelPoint tp = tube_point(spec, bu, nu);
    ModelPoint bp = make_point(base.space, base.chart(bu));
    CHECK(std::abs(distance(bp, tp) - pi / 6) < 1e-12);

    BaseSubmanifold pt = point_base(SpaceForm(+1, 2));
    TubeSpec spec2 = make_tube_spec(pt, 0.9);
    CVec e0 = CVec::Zero(3);
    e0(0) = 1.0;
    ModelPoint center = make_point(spec2.base.space, e0);
    ModelPoint q = tube_point(spec2, RVec(0), rv({0.3, 0.7, 1.1}));
    CHECK(std::abs(distance(center, q) - 0.9) < 1e-12);
}

TEST_CASE("tube radius validation per curvature sign") {
    CHECK_THROWS_AS(make_tube_spec(cpk_base(2, 1), 0.0), PreconditionError);
    CHECK_THROWS_AS(make_tube_spec(cpk_base(2, 1), pi / 2), PreconditionError);
    CHECK_THROWS_AS(make_tube_spec(cpk_base(2, 1), -0.2), PreconditionError);
    CHECK_NOTHROW(make_tube_spec(point_base(SpaceForm(-1, 2)), 2.5));
    CHECK_THROWS_AS(make_tube_spec(point_base(SpaceForm(-1, 2)), 0.0),
                    PreconditionError);
}

TEST_CASE("normal exponential map rank detects partial and total collapse") {
    HypersurfacePatch p = tube_cpk_patch(2, 1, pi / 6, true);
    RVec u = rv({0.3, -0.2, 0.6});
    CHECK(normal_map_rank(p, u, 0.9) == 3);       // generic radius: immersion
    CHECK(normal_map_rank(p, u, pi / 6) == 2);    // back onto the base CP^1
    CHECK(normal_map_rank(p, u, 2 * pi / 3) == 0);  // polar point: constant map
    CHECK(normal_map_sigma_ratio(p, u, 0.9) > 1e-2);
}

TEST_CASE("rank sweep rows carry grid extrema of the singular values") {
    HypersurfacePatch p = tube_cpk_patch(2, 1, pi / 6, true);
    std::vector<RVec> grid = {rv({0.3, -0.2, 0.6}), rv({0.1, 0.3, 0.8})};
    const double rstar = 2 * pi / 3;
    std::vector<double> radii = {0.5, rstar - 0.05, rstar, rstar + 0.05, 0.9};
    auto rows = rank_sweep(p, radii, grid);
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) {
        CHECK(row.min_rank <= row.max_rank);
        CHECK(row.min_sigma_min <= row.max_sigma_max);
    }
    CHECK(rows[2].max_rank == 0);  // total collapse at the polar distance
    CHECK(rows[0].min_rank == 3);
    CHECK(rows[4].min_rank == 3);
    // the collapse radius shows a deep dip in the absolute smallest singular
    // value relative to its neighbors
    CHECK(rows[2].min_sigma_min * 10 < rows[1].min_sigma_min);
    CHECK(rows[2].min_sigma_min * 10 < rows[3].min_sigma_min);
}

TEST_CASE("blow-up probe grows toward a singular point and skips on-locus points") {
    AlgebraicHypersurface f = parse_polynomial(kOctic);
    CVec P = CVec::Zero(4);
    P(0) = 1.0;
    auto vals =
        singular_blowup_probe(f, P, 0.5, {1e-1, 1e-2}, octic_approach);
    REQUIRE(vals.size() == 2);
    REQUIRE(vals[0].has_value());
    REQUIRE(vals[1].has_value());
    CHECK(std::abs(*vals[0] - 22.626267) < 1e-3);
    CHECK(std::abs(*vals[1] - 4.5226241) < 1e-3);

    // approach curve pinned at the singular point itself: every scale skipped
    auto stuck = [&](double) { return P; };
    auto skipped = singular_blowup_probe(f, P, 0.5, {1e-1, 1e-2}, stuck);
    REQUIRE(skipped.size() == 2);
    CHECK_FALSE(skipped[0].has_value());
    CHECK_FALSE(skipped[1].has_value());
}
