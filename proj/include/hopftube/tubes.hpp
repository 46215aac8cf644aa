#pragma once
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hopftube/errors.hpp"
#include "hopftube/hypersurface.hpp"
#include "hopftube/polynomial.hpp"
#include "hopftube/space_forms.hpp"

namespace hopftube {

enum class BaseKind { holomorphic_chart, algebraic_hypersurface, real_form };

// Base submanifold with an explicit unit-normal sampler over the fiber sphere.
struct BaseSubmanifold {
    BaseKind kind;
    SpaceForm space;
    int base_param_dim;
    int normal_param_dim;
    std::function<CVec(const RVec&)> chart;  // raw base representative
    // (base params, fiber angles) -> unit normal rep at the chart point
    std::function<CVec(const RVec&, const RVec&)> normal_sampler;
};

struct TubeSpec {
    BaseSubmanifold base;
    double radius;
};

// validates the radius range: (0, pi/2) for c=+1, r > 0 for c=-1
TubeSpec make_tube_spec(BaseSubmanifold base, double radius);

struct FocalSource {
    double r;
    int multiplicity;
    bool from_hopf;  // false: eigenvalue source lambda = cot r
};

struct FocalReport {
    std::vector<FocalSource> radii;  // ascending
};

struct RankRow {
    double r;
    int min_rank;
    int max_rank;
    double min_sigma_ratio;  // grid-min of sigma_min/sigma_max of the Jacobian
    // absolute singular-value extrema over the grid; a total collapse (every
    // direction focal) leaves sigma_min/sigma_max of order one while both
    // extrema fall to noise, so dip detection needs the absolute values
    double min_sigma_min;
    double max_sigma_max;
};

ModelPoint tube_point(const TubeSpec& spec, const RVec& base_param,
                      const RVec& normal_param);

// closed-form tube point over an algebraic hypersurface:
// z_j = x_j cos r + sin r * conj(df_j)/|grad f| * e^{it}
ModelPoint tube_chart_algebraic(const AlgebraicHypersurface& f, const CVec& x,
                                double t, double r);

// outward-normal tube spectrum from the base principal angles:
// {-cot r  x(k-1)} u {cot(theta_j - r)} u {2 cot(2(Theta - r))  x1}
std::vector<std::pair<double, int>> predicted_spectrum(
    const std::vector<std::pair<double, int>>& theta_list, double Theta, int k,
    double r);

// focal distances recovered from an inward-normal Hopf spectrum (c=+1):
// arccot(lambda) in (0,pi) per eigenvalue, plus mu = 2 cot 2r inverted
FocalReport focal_radii(const ShapeSpectrum& spec, double hopf_tol = 1e-6);

// rank of the real finite-difference Jacobian of the tube map in pivoted
// affine coordinates; singular values > max(tol_ratio*sigma_max, 1e-7) count
int jacobian_rank(const TubeSpec& spec, const RVec& params,
                  double tol_ratio = 1e-6, double h = 1e-4);

// same measurement for the normal-exponential map u -> F(point(u), xi(u), r)
// of a hypersurface patch
int normal_map_rank(const HypersurfacePatch& patch, const RVec& u, double r,
                    double tol_ratio = 1e-6, double h = 1e-4);
double normal_map_sigma_ratio(const HypersurfacePatch& patch, const RVec& u,
                              double r, double h = 1e-4);

// per-radius rank extrema (and sigma-ratio minima) of the normal-exponential
// map over a parameter grid
std::vector<RankRow> rank_sweep(const HypersurfacePatch& patch,
                                const std::vector<double>& radii,
                                const std::vector<RVec>& grid,
                                double tol_ratio = 1e-6, double h = 1e-4);

// max |principal curvature| of the radius-r tube at approach(scale) for each
// scale; nullopt marks an approach point skipped as singular
std::vector<std::optional<double>> singular_blowup_probe(
    const AlgebraicHypersurface& f, const CVec& singular_point, double r,
    const std::vector<double>& approach_scales,
    const std::function<CVec(double)>& approach, double fd_step = 1e-3,
    bool richardson = true);

// --- canned patch and base builders -----------------------------------------

// geodesic sphere about e0; optional radius warp makes a non-Hopf control
HypersurfacePatch geodesic_sphere_patch(
    const SpaceForm& space, double r, bool inward,
    std::function<double(const RVec&)> warp = nullptr);

// tube over the totally geodesic CP^k spanned by e0..ek inside CP^n
HypersurfacePatch tube_cpk_patch(int n, int k, double r, bool inward);

// tube over the real form RP^2 (real unit vectors) inside CP^2
HypersurfacePatch tube_rp2_patch(double r, bool inward);

// tube over the quadric sum z_j^2 = 0 in CP^n (n = 2 or 3), rational chart
HypersurfacePatch tube_quadric_patch(int n, double r, bool inward);

// tube over f = 0 near a smooth seed point, base chart by Newton's method on
// the dominant-gradient coordinate with offsets scaled per component
HypersurfacePatch tube_algebraic_patch(const AlgebraicHypersurface& f,
                                       const CVec& seed, double r, bool inward);

// matching BaseSubmanifold builders for the tube_point/jacobian_rank ops
BaseSubmanifold point_base(const SpaceForm& space);  // base = e0
BaseSubmanifold cpk_base(int n, int k);
BaseSubmanifold rp2_base();
BaseSubmanifold quadric_base(int n);
BaseSubmanifold algebraic_base(const AlgebraicHypersurface& f, const CVec& seed);

// canonical principal-angle data (theta_list, Theta, k) for the canned bases
struct TubeSpectrumParams {
    std::vector<std::pair<double, int>> theta_list;
    double Theta;
    int k;
};
TubeSpectrumParams point_base_params(int n);
TubeSpectrumParams cpk_base_params(int n, int k);
TubeSpectrumParams rp2_base_params(int n);
TubeSpectrumParams quadric_base_params(int n);

}  // namespace hopftube
