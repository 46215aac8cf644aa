#pragma once
#include <array>
#include <functional>
#include <vector>

#include "hopftube/errors.hpp"
#include "hopftube/space_forms.hpp"

namespace hopftube {

// Parametrized real hypersurface patch: chart from a box in R^{2n-1} into the
// homogeneous model.  orient_ref supplies an ambient reference vector field
// whose positive g-pairing fixes the sign of the unit normal.
struct HypersurfacePatch {
    SpaceForm space;
    std::function<CVec(const RVec&)> chart;       // raw homogeneous rep
    std::function<CVec(const RVec&)> orient_ref;  // normal-sign reference field
    std::vector<std::array<double, 2>> domain_box;  // per-axis [lo,hi]; empty = unbounded
    double fd_step = 1e-4;
    bool richardson = false;  // extrapolate (h, h/2) pairs

    int param_dim() const { return 2 * space.complex_dim - 1; }
};

struct Frame {
    ModelPoint base;
    std::vector<CVec> tangent_basis;  // orthonormal horizontal reps at base
    CVec normal;                      // unit normal xi
    Eigen::MatrixXd chol_inv;         // lower-tri map raw FD tangents -> frame
    Complex gauge_phase;              // phase applied to the raw chart rep
};

struct ShapeResult {
    Eigen::MatrixXd matrix;  // symmetric Weingarten matrix in the frame basis
    double asymmetry;        // max-abs entry of A - A^T before symmetrization
    Frame frame;
};

struct ShapeSpectrum {
    RVec eigenvalues;              // ascending
    Eigen::MatrixXd eigenvectors;  // columns, frame basis, sign-canonicalized
    RVec hopf_direction;           // frame components of U = -J xi
    double mu;                     // g(AU, U)
    double hopf_defect;            // ||AU - mu U||_g
    double mean_curvature;         // trace(A)/(2n-1)
};

struct StructureTensors {
    Eigen::MatrixXd phi;  // tangential part of J in the frame basis
    RVec f_form;          // f(t_a) = g(t_a, U)
    RVec U;               // frame components of U = -J xi
};

struct HopfReport {
    double max_defect = 0.0;
    double mu_mean = 0.0;
    double mu_stddev = 0.0;
    double mu_max_deviation = 0.0;
    bool is_hopf = false;
    int points_evaluated = 0;
    std::vector<int> failed_points;  // grid indices whose evaluation threw
};

struct ShapeIdentityResiduals {
    double identity_residual;  // ||2A phi A - mu(phi A + A phi) - 2c phi||_2
    double pairing_residual;   // closure of alpha -> (mu alpha + 2)/(2 alpha - mu)
    bool pairing_applicable;
};

struct CurvatureBoundCheck {
    double lhs;  // mu
    double rhs;  // 2 cot(2 arccot[((2n-1)H - mu)/(2n-2)])
    bool satisfied;
    bool applicable;
};

// Orthonormal frame + unit normal from central differences at step h
// (patch.fd_step for the two-argument form).
Frame frame_at(const HypersurfacePatch& patch, const RVec& u);
Frame frame_at_step(const HypersurfacePatch& patch, const RVec& u, double h);

// Weingarten matrix by differencing the transported normal field at step h;
// throws NoisyDerivativeError when the pre-symmetrization asymmetry exceeds
// 1e-4 * max(1, max|A|).
ShapeResult shape_operator_plain(const HypersurfacePatch& patch, const RVec& u,
                                 double h);
// Honors patch.fd_step and patch.richardson.
ShapeResult shape_operator(const HypersurfacePatch& patch, const RVec& u);

// Eigen-decomposition plus the Hopf quantities; when patch.richardson is set
// both the matrix and the U-components are (h, h/2) extrapolated.
ShapeSpectrum spectrum(const HypersurfacePatch& patch, const RVec& u);

StructureTensors structure_tensors(const Frame& frame);

// Spectrum statistics over a parameter grid; per-point errors are recorded,
// not fatal.
HopfReport hopf_report(const HypersurfacePatch& patch,
                       const std::vector<RVec>& sample_grid, double tol);

// Residuals of the Weingarten/structure-tensor identity and the eigenvalue
// pairing closure at a Hopf point (hopf_defect <= hopf_tol required).
ShapeIdentityResiduals shape_identity_residuals(const HypersurfacePatch& patch,
                                                const RVec& u,
                                                double hopf_tol = 1e-6);

// mu >= 2 cot(2 arccot[((2n-1)H - mu)/(2n-2)]) diagnostic; defined in the
// positive-curvature model only (inapplicable when curvature_sign < 0).
CurvatureBoundCheck mean_curvature_bound_check(const ShapeSpectrum& spec,
                                               int n, int curvature_sign = +1);

// Deterministic sampling helpers for grids and seeded random draws.
std::vector<RVec> grid_linspace(const RVec& lo, const RVec& hi,
                                const std::vector<int>& counts);
std::vector<RVec> sample_box(const RVec& lo, const RVec& hi, int count,
                             unsigned long long seed);

}  // namespace hopftube
