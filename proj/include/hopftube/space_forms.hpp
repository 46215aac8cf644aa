#pragma once
#include <Eigen/Dense>
#include <complex>

#include "hopftube/errors.hpp"

namespace hopftube {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Model of the complex space form with holomorphic curvature +4 (cp) or -4
// (ch): unit sphere / hyperboloid in C^{n+1} modulo phase.  The ch form has
// signature (-,+,...,+) with the minus on coordinate 0.
struct SpaceForm {
    int curvature_sign = +1;  // +1 (cp) or -1 (ch)
    int complex_dim = 2;      // n >= 2

    SpaceForm() = default;
    SpaceForm(int c, int n) : curvature_sign(c), complex_dim(n) {
        if (c != 1 && c != -1)
            throw PreconditionError("curvature sign must be +1 or -1");
        if (n < 2) throw PreconditionError("complex dimension must be >= 2");
    }
    int ambient_dim() const { return complex_dim + 1; }
    bool operator==(const SpaceForm& o) const {
        return curvature_sign == o.curvature_sign &&
               complex_dim == o.complex_dim;
    }
};

// Hermitian form, conjugate-linear in the SECOND argument.
Complex hermitian_form(const SpaceForm& s, const CVec& a, const CVec& b);

// Point held as a normalized, phase-gauged homogeneous representative:
// <z,z> = c and the largest-modulus coordinate is real nonnegative
// (ties broken by lowest index).
struct ModelPoint {
    SpaceForm space;
    CVec coords;
    double form_value;  // cached self-pairing, = c
};

ModelPoint make_point(const SpaceForm& s, const CVec& raw);

// gauge phase only (no renormalization); exposed for chart machinery
CVec gauge_rep(const CVec& z);

struct TangentVector {
    ModelPoint base;
    CVec rep;  // horizontal: <rep, base> = 0
};

// w minus its component along x: pairs to zero with x afterwards
TangentVector project_horizontal(const ModelPoint& x, const CVec& w);

double metric_g(const TangentVector& X, const TangentVector& Y);

TangentVector complex_structure_J(const TangentVector& X);

// unit-speed geodesic through x with initial velocity v, evaluated at t
ModelPoint geodesic_F(const ModelPoint& x, const TangentVector& v, double t);

double distance(const ModelPoint& x, const ModelPoint& y);

bool same_point(const ModelPoint& x, const ModelPoint& y, double tol = 1e-9);

namespace detail {
// rotate q by the unit phase that makes <q, z0> real positive (times c);
// used to compare neighboring homogeneous representatives
CVec align_phase(const SpaceForm& s, const CVec& q, const CVec& z0);
// raw metric on representatives
double metric_raw(const SpaceForm& s, const CVec& a, const CVec& b);
CVec normalize_rep(const SpaceForm& s, const CVec& z);
}  // namespace detail

}  // namespace hopftube
