#include "hopftube/space_forms.hpp"

#include <algorithm>
#include <cmath>

namespace hopftube {

Complex hermitian_form(const SpaceForm& s, const CVec& a, const CVec& b) {
    if (a.size() != s.ambient_dim() || b.size() != s.ambient_dim())
        throw DimensionError("hermitian_form: vector length != n+1");
    Complex sum = 0.0;
    for (int j = 0; j < a.size(); ++j) {
        Complex w = a[j] * std::conj(b[j]);
        sum += (s.curvature_sign < 0 && j == 0) ? -w : w;
    }
    return sum;
}

namespace detail {

double metric_raw(const SpaceForm& s, const CVec& a, const CVec& b) {
    return hermitian_form(s, a, b).real();
}

CVec normalize_rep(const SpaceForm& s, const CVec& z) {
    double c = s.curvature_sign;
    double q = (c * hermitian_form(s, z, z)).real();
    if (!(q > 0.0))
        throw PreconditionError("point representative has non-positive self-pairing");
    return z / std::sqrt(q);
}

CVec align_phase(const SpaceForm& s, const CVec& q, const CVec& z0) {
    Complex p = hermitian_form(s, q, z0);
    double ap = std::abs(p);
    if (ap == 0.0)
        throw PreconditionError("cannot phase-align orthogonal representatives");
    Complex lam = double(s.curvature_sign) * std::conj(p) / ap;
    return q * lam;
}

}  // namespace detail

CVec gauge_rep(const CVec& z) {
    int k = 0;
    double best = -1.0;
    for (int j = 0; j < z.size(); ++j) {
        double a = std::abs(z[j]);
        if (a > best) {  // strict: ties keep the lowest index
            best = a;
            k = j;
        }
    }
    if (best == 0.0) throw PreconditionError("zero vector has no gauge");
    Complex ph = z[k] / best;
    return z * std::conj(ph);
}

ModelPoint make_point(const SpaceForm& s, const CVec& raw) {
    if (raw.size() != s.ambient_dim())
        throw DimensionError("make_point: coordinate length != n+1");
    CVec z = gauge_rep(detail::normalize_rep(s, raw));
    double fv = hermitian_form(s, z, z).real();
    return ModelPoint{s, z, fv};
}

TangentVector project_horizontal(const ModelPoint& x, const CVec& w) {
    if (w.size() != x.coords.size())
        throw DimensionError("project_horizontal: length mismatch");
    double c = x.space.curvature_sign;
    CVec rep = w - x.coords * (c * hermitian_form(x.space, w, x.coords));
    return TangentVector{x, rep};
}

double metric_g(const TangentVector& X, const TangentVector& Y) {
    if (!(X.base.space == Y.base.space) || !same_point(X.base, Y.base))
        throw BaseMismatchError("metric_g: tangent vectors at different points");
    return hermitian_form(X.base.space, X.rep, Y.rep).real();
}

TangentVector complex_structure_J(const TangentVector& X) {
    return TangentVector{X.base, Complex(0.0, 1.0) * X.rep};
}

ModelPoint geodesic_F(const ModelPoint& x, const TangentVector& v, double t) {
    if (!same_point(x, v.base))
        throw PreconditionError("geodesic_F: velocity based elsewhere");
    double len2 = hermitian_form(x.space, v.rep, v.rep).real();
    if (std::abs(len2 - 1.0) > 1e-8)
        throw PreconditionError("geodesic_F: velocity is not unit");
    CVec z;
    if (x.space.curvature_sign > 0)
        z = std::cos(t) * x.coords + std::sin(t) * v.rep;
    else
        z = std::cosh(t) * x.coords + std::sinh(t) * v.rep;
    return make_point(x.space, z);
}

double distance(const ModelPoint& x, const ModelPoint& y) {
    if (!(x.space == y.space))
        throw BaseMismatchError("distance: different spaces");
    double a = std::abs(hermitian_form(x.space, x.coords, y.coords));
    if (x.space.curvature_sign > 0)
        return std::acos(std::clamp(a, 0.0, 1.0));
    return std::acosh(std::max(1.0, a));
}

bool same_point(const ModelPoint& x, const ModelPoint& y, double tol) {
    if (!(x.space == y.space) || x.coords.size() != y.coords.size())
        return false;
    return (x.coords - y.coords).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace hopftube
