#pragma once
#include <complex>
#include <string>
#include <vector>

#include "hopftube/errors.hpp"
#include "hopftube/space_forms.hpp"

namespace hopftube {

// Homogeneous polynomial in n+1 complex variables, stored as monomials.
struct AlgebraicHypersurface {
    struct Monomial {
        Complex coefficient;
        std::vector<int> exponents;  // length n+1, entries >= 0
    };
    std::vector<Monomial> monomials;
    int degree = 0;
    int nvars = 0;  // n+1

    Complex value(const CVec& z) const;
    CVec gradient(const CVec& z) const;
    Eigen::MatrixXcd hessian(const CVec& z) const;

    // sum of |coefficient * z^e| — the evaluation magnitude scale used for
    // on-variety and singularity noise floors
    double value_scale(const CVec& z) const;
    // per-component analogue for the gradient
    RVec gradient_scale(const CVec& z) const;
};

AlgebraicHypersurface make_polynomial(
    std::vector<AlgebraicHypersurface::Monomial> monos);

// Shared text format: one monomial per line, "<re> <im> : e0 e1 ... en",
// '#' comments and blank lines ignored.  Homogeneity validated.
AlgebraicHypersurface parse_polynomial(const std::string& text);
AlgebraicHypersurface parse_polynomial_file(const std::string& path);
std::string format_polynomial(const AlgebraicHypersurface& f);

// max relative Euler-identity residual |sum z_j df_j - d f| at sample points
double euler_residual(const AlgebraicHypersurface& f, const CVec& z);

}  // namespace hopftube
