#pragma once
#include <vector>

#include "hopftube/errors.hpp"
#include "hopftube/polynomial.hpp"
#include "hopftube/space_forms.hpp"

namespace hopftube {

// point of the variety paired with the dual point of its tangent hyperplane
struct IncidencePair {
    ModelPoint x;
    ModelPoint y;
};

// y = conjugated gradient of f at x, normalized and gauged; Euler's identity
// makes <x, y> = 0, i.e. distance(x, y) = pi/2
ModelPoint gauss_point(const AlgebraicHypersurface& f, const CVec& x);

IncidencePair incidence_pair(const AlgebraicHypersurface& f, const CVec& x);

struct TubeDualityResult {
    double max_direct_residual;   // |distance(p, gauss(x)) - (pi/2 - r)|
    double max_nearest_residual;  // vs the nearest of all sampled dual points
    int samples;
};

// sampled tube points of radius r over f=0 must sit at distance pi/2 - r
// from the dual variety
TubeDualityResult tube_duality_check(const AlgebraicHypersurface& f, double r,
                                     int sample_count,
                                     unsigned long long seed = 20240816ull);

enum class SpotCheck { passed, failed, inapplicable };

// applies the Gauss construction twice and compares with x; only varieties
// whose dual Gauss map is available in closed form (multiples of sum z_j^2,
// where it is again coordinate conjugation) are checked, others are
// inapplicable
SpotCheck biduality_spot_check(const AlgebraicHypersurface& f, const CVec& x);

struct SingularCandidate {
    ModelPoint point;
    double f_residual;
    double grad_norm;
};

// grid points with small |f| and small |grad f|, refined by damped descent
// on |grad f|^2, deduplicated
std::vector<SingularCandidate> singular_locus_probe(
    const AlgebraicHypersurface& f, const std::vector<CVec>& grid);

// deterministic smooth points of f=0: random affine slices solved by Newton
// iteration, filtered by the smoothness threshold
std::vector<CVec> sample_variety_points(const AlgebraicHypersurface& f,
                                        int count, unsigned long long seed);

}  // namespace hopftube
