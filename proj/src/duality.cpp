#include "hopftube/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "hopftube/tubes.hpp"

namespace hopftube {

namespace {

constexpr double kPi = std::numbers::pi;

SpaceForm cp_space(const AlgebraicHypersurface& f) {
    return SpaceForm{+1, f.nvars - 1};
}

void check_on_variety(const AlgebraicHypersurface& f, const CVec& xh,
                      double rel_tol) {
    const double res = std::abs(f.value(xh));
    if (res > rel_tol * std::max(1.0, f.value_scale(xh)))
        throw OffVarietyError(res);
}

double grad_norm(const AlgebraicHypersurface& f, const CVec& xh) {
    return std::sqrt(f.gradient(xh).squaredNorm());
}

}  // namespace

ModelPoint gauss_point(const AlgebraicHypersurface& f, const CVec& x) {
    const SpaceForm sp = cp_space(f);
    const CVec xh = detail::normalize_rep(sp, x);
    check_on_variety(f, xh, 1e-9);
    const CVec g = f.gradient(xh);
    if (!(std::sqrt(g.squaredNorm()) > 1e-8))
        throw SingularPointError("gradient below the smoothness threshold");
    return make_point(sp, g.conjugate());
}

IncidencePair incidence_pair(const AlgebraicHypersurface& f, const CVec& x) {
    const SpaceForm sp = cp_space(f);
    return IncidencePair{make_point(sp, x), gauss_point(f, x)};
}

std::vector<CVec> sample_variety_points(const AlgebraicHypersurface& f,
                                        int count, unsigned long long seed) {
    const int n1 = f.nvars;
    // solve for the variable of highest degree presence: most robust slices
    int jsolve = 0, bestdeg = -1;
    for (int j = 0; j < n1; ++j) {
        int dj = 0;
        for (const auto& m : f.monomials) dj = std::max(dj, m.exponents[j]);
        if (dj > bestdeg) { bestdeg = dj; jsolve = j; }
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<CVec> out;
    out.reserve(count);
    int attempts = 0;
    const int max_attempts = 200 * count + 200;
    while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
        ++attempts;
        CVec z(n1);
        for (int j = 0; j < n1; ++j) z(j) = Complex(gauss(rng), gauss(rng));
        Complex t(gauss(rng), gauss(rng));
        bool ok = false;
        for (int it = 0; it < 80; ++it) {
            z(jsolve) = t;
            const Complex fv = f.value(z);
            const Complex gd = f.gradient(z)(jsolve);
            if (!(std::abs(gd) > 0.0)) break;
            const Complex step = fv / gd;
            t -= step;
            if (std::abs(step) < 4e-16 * std::max(std::abs(t), 1e-12)) {
                ok = true;
                break;
            }
        }
        if (!ok) continue;
        z(jsolve) = t;
        const SpaceForm sp = cp_space(f);
        const CVec zh = detail::normalize_rep(sp, z);
        if (std::abs(f.value(zh)) > 1e-10 * std::max(1.0, f.value_scale(zh)))
            continue;
        if (!(grad_norm(f, zh) > 1e-6)) continue;  // skip near-singular draws
        out.push_back(zh);
    }
    if (static_cast<int>(out.size()) < count)
        throw Error("could not sample enough smooth variety points");
    return out;
}

TubeDualityResult tube_duality_check(const AlgebraicHypersurface& f, double r,
                                     int sample_count,
                                     unsigned long long seed) {
    if (!(r > 0.0 && r < kPi / 2.0))
        throw PreconditionError("tube radius must lie in (0, pi/2)");
    const std::vector<CVec> xs = sample_variety_points(f, sample_count, seed);
    std::vector<ModelPoint> duals;
    duals.reserve(xs.size());
    for (const CVec& x : xs) duals.push_back(gauss_point(f, x));

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    TubeDualityResult res{0.0, 0.0, sample_count};
    const double want = kPi / 2.0 - r;
    for (int i = 0; i < sample_count; ++i) {
        const double t = angle(rng);
        const ModelPoint p = tube_chart_algebraic(f, xs[i], t, r);
        const double direct = std::abs(distance(p, duals[i]) - want);
        double nearest = distance(p, duals[0]);
        for (size_t j = 1; j < duals.size(); ++j)
            nearest = std::min(nearest, distance(p, duals[j]));
        res.max_direct_residual = std::max(res.max_direct_residual, direct);
        res.max_nearest_residual =
            std::max(res.max_nearest_residual, std::abs(nearest - want));
    }
    return res;
}

SpotCheck biduality_spot_check(const AlgebraicHypersurface& f, const CVec& x) {
    // closed-form dual Gauss map available only for multiples of sum z_j^2
    bool is_scaled_quadric = static_cast<int>(f.monomials.size()) == f.nvars;
    Complex coeff(0.0, 0.0);
    std::vector<bool> seen(f.nvars, false);
    if (is_scaled_quadric) {
        coeff = f.monomials.front().coefficient;
        for (const auto& m : f.monomials) {
            int which = -1;
            for (int j = 0; j < f.nvars; ++j) {
                if (m.exponents[j] == 2 && which < 0)
                    which = j;
                else if (m.exponents[j] != 0)
                    which = -2;
            }
            if (which < 0 || seen[which] ||
                std::abs(m.coefficient - coeff) > 1e-12 * std::abs(coeff)) {
                is_scaled_quadric = false;
                break;
            }
            seen[which] = true;
        }
    }
    const SpaceForm sp = cp_space(f);
    const CVec xh = detail::normalize_rep(sp, x);
    check_on_variety(f, xh, 1e-9);  // off-variety input is an error, not N/A
    if (!is_scaled_quadric) return SpotCheck::inapplicable;

    const ModelPoint y = gauss_point(f, x);
    const ModelPoint x2 = gauss_point(f, y.coords);  // dual map is conjugation
    return same_point(x2, make_point(sp, xh), 1e-7) ? SpotCheck::passed
                                                    : SpotCheck::failed;
}

std::vector<SingularCandidate> singular_locus_probe(
    const AlgebraicHypersurface& f, const std::vector<CVec>& grid) {
    const SpaceForm sp = cp_space(f);
    std::vector<SingularCandidate> out;
    for (const CVec& raw : grid) {
        CVec z = detail::normalize_rep(sp, raw);
        if (std::abs(f.value(z)) > 1e-8 * std::max(1.0, f.value_scale(z)))
            continue;
        if (grad_norm(f, z) >
            1e-6 * std::max(1.0, f.gradient_scale(z).norm()))
            continue;

        // damped descent on |grad f|^2, steps projected along the f=0
        // linearization when the gradient is meaningfully nonzero
        double step = 0.1;
        double h0 = f.gradient(z).squaredNorm();
        for (int it = 0; it < 100 && step > 1e-12; ++it) {
            const CVec g = f.gradient(z);
            const Eigen::MatrixXcd H = f.hessian(z);
            CVec dir = -(H.conjugate() * g);
            const double dn = std::sqrt(dir.squaredNorm());
            if (!(dn > 0.0)) break;
            dir /= dn;
            const double gn2 = g.squaredNorm();
            if (gn2 > 1e-12 * std::max(1.0, f.gradient_scale(z).squaredNorm())) {
                const CVec gc = g.conjugate();
                dir -= gc * (gc.dot(dir) / gn2);  // keep f stationary
            }
            const CVec zn = detail::normalize_rep(sp, CVec(z + step * dir));
            const double hn = f.gradient(zn).squaredNorm();
            if (hn < h0) {
                z = zn;
                h0 = hn;
            } else {
                step *= 0.5;
            }
        }

        const ModelPoint cand = make_point(sp, z);
        bool dup = false;
        for (const SingularCandidate& c : out)
            if (same_point(c.point, cand, 1e-6)) { dup = true; break; }
        if (dup) continue;
        out.push_back({cand, std::abs(f.value(cand.coords)),
                       grad_norm(f, cand.coords)});
    }
    return out;
}

}  // namespace hopftube
