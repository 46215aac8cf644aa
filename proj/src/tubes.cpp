#include "hopftube/tubes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace hopftube {

namespace {

constexpr double kPi = std::numbers::pi;

double gmet(const SpaceForm& sp, const CVec& a, const CVec& b) {
    return hermitian_form(sp, a, b).real();
}

CVec project_h_raw(const SpaceForm& sp, const CVec& w, const CVec& x) {
    const Complex s = static_cast<double>(sp.curvature_sign) *
                      hermitian_form(sp, w, x);
    return w - x * s;
}

CVec unit_g(const SpaceForm& sp, const CVec& v) {
    return v / std::sqrt(gmet(sp, v, v));
}

CVec basis_vec(int n1, int j, bool im = false) {
    CVec v = CVec::Zero(n1);
    v(j) = im ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
    return v;
}

int argmax_abs(const CVec& z) {
    int k = 0;
    double best = std::abs(z(0));
    for (int j = 1; j < z.size(); ++j) {
        const double a = std::abs(z(j));
        if (a > best) { best = a; k = j; }
    }
    return k;
}

// polar weights: 2m-1 angles -> 2m unit-sphere coordinates
std::vector<double> sphere_angles(const RVec& phis) {
    std::vector<double> out;
    out.reserve(phis.size() + 1);
    double prod = 1.0;
    for (int i = 0; i < phis.size(); ++i) {
        out.push_back(prod * std::cos(phis(i)));
        prod *= std::sin(phis(i));
    }
    out.push_back(prod);
    return out;
}

Complex newton_dep(const AlgebraicHypersurface& f, CVec z, int jstar,
                   Complex seed) {
    Complex t = seed;
    for (int it = 0; it < 80; ++it) {
        z(jstar) = t;
        const Complex fv = f.value(z);
        const Complex gd = f.gradient(z)(jstar);
        if (!(std::abs(gd) > 0.0))
            throw SingularPointError("dependent-coordinate derivative vanished");
        const Complex step = fv / gd;
        t -= step;
        if (std::abs(step) < 4e-16 * std::max(std::abs(t), 1e-12)) break;
    }
    return t;
}

struct RankMeasure {
    int rank;
    double sigma_ratio;
    double sigma_min;
    double sigma_max;
};

// re/im of z_j / z_pivot, j != pivot: phase-invariant local coordinates
RVec affine_coords(const CVec& z, int pivot) {
    RVec out(2 * (z.size() - 1));
    int idx = 0;
    for (int j = 0; j < z.size(); ++j) {
        if (j == pivot) continue;
        const Complex w = z(j) / z(pivot);
        out(idx++) = w.real();
        out(idx++) = w.imag();
    }
    return out;
}

RankMeasure map_rank(const std::function<CVec(const RVec&)>& mapfn,
                     const RVec& u, double h, double tol_ratio) {
    const CVec z0 = mapfn(u);
    const int pivot = argmax_abs(z0);
    const int m = static_cast<int>(u.size());
    Eigen::MatrixXd J(2 * (z0.size() - 1), m);
    for (int i = 0; i < m; ++i) {
        RVec up = u, um = u;
        up(i) += h;
        um(i) -= h;
        J.col(i) =
            (affine_coords(mapfn(up), pivot) - affine_coords(mapfn(um), pivot)) /
            (2.0 * h);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
    const RVec sv = svd.singularValues();
    const double smax = sv(0);
    if (!(smax > 0.0)) return {0, 0.0, 0.0, 0.0};
    const double thresh = std::max(tol_ratio * smax, 1e-7);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > thresh) ++rank;
    return {rank, sv(sv.size() - 1) / smax, sv(sv.size() - 1), smax};
}

}  // namespace

TubeSpec make_tube_spec(BaseSubmanifold base, double radius) {
    if (base.space.curvature_sign > 0) {
        if (!(radius > 0.0 && radius < kPi / 2.0))
            throw PreconditionError("tube radius must lie in (0, pi/2)");
    } else if (!(radius > 0.0)) {
        throw PreconditionError("tube radius must be positive");
    }
    return TubeSpec{std::move(base), radius};
}

ModelPoint tube_point(const TubeSpec& spec, const RVec& base_param,
                      const RVec& normal_param) {
    const BaseSubmanifold& b = spec.base;
    if (base_param.size() != b.base_param_dim ||
        normal_param.size() != b.normal_param_dim)
        throw DimensionError("tube parameter split has wrong dimensions");
    const SpaceForm& sp = b.space;
    const CVec xn = detail::normalize_rep(sp, b.chart(base_param));
    const int k = argmax_abs(xn);
    const Complex lam = std::conj(xn(k) / std::abs(xn(k)));
    const ModelPoint x = make_point(sp, xn * lam);
    const CVec v = b.normal_sampler(base_param, normal_param) * lam;
    return geodesic_F(x, TangentVector{x, v}, spec.radius);
}

ModelPoint tube_chart_algebraic(const AlgebraicHypersurface& f, const CVec& x,
                                double t, double r) {
    const SpaceForm sp{+1, f.nvars - 1};
    const CVec xh = detail::normalize_rep(sp, x);
    const double fres = std::abs(f.value(xh));
    if (fres > 1e-9 * std::max(1.0, f.value_scale(xh)))
        throw OffVarietyError(fres);
    const CVec g = f.gradient(xh);
    const double gn = std::sqrt(g.squaredNorm());
    if (!(gn > 1e-8))
        throw SingularPointError("gradient below the smoothness threshold");
    const CVec v = g.conjugate() / gn * std::exp(Complex(0.0, t));
    return make_point(sp, xh * std::cos(r) + v * std::sin(r));
}

std::vector<std::pair<double, int>> predicted_spectrum(
    const std::vector<std::pair<double, int>>& theta_list, double Theta, int k,
    double r) {
    if (!(r > 0.0 && r < kPi / 2.0))
        throw PreconditionError("tube radius must lie in (0, pi/2)");
    if (!(Theta > 0.0 && Theta <= kPi / 2.0))
        throw PreconditionError("maximal angle must lie in (0, pi/2]");
    if (k < 1) throw PreconditionError("fiber direction count must be >= 1");
    if (std::abs(Theta - r) < 1e-8) throw FocalDegeneracyError("r at the maximal angle");
    for (const auto& [th, mult] : theta_list) {
        if (!(th > 0.0 && th < kPi))
            throw PreconditionError("principal angle must lie in (0, pi)");
        if (mult < 1) throw PreconditionError("multiplicity must be >= 1");
        if (std::abs(th - r) < 1e-8)
            throw FocalDegeneracyError("r at a principal angle");
    }
    std::vector<std::pair<double, int>> out;
    if (k - 1 > 0) out.emplace_back(-std::cos(r) / std::sin(r), k - 1);
    for (const auto& [th, mult] : theta_list)
        out.emplace_back(std::cos(th - r) / std::sin(th - r), mult);
    const double d = 2.0 * (Theta - r);
    out.emplace_back(2.0 * std::cos(d) / std::sin(d), 1);
    return out;
}

FocalReport focal_radii(const ShapeSpectrum& spec, double hopf_tol) {
    if (spec.hopf_defect > hopf_tol)
        throw PreconditionError("focal radii require a Hopf spectrum");
    const int m = static_cast<int>(spec.eigenvalues.size());
    int hopf_idx = 0;
    double best = -1.0;
    for (int i = 0; i < m; ++i) {
        const double ov =
            std::abs(spec.eigenvectors.col(i).dot(spec.hopf_direction));
        if (ov > best) { best = ov; hopf_idx = i; }
    }
    FocalReport rep;
    int i = 0;
    while (i < m) {
        if (i == hopf_idx) { ++i; continue; }
        double sum = spec.eigenvalues(i);
        int count = 1;
        int j = i + 1;
        while (j < m && j != hopf_idx &&
               spec.eigenvalues(j) - spec.eigenvalues(j - 1) <= 1e-6) {
            sum += spec.eigenvalues(j);
            ++count;
            ++j;
        }
        const double lam = sum / count;
        rep.radii.push_back({std::atan2(1.0, lam), count, false});
        i = j;
    }
    rep.radii.push_back({0.5 * std::atan2(2.0, spec.mu), 1, true});
    std::stable_sort(rep.radii.begin(), rep.radii.end(),
                     [](const FocalSource& a, const FocalSource& b) {
                         return a.r < b.r;
                     });
    return rep;
}

int jacobian_rank(const TubeSpec& spec, const RVec& params, double tol_ratio,
                  double h) {
    const BaseSubmanifold& b = spec.base;
    if (params.size() != b.base_param_dim + b.normal_param_dim)
        throw DimensionError("tube parameter vector has wrong dimension");
    auto mapfn = [&](const RVec& u) -> CVec {
        return tube_point(spec, u.head(b.base_param_dim),
                          u.tail(b.normal_param_dim))
            .coords;
    };
    return map_rank(mapfn, params, h, tol_ratio).rank;
}

namespace {
std::function<CVec(const RVec&)> normal_exp_map(const HypersurfacePatch& patch,
                                                double r) {
    // The frame step bounds the smooth O(h^2) error of the normal field; at a
    // total-collapse radius the ideal Jacobian vanishes, so that error term
    // must sit well below the rank threshold.
    const double hf = std::min(patch.fd_step, 1e-5);
    return [&patch, r, hf](const RVec& uu) -> CVec {
        const Frame fr = frame_at_step(patch, uu, hf);
        return geodesic_F(fr.base, TangentVector{fr.base, fr.normal}, r).coords;
    };
}
}  // namespace

int normal_map_rank(const HypersurfacePatch& patch, const RVec& u, double r,
                    double tol_ratio, double h) {
    return map_rank(normal_exp_map(patch, r), u, h, tol_ratio).rank;
}

double normal_map_sigma_ratio(const HypersurfacePatch& patch, const RVec& u,
                              double r, double h) {
    return map_rank(normal_exp_map(patch, r), u, h, 1e-6).sigma_ratio;
}

std::vector<RankRow> rank_sweep(const HypersurfacePatch& patch,
                                const std::vector<double>& radii,
                                const std::vector<RVec>& grid, double tol_ratio,
                                double h) {
    std::vector<RankRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        RankRow row{r, -1, -1, 0.0, 0.0, 0.0};
        bool any = false;
        const auto mapfn = normal_exp_map(patch, r);
        for (const RVec& u : grid) {
            try {
                const RankMeasure rm = map_rank(mapfn, u, h, tol_ratio);
                if (!any) {
                    row.min_rank = row.max_rank = rm.rank;
                    row.min_sigma_ratio = rm.sigma_ratio;
                    row.min_sigma_min = rm.sigma_min;
                    row.max_sigma_max = rm.sigma_max;
                    any = true;
                } else {
                    row.min_rank = std::min(row.min_rank, rm.rank);
                    row.max_rank = std::max(row.max_rank, rm.rank);
                    row.min_sigma_ratio =
                        std::min(row.min_sigma_ratio, rm.sigma_ratio);
                    row.min_sigma_min = std::min(row.min_sigma_min, rm.sigma_min);
                    row.max_sigma_max = std::max(row.max_sigma_max, rm.sigma_max);
                }
            } catch (const Error&) {
                // per-cell failures recorded by omission
            }
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<std::optional<double>> singular_blowup_probe(
    const AlgebraicHypersurface& f, const CVec& singular_point, double r,
    const std::vector<double>& approach_scales,
    const std::function<CVec(double)>& approach, double fd_step,
    bool richardson) {
    const SpaceForm sp{+1, f.nvars - 1};
    // an empty center skips the precondition: that is the smooth-control mode,
    // where the approach path tends to an ordinary point
    if (singular_point.size() > 0) {
        const CVec ph = detail::normalize_rep(sp, singular_point);
        const CVec g0 = f.gradient(ph);
        const double gs0 = f.gradient_scale(ph).norm();
        if (std::sqrt(g0.squaredNorm()) > 1e-10 * std::max(1.0, gs0))
            throw PreconditionError("probe center is not a singular point");
    }

    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<std::optional<double>> out;
    out.reserve(approach_scales.size());
    for (double sc : approach_scales) {
        const CVec xh = detail::normalize_rep(sp, approach(sc));
        const CVec g = f.gradient(xh);
        const RVec gscale = f.gradient_scale(xh);
        bool singular = true;
        for (int j = 0; j < g.size(); ++j) {
            if (std::abs(g(j)) > 10.0 * eps * gscale(j)) {
                singular = false;
                break;
            }
        }
        if (singular) {
            out.push_back(std::nullopt);
            continue;
        }
        try {
            HypersurfacePatch patch = tube_algebraic_patch(f, xh, r, false);
            patch.fd_step = fd_step;
            patch.richardson = richardson;
            RVec u0 = RVec::Zero(patch.param_dim());
            u0(u0.size() - 1) = 0.4;  // fixed fiber angle of the probe point
            const ShapeSpectrum s = spectrum(patch, u0);
            out.push_back(s.eigenvalues.cwiseAbs().maxCoeff());
        } catch (const SingularPointError&) {
            out.push_back(std::nullopt);
        }
    }
    return out;
}

// --- canned charts ----------------------------------------------------------

HypersurfacePatch geodesic_sphere_patch(const SpaceForm& space, double r,
                                        bool inward,
                                        std::function<double(const RVec&)> warp) {
    const int n = space.complex_dim;
    const int n1 = n + 1;
    std::vector<CVec> dirs;
    for (int j = 1; j < n1; ++j) {
        dirs.push_back(basis_vec(n1, j));
        dirs.push_back(basis_vec(n1, j, true));
    }
    const CVec q0 = basis_vec(n1, 0);
    const int csign = space.curvature_sign;
    const double osign = inward ? 1.0 : -1.0;

    auto vdir = [dirs, n1](const RVec& u) {
        const std::vector<double> w = sphere_angles(u);
        CVec v = CVec::Zero(n1);
        for (size_t l = 0; l < dirs.size(); ++l) v += dirs[l] * w[l];
        return v;
    };
    auto chart = [vdir, q0, r, csign, warp](const RVec& u) {
        const CVec v = vdir(u);
        const double rr = warp ? r + warp(u) : r;
        if (csign > 0) return CVec(q0 * std::cos(rr) + v * std::sin(rr));
        return CVec(q0 * std::cosh(rr) + v * std::sinh(rr));
    };
    auto orient = [vdir, q0, r, csign, warp, osign](const RVec& u) {
        const CVec v = vdir(u);
        const double rr = warp ? r + warp(u) : r;
        if (csign > 0)
            return CVec(osign * (q0 * std::sin(rr) - v * std::cos(rr)));
        return CVec(-osign * (q0 * std::sinh(rr) + v * std::cosh(rr)));
    };

    HypersurfacePatch patch;
    patch.space = space;
    patch.chart = chart;
    patch.orient_ref = orient;
    return patch;
}

HypersurfacePatch tube_cpk_patch(int n, int k, double r, bool inward) {
    const int n1 = n + 1;
    std::vector<CVec> nd;
    for (int j = k + 1; j < n1; ++j) {
        nd.push_back(basis_vec(n1, j));
        nd.push_back(basis_vec(n1, j, true));
    }
    const SpaceForm sp{+1, n};
    const double osign = inward ? -1.0 : 1.0;

    auto parts = [sp, nd, n1, k](const RVec& u, CVec& x, CVec& v) {
        CVec xr = basis_vec(n1, 0);
        for (int j = 0; j < k; ++j)
            xr(j + 1) = Complex(u(2 * j), u(2 * j + 1));
        x = detail::normalize_rep(sp, xr);
        const std::vector<double> w = sphere_angles(u.tail(u.size() - 2 * k));
        v = CVec::Zero(n1);
        for (size_t l = 0; l < nd.size(); ++l) v += nd[l] * w[l];
    };
    auto chart = [parts, r](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(x * std::cos(r) + v * std::sin(r));
    };
    auto orient = [parts, r, osign](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(osign * (-x * std::sin(r) + v * std::cos(r)));
    };

    HypersurfacePatch patch;
    patch.space = sp;
    patch.chart = chart;
    patch.orient_ref = orient;
    return patch;
}

HypersurfacePatch tube_rp2_patch(double r, bool inward) {
    const SpaceForm sp{+1, 2};
    const double osign = inward ? -1.0 : 1.0;

    auto parts = [sp](const RVec& u, CVec& x, CVec& v) {
        CVec xr(3);
        xr << Complex(1.0, 0.0), Complex(u(0), 0.0), Complex(u(1), 0.0);
        x = detail::normalize_rep(sp, xr);
        const CVec t1 = unit_g(sp, project_h_raw(sp, basis_vec(3, 1), x));
        CVec t2 = project_h_raw(sp, basis_vec(3, 2), x);
        t2 = unit_g(sp, CVec(t2 - t1 * gmet(sp, t2, t1)));
        v = Complex(0.0, 1.0) * (t1 * std::cos(u(2)) + t2 * std::sin(u(2)));
    };
    auto chart = [parts, r](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(x * std::cos(r) + v * std::sin(r));
    };
    auto orient = [parts, r, osign](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(osign * (-x * std::sin(r) + v * std::cos(r)));
    };

    HypersurfacePatch patch;
    patch.space = sp;
    patch.chart = chart;
    patch.orient_ref = orient;
    return patch;
}

HypersurfacePatch tube_quadric_patch(int n, double r, bool inward) {
    if (n != 2 && n != 3)
        throw PreconditionError("quadric tube chart supports n = 2 or 3");
    const SpaceForm sp{+1, n};
    const double osign = inward ? -1.0 : 1.0;

    auto parts = [sp, n](const RVec& u, CVec& x, CVec& v) {
        CVec xr(n + 1);
        if (n == 2) {
            const Complex t(u(0), u(1));
            xr << 1.0 - t * t, Complex(0.0, 1.0) * (1.0 + t * t), 2.0 * t;
        } else {
            const Complex p(u(0), u(1)), q(u(2), u(3));
            const Complex ihalf(0.0, -0.5);  // 1/(2i)
            xr << (1.0 - p * q) / 2.0, ihalf * (1.0 + p * q), (p + q) / 2.0,
                (p - q) * ihalf;
        }
        x = detail::normalize_rep(sp, xr);
        const CVec nu = unit_g(sp, x.conjugate());
        v = nu * std::exp(Complex(0.0, u(u.size() - 1)));
    };
    auto chart = [parts, r](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(x * std::cos(r) + v * std::sin(r));
    };
    auto orient = [parts, r, osign](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(osign * (-x * std::sin(r) + v * std::cos(r)));
    };

    HypersurfacePatch patch;
    patch.space = sp;
    patch.chart = chart;
    patch.orient_ref = orient;
    return patch;
}

HypersurfacePatch tube_algebraic_patch(const AlgebraicHypersurface& f,
                                       const CVec& seed, double r, bool inward) {
    const int n1 = f.nvars;
    const SpaceForm sp{+1, n1 - 1};
    const CVec x0 = detail::normalize_rep(sp, seed);
    const double fres = std::abs(f.value(x0));
    if (fres > 1e-6 * std::max(1.0, f.value_scale(x0)))
        throw OffVarietyError(fres);
    const CVec g0 = f.gradient(x0);
    if (!(std::sqrt(g0.squaredNorm()) > 1e-8))
        throw SingularPointError("tube base seed is not a smooth point");

    const int j0 = argmax_abs(x0);
    int jstar = j0 == 0 ? 1 : 0;
    double bestg = std::abs(g0(jstar));
    for (int j = 0; j < n1; ++j) {
        if (j == j0) continue;
        if (std::abs(g0(j)) > bestg) { bestg = std::abs(g0(j)); jstar = j; }
    }
    std::vector<int> free;
    std::vector<double> scl;
    for (int j = 0; j < n1; ++j) {
        if (j == j0 || j == jstar) continue;
        free.push_back(j);
        scl.push_back(std::max(std::abs(x0(j)), 1e-3));
    }

    auto base = [f, x0, jstar, free, scl, sp](const RVec& s) {
        CVec z = x0;
        for (size_t i = 0; i < free.size(); ++i)
            z(free[i]) += scl[i] * Complex(s(2 * i), s(2 * i + 1));
        z(jstar) = newton_dep(f, z, jstar, x0(jstar));
        return detail::normalize_rep(sp, z);
    };
    auto parts = [base, f, sp](const RVec& u, CVec& x, CVec& v) {
        x = base(u.head(u.size() - 1));
        const CVec nu =
            unit_g(sp, project_h_raw(sp, f.gradient(x).conjugate(), x));
        v = nu * std::exp(Complex(0.0, u(u.size() - 1)));
    };
    const double osign = inward ? -1.0 : 1.0;
    auto chart = [parts, r](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(x * std::cos(r) + v * std::sin(r));
    };
    auto orient = [parts, r, osign](const RVec& u) {
        CVec x, v;
        parts(u, x, v);
        return CVec(osign * (-x * std::sin(r) + v * std::cos(r)));
    };

    HypersurfacePatch patch;
    patch.space = sp;
    patch.chart = chart;
    patch.orient_ref = orient;
    return patch;
}

// --- base-submanifold builders ----------------------------------------------

BaseSubmanifold point_base(const SpaceForm& space) {
    const int n1 = space.complex_dim + 1;
    std::vector<CVec> dirs;
    for (int j = 1; j < n1; ++j) {
        dirs.push_back(basis_vec(n1, j));
        dirs.push_back(basis_vec(n1, j, true));
    }
    BaseSubmanifold b;
    b.kind = BaseKind::holomorphic_chart;
    b.space = space;
    b.base_param_dim = 0;
    b.normal_param_dim = 2 * space.complex_dim - 1;
    b.chart = [n1](const RVec&) { return basis_vec(n1, 0); };
    b.normal_sampler = [dirs, n1](const RVec&, const RVec& ang) {
        const std::vector<double> w = sphere_angles(ang);
        CVec v = CVec::Zero(n1);
        for (size_t l = 0; l < dirs.size(); ++l) v += dirs[l] * w[l];
        return v;
    };
    return b;
}

BaseSubmanifold cpk_base(int n, int k) {
    const int n1 = n + 1;
    const SpaceForm sp{+1, n};
    std::vector<CVec> nd;
    for (int j = k + 1; j < n1; ++j) {
        nd.push_back(basis_vec(n1, j));
        nd.push_back(basis_vec(n1, j, true));
    }
    BaseSubmanifold b;
    b.kind = BaseKind::holomorphic_chart;
    b.space = sp;
    b.base_param_dim = 2 * k;
    b.normal_param_dim = 2 * (n - k) - 1;
    b.chart = [sp, n1, k](const RVec& bp) {
        CVec xr = basis_vec(n1, 0);
        for (int j = 0; j < k; ++j)
            xr(j + 1) = Complex(bp(2 * j), bp(2 * j + 1));
        return detail::normalize_rep(sp, xr);
    };
    b.normal_sampler = [nd, n1](const RVec&, const RVec& ang) {
        const std::vector<double> w = sphere_angles(ang);
        CVec v = CVec::Zero(n1);
        for (size_t l = 0; l < nd.size(); ++l) v += nd[l] * w[l];
        return v;
    };
    return b;
}

BaseSubmanifold rp2_base() {
    const SpaceForm sp{+1, 2};
    auto point = [sp](const RVec& bp) {
        CVec xr(3);
        xr << Complex(1.0, 0.0), Complex(bp(0), 0.0), Complex(bp(1), 0.0);
        return detail::normalize_rep(sp, xr);
    };
    BaseSubmanifold b;
    b.kind = BaseKind::real_form;
    b.space = sp;
    b.base_param_dim = 2;
    b.normal_param_dim = 1;
    b.chart = point;
    b.normal_sampler = [point, sp](const RVec& bp, const RVec& ang) {
        const CVec x = point(bp);
        const CVec t1 = unit_g(sp, project_h_raw(sp, basis_vec(3, 1), x));
        CVec t2 = project_h_raw(sp, basis_vec(3, 2), x);
        t2 = unit_g(sp, CVec(t2 - t1 * gmet(sp, t2, t1)));
        return CVec(Complex(0.0, 1.0) *
                    (t1 * std::cos(ang(0)) + t2 * std::sin(ang(0))));
    };
    return b;
}

BaseSubmanifold quadric_base(int n) {
    if (n != 2 && n != 3)
        throw PreconditionError("quadric base supports n = 2 or 3");
    const SpaceForm sp{+1, n};
    auto point = [sp, n](const RVec& bp) {
        CVec xr(n + 1);
        if (n == 2) {
            const Complex t(bp(0), bp(1));
            xr << 1.0 - t * t, Complex(0.0, 1.0) * (1.0 + t * t), 2.0 * t;
        } else {
            const Complex p(bp(0), bp(1)), q(bp(2), bp(3));
            const Complex ihalf(0.0, -0.5);
            xr << (1.0 - p * q) / 2.0, ihalf * (1.0 + p * q), (p + q) / 2.0,
                (p - q) * ihalf;
        }
        return detail::normalize_rep(sp, xr);
    };
    BaseSubmanifold b;
    b.kind = BaseKind::algebraic_hypersurface;
    b.space = sp;
    b.base_param_dim = 2 * (n - 1);
    b.normal_param_dim = 1;
    b.chart = point;
    b.normal_sampler = [point, sp](const RVec& bp, const RVec& ang) {
        const CVec x = point(bp);
        const CVec nu = unit_g(sp, x.conjugate());
        return CVec(nu * std::exp(Complex(0.0, ang(0))));
    };
    return b;
}

BaseSubmanifold algebraic_base(const AlgebraicHypersurface& f, const CVec& seed) {
    // reuse the patch construction's base chart by rebuilding its pieces
    const int n1 = f.nvars;
    const SpaceForm sp{+1, n1 - 1};
    const CVec x0 = detail::normalize_rep(sp, seed);
    const CVec g0 = f.gradient(x0);
    if (!(std::sqrt(g0.squaredNorm()) > 1e-8))
        throw SingularPointError("base seed is not a smooth point");
    const int j0 = argmax_abs(x0);
    int jstar = j0 == 0 ? 1 : 0;
    double bestg = std::abs(g0(jstar));
    for (int j = 0; j < n1; ++j) {
        if (j == j0) continue;
        if (std::abs(g0(j)) > bestg) { bestg = std::abs(g0(j)); jstar = j; }
    }
    std::vector<int> free;
    std::vector<double> scl;
    for (int j = 0; j < n1; ++j) {
        if (j == j0 || j == jstar) continue;
        free.push_back(j);
        scl.push_back(std::max(std::abs(x0(j)), 1e-3));
    }
    auto base = [f, x0, jstar, free, scl, sp](const RVec& s) {
        CVec z = x0;
        for (size_t i = 0; i < free.size(); ++i)
            z(free[i]) += scl[i] * Complex(s(2 * i), s(2 * i + 1));
        z(jstar) = newton_dep(f, z, jstar, x0(jstar));
        return detail::normalize_rep(sp, z);
    };
    BaseSubmanifold b;
    b.kind = BaseKind::algebraic_hypersurface;
    b.space = sp;
    b.base_param_dim = 2 * (n1 - 2);
    b.normal_param_dim = 1;
    b.chart = base;
    b.normal_sampler = [base, f, sp](const RVec& bp, const RVec& ang) {
        const CVec x = base(bp);
        const CVec nu =
            unit_g(sp, project_h_raw(sp, f.gradient(x).conjugate(), x));
        return CVec(nu * std::exp(Complex(0.0, ang(0))));
    };
    return b;
}

TubeSpectrumParams point_base_params(int n) {
    return {{}, kPi / 2.0, 2 * n - 1};
}

TubeSpectrumParams cpk_base_params(int n, int k) {
    return {{{kPi / 2.0, 2 * k}}, kPi / 2.0, 2 * (n - k) - 1};
}

TubeSpectrumParams rp2_base_params(int n) {
    return {{{kPi / 2.0, n - 1}}, kPi / 4.0, n};
}

TubeSpectrumParams quadric_base_params(int n) {
    return {{{kPi / 4.0, n - 1}, {3.0 * kPi / 4.0, n - 1}}, kPi / 2.0, 1};
}

}  // namespace hopftube
