#include "hopftube/hypersurface.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hopftube {

namespace {

double gmet(const SpaceForm& sp, const CVec& a, const CVec& b) {
    return hermitian_form(sp, a, b).real();
}

CVec project_h_raw(const SpaceForm& sp, const CVec& w, const CVec& x) {
    const Complex s = static_cast<double>(sp.curvature_sign) *
                      hermitian_form(sp, w, x);
    return w - x * s;
}

// rotate q so its pairing with z0 is real-positive
CVec align_rep(const SpaceForm& sp, const CVec& q, const CVec& z0) {
    const Complex p = hermitian_form(sp, q, z0);
    const double ap = std::abs(p);
    if (ap == 0.0) throw PreconditionError("cannot align orthogonal representatives");
    return q * (static_cast<double>(sp.curvature_sign) * std::conj(p) / ap);
}

void check_domain(const HypersurfacePatch& patch, const RVec& u, double h) {
    if (u.size() != patch.param_dim())
        throw DimensionError("parameter point has wrong dimension");
    if (patch.domain_box.empty()) return;
    if (static_cast<int>(patch.domain_box.size()) != patch.param_dim())
        throw DimensionError("domain box has wrong dimension");
    for (int i = 0; i < u.size(); ++i) {
        const auto& box = patch.domain_box[i];
        if (u(i) - 2 * h < box[0] || u(i) + 2 * h > box[1])
            throw PreconditionError("parameter too close to the domain boundary");
    }
}

RVec hopf_components(const SpaceForm& sp, const Frame& fr) {
    const int m = static_cast<int>(fr.tangent_basis.size());
    const CVec U = Complex(0.0, -1.0) * fr.normal;  // U = -J xi
    RVec u(m);
    for (int a = 0; a < m; ++a) u(a) = gmet(sp, U, fr.tangent_basis[a]);
    return u;
}

}  // namespace

Frame frame_at_step(const HypersurfacePatch& patch, const RVec& u, double h) {
    if (!(h > 0.0)) throw PreconditionError("fd step must be positive");
    check_domain(patch, u, h);
    const SpaceForm& sp = patch.space;
    const int m = patch.param_dim();
    const int n1 = sp.ambient_dim();

    CVec raw0 = detail::normalize_rep(sp, patch.chart(u));
    if (raw0.size() != n1) throw DimensionError("chart output has wrong dimension");
    int k = 0;
    double best = std::abs(raw0(0));
    for (int j = 1; j < n1; ++j) {
        const double aj = std::abs(raw0(j));
        if (aj > best) { best = aj; k = j; }
    }
    const Complex lam0 = std::conj(raw0(k) / std::abs(raw0(k)));
    const CVec z0 = raw0 * lam0;

    // central-difference tangents, phase-aligned to the center representative
    std::vector<CVec> taus;
    taus.reserve(m);
    for (int i = 0; i < m; ++i) {
        RVec up = u, um = u;
        up(i) += h;
        um(i) -= h;
        const CVec zp = align_rep(sp, detail::normalize_rep(sp, patch.chart(up)), z0);
        const CVec zm = align_rep(sp, detail::normalize_rep(sp, patch.chart(um)), z0);
        taus.push_back(project_h_raw(sp, (zp - zm) / (2.0 * h), z0));
    }

    Eigen::MatrixXd G(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) G(i, j) = gmet(sp, taus[i], taus[j]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G, Eigen::EigenvaluesOnly);
    const double sigma_min = std::sqrt(std::max(0.0, es.eigenvalues()(0)));
    const double sigma_max = std::sqrt(std::max(0.0, es.eigenvalues()(m - 1)));
    // Rank deficiency is judged relative to the largest tangent scale so that
    // legitimately anisotropic charts (tangent columns of very different
    // magnitudes) are accepted, while a genuinely constant parameter — whose
    // tangent column is pure finite-difference noise — still trips the guard.
    if (!(sigma_min > 1e-12) || !(sigma_min > 1e-9 * sigma_max))
        throw DegenerateChartError(sigma_min);

    Eigen::LLT<Eigen::MatrixXd> llt(G);
    if (llt.info() != Eigen::Success) throw DegenerateChartError(sigma_min);
    const Eigen::MatrixXd L = llt.matrixL();
    const Eigen::MatrixXd R =
        L.triangularView<Eigen::Lower>().solve(Eigen::MatrixXd::Identity(m, m));

    std::vector<CVec> ts;
    ts.reserve(m);
    for (int a = 0; a < m; ++a) {
        CVec t = CVec::Zero(n1);
        for (int i = 0; i <= a; ++i) t += taus[i] * R(a, i);
        ts.push_back(t);
    }

    // unit normal: best-conditioned coordinate direction, projected and
    // orthogonalized, sign fixed by the orientation reference
    CVec bestw;
    double bestn = -1.0;
    for (int j = 0; j < n1; ++j) {
        for (int im = 0; im < 2; ++im) {
            CVec cand = CVec::Zero(n1);
            cand(j) = im ? Complex(0.0, 1.0) : Complex(1.0, 0.0);
            CVec w = project_h_raw(sp, cand, z0);
            for (const CVec& t : ts) w -= t * gmet(sp, w, t);
            const double nn = gmet(sp, w, w);
            if (nn > bestn) { bestn = nn; bestw = w; }
        }
    }
    CVec xi = bestw / std::sqrt(bestn);
    const CVec orient = patch.orient_ref(u) * lam0;
    if (gmet(sp, xi, orient) < 0.0) xi = -xi;

    Frame fr;
    fr.base = make_point(sp, z0);
    fr.tangent_basis = std::move(ts);
    fr.normal = std::move(xi);
    fr.chol_inv = R;
    fr.gauge_phase = lam0;
    return fr;
}

Frame frame_at(const HypersurfacePatch& patch, const RVec& u) {
    return frame_at_step(patch, u, patch.fd_step);
}

ShapeResult shape_operator_plain(const HypersurfacePatch& patch, const RVec& u,
                                 double h) {
    const SpaceForm& sp = patch.space;
    const int m = patch.param_dim();
    Frame fr = frame_at_step(patch, u, h);
    const CVec& z0 = fr.base.coords;

    Eigen::MatrixXd M(m, m);
    for (int i = 0; i < m; ++i) {
        CVec xis[2];
        for (int s = 0; s < 2; ++s) {
            RVec un = u;
            un(i) += (s == 0 ? h : -h);
            const Frame frn = frame_at_step(patch, un, h);
            // transport the neighbor normal to the center representative
            const Complex lam = hermitian_form(sp, frn.base.coords, z0);
            CVec xit = frn.normal * (static_cast<double>(sp.curvature_sign) *
                                     std::conj(lam) / std::abs(lam));
            if (gmet(sp, xit, fr.normal) < 0.0) xit = -xit;
            xis[s] = std::move(xit);
        }
        const CVec dxi = project_h_raw(sp, (xis[0] - xis[1]) / (2.0 * h), z0);
        for (int b = 0; b < m; ++b)
            M(i, b) = -gmet(sp, dxi, fr.tangent_basis[b]);
    }

    const Eigen::MatrixXd A = fr.chol_inv * M;
    const double asym = (A - A.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-4 * std::max(1.0, A.cwiseAbs().maxCoeff()))
        throw NoisyDerivativeError(asym);

    ShapeResult res;
    res.matrix = 0.5 * (A + A.transpose());
    res.asymmetry = asym;
    res.frame = std::move(fr);
    return res;
}

ShapeResult shape_operator(const HypersurfacePatch& patch, const RVec& u) {
    if (!patch.richardson) return shape_operator_plain(patch, u, patch.fd_step);
    ShapeResult r1 = shape_operator_plain(patch, u, patch.fd_step);
    ShapeResult r2 = shape_operator_plain(patch, u, patch.fd_step / 2.0);
    ShapeResult res;
    res.matrix = (4.0 * r2.matrix - r1.matrix) / 3.0;
    res.asymmetry = std::max(r1.asymmetry, r2.asymmetry);
    res.frame = std::move(r1.frame);
    return res;
}

ShapeSpectrum spectrum(const HypersurfacePatch& patch, const RVec& u) {
    const SpaceForm& sp = patch.space;
    Eigen::MatrixXd A;
    RVec uvec;
    if (patch.richardson) {
        ShapeResult r1 = shape_operator_plain(patch, u, patch.fd_step);
        ShapeResult r2 = shape_operator_plain(patch, u, patch.fd_step / 2.0);
        A = (4.0 * r2.matrix - r1.matrix) / 3.0;
        const RVec u1 = hopf_components(sp, r1.frame);
        const RVec u2 = hopf_components(sp, r2.frame);
        uvec = (4.0 * u2 - u1) / 3.0;
    } else {
        ShapeResult r = shape_operator_plain(patch, u, patch.fd_step);
        A = r.matrix;
        uvec = hopf_components(sp, r.frame);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
    if (es.info() != Eigen::Success)
        throw Error("eigen-decomposition failed");

    ShapeSpectrum spec;
    spec.eigenvalues = es.eigenvalues();
    spec.eigenvectors = es.eigenvectors();
    // canonical eigenvector signs: largest-magnitude entry positive
    for (int c = 0; c < spec.eigenvectors.cols(); ++c) {
        int idx = 0;
        double best = std::abs(spec.eigenvectors(0, c));
        for (int rr = 1; rr < spec.eigenvectors.rows(); ++rr) {
            const double a = std::abs(spec.eigenvectors(rr, c));
            if (a > best) { best = a; idx = rr; }
        }
        if (spec.eigenvectors(idx, c) < 0.0) spec.eigenvectors.col(c) *= -1.0;
    }
    spec.hopf_direction = uvec;
    const RVec Au = A * uvec;
    spec.mu = uvec.dot(Au);
    spec.hopf_defect = (Au - spec.mu * uvec).norm();
    spec.mean_curvature = A.trace() / static_cast<double>(A.rows());
    return spec;
}

StructureTensors structure_tensors(const Frame& frame) {
    const SpaceForm& sp = frame.base.space;
    const int m = static_cast<int>(frame.tangent_basis.size());
    const CVec U = Complex(0.0, -1.0) * frame.normal;
    StructureTensors st;
    st.U = RVec(m);
    st.phi = Eigen::MatrixXd(m, m);
    for (int a = 0; a < m; ++a) st.U(a) = gmet(sp, U, frame.tangent_basis[a]);
    st.f_form = st.U;
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            const CVec Jtb = Complex(0.0, 1.0) * frame.tangent_basis[b];
            st.phi(a, b) = gmet(sp, frame.tangent_basis[a], Jtb);
        }
    }
    return st;
}

HopfReport hopf_report(const HypersurfacePatch& patch,
                       const std::vector<RVec>& sample_grid, double tol) {
    HopfReport rep;
    std::vector<double> mus, defects;
    for (int i = 0; i < static_cast<int>(sample_grid.size()); ++i) {
        try {
            const ShapeSpectrum s = spectrum(patch, sample_grid[i]);
            mus.push_back(s.mu);
            defects.push_back(s.hopf_defect);
        } catch (const Error&) {
            rep.failed_points.push_back(i);
        }
    }
    rep.points_evaluated = static_cast<int>(mus.size());
    if (!mus.empty()) {
        double sum = 0.0;
        for (double v : mus) sum += v;
        rep.mu_mean = sum / mus.size();
        double var = 0.0;
        for (double v : mus) {
            var += (v - rep.mu_mean) * (v - rep.mu_mean);
            rep.mu_max_deviation =
                std::max(rep.mu_max_deviation, std::abs(v - rep.mu_mean));
        }
        rep.mu_stddev = std::sqrt(var / mus.size());
        rep.max_defect = *std::max_element(defects.begin(), defects.end());
        rep.is_hopf = rep.max_defect <= tol;
    }
    return rep;
}

ShapeIdentityResiduals shape_identity_residuals(const HypersurfacePatch& patch,
                                                const RVec& u, double hopf_tol) {
    const ShapeSpectrum spec = spectrum(patch, u);
    if (spec.hopf_defect > hopf_tol)
        throw PreconditionError("shape identity requires a Hopf point");

    // matrix identity at a single plain step so A, phi, and mu share one frame
    HypersurfacePatch plain = patch;
    plain.richardson = false;
    plain.fd_step = std::min(patch.fd_step, 1e-4);
    const ShapeResult r = shape_operator_plain(plain, u, plain.fd_step);
    const StructureTensors st = structure_tensors(r.frame);
    const Eigen::MatrixXd& A = r.matrix;
    const Eigen::MatrixXd& phi = st.phi;
    const RVec uvec = st.U;
    const double mu = uvec.dot(A * uvec);
    const double c = static_cast<double>(patch.space.curvature_sign);

    const Eigen::MatrixXd res = 2.0 * A * phi * A - mu * (phi * A + A * phi) -
                                2.0 * c * phi;
    ShapeIdentityResiduals out;
    out.identity_residual =
        res.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
            .singularValues()(0);

    out.pairing_residual = 0.0;
    out.pairing_applicable = false;
    if (patch.space.curvature_sign > 0) {
        // Hopf eigendirection = largest overlap with U
        const int m = static_cast<int>(spec.eigenvalues.size());
        int hopf_idx = 0;
        double best = -1.0;
        for (int i = 0; i < m; ++i) {
            const double ov = std::abs(spec.eigenvectors.col(i).dot(spec.hopf_direction));
            if (ov > best) { best = ov; hopf_idx = i; }
        }
        const double muv = spec.mu;
        bool guard_hit = false;
        double worst = 0.0;
        int used = 0;
        for (int i = 0; i < m; ++i) {
            if (i == hopf_idx) continue;
            const double alpha = spec.eigenvalues(i);
            if (std::abs(2.0 * alpha - muv) < 1e-8) { guard_hit = true; continue; }
            const double q = (muv * alpha + 2.0) / (2.0 * alpha - muv);
            double dist = std::abs(q - spec.eigenvalues(0));
            for (int j = 1; j < m; ++j)
                dist = std::min(dist, std::abs(q - spec.eigenvalues(j)));
            worst = std::max(worst, dist);
            ++used;
        }
        if (!guard_hit && used > 0) {
            out.pairing_applicable = true;
            out.pairing_residual = worst;
        }
    }
    return out;
}

CurvatureBoundCheck mean_curvature_bound_check(const ShapeSpectrum& spec, int n,
                                               int curvature_sign) {
    CurvatureBoundCheck out;
    out.lhs = spec.mu;
    if (curvature_sign < 0) {
        out.rhs = 0.0;
        out.satisfied = false;
        out.applicable = false;
        return out;
    }
    const double x =
        ((2.0 * n - 1.0) * spec.mean_curvature - spec.mu) / (2.0 * n - 2.0);
    const double theta = std::atan2(1.0, x);  // arccot into (0, pi)
    const double s = std::sin(2.0 * theta);
    if (std::abs(s) < 1e-9) {
        out.rhs = 0.0;
        out.satisfied = false;
        out.applicable = false;
        return out;
    }
    out.rhs = 2.0 * std::cos(2.0 * theta) / s;
    out.applicable = true;
    out.satisfied = out.lhs >= out.rhs - 1e-9;
    return out;
}

std::vector<RVec> grid_linspace(const RVec& lo, const RVec& hi,
                                const std::vector<int>& counts) {
    const int d = static_cast<int>(counts.size());
    if (lo.size() != d || hi.size() != d)
        throw DimensionError("grid bounds/counts mismatch");
    long total = 1;
    for (int c : counts) {
        if (c < 1) throw PreconditionError("grid count must be >= 1");
        total *= c;
    }
    std::vector<RVec> out;
    out.reserve(total);
    std::vector<int> idx(d, 0);
    for (long p = 0; p < total; ++p) {
        RVec u(d);
        for (int i = 0; i < d; ++i)
            u(i) = counts[i] == 1
                       ? lo(i)
                       : lo(i) + idx[i] * (hi(i) - lo(i)) / (counts[i] - 1);
        out.push_back(u);
        for (int i = d - 1; i >= 0; --i) {  // row-major: last axis fastest
            if (++idx[i] < counts[i]) break;
            idx[i] = 0;
        }
    }
    return out;
}

std::vector<RVec> sample_box(const RVec& lo, const RVec& hi, int count,
                             unsigned long long seed) {
    if (lo.size() != hi.size()) throw DimensionError("sample bounds mismatch");
    std::mt19937_64 rng(seed);
    std::vector<RVec> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        RVec u(lo.size());
        for (int i = 0; i < lo.size(); ++i) {
            std::uniform_real_distribution<double> dist(lo(i), hi(i));
            u(i) = dist(rng);
        }
        out.push_back(u);
    }
    return out;
}

}  // namespace hopftube
