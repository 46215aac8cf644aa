#!/usr/bin/env python3
"""High-precision cross-check for the tube laboratory.

Recomputes, at 50+ decimal digits with an independent implementation, every
frozen constant used by the C++ unit and acceptance tests:

  * finite-difference shape spectra of the canned hypersurfaces
    (geodesic spheres, tubes over linear/real/quadric bases),
  * the closed-form spectra they must match,
  * the fiber multiplicity convention for tube spectra,
  * base principal angles of algebraic varieties via the analytic
    (Hessian/Takagi) route,
  * the approach-curve calibration for the curvature blow-up probe,
    including a float64 rehearsal of the double-precision pipeline,
  * the Hopf defect magnitude of the warped (non-Hopf) control chart.

Run:  python3 tools/highprec_check.py [section ...]
Sections: spheres tubes takagi probe warp all (default: all)
"""

import sys
from mpmath import mp, mpf, mpc, matrix, sqrt, cos, sin, cosh, sinh, tan, \
    atan, acos, pi, exp, mpmathify, fabs, re as mpre, im as mpim, conj, \
    eigsy, svd_c

mp.dps = 50
H_FD = mpf('1e-12')          # finite-difference step for the high-precision runs


# ---------------------------------------------------------------------------
# ambient model: C^{n+1} with the definite (c=+1) or (-,+,...,+) (c=-1) form
# ---------------------------------------------------------------------------

def herm(a, b, c):
    s = mpc(0)
    for j in range(len(a)):
        w = a[j] * conj(b[j])
        if c < 0 and j == 0:
            s -= w
        else:
            s += w
    return s


def gmet(a, b, c):
    return mpre(herm(a, b, c))


def vscale(a, s):
    return [x * s for x in a]


def vadd(a, b):
    return [x + y for x, y in zip(a, b)]


def vsub(a, b):
    return [x - y for x, y in zip(a, b)]


def normalize_point(z, c):
    s = herm(z, z, c)
    return vscale(z, 1 / sqrt(c * s))


def gauge(z):
    k = max(range(len(z)), key=lambda j: abs(z[j]))
    ph = z[k] / abs(z[k])
    return vscale(z, conj(ph))


def project_h(w, x, c):
    return vsub(w, vscale(x, c * herm(w, x, c)))


def align(q, z0, c):
    p = herm(q, z0, c)
    lam = c * conj(p) / abs(p)
    return vscale(q, lam)


def unit_g(v, c):
    return vscale(v, 1 / sqrt(gmet(v, v, c)))


def arccot(x):
    return pi / 2 - atan(x)


# ---------------------------------------------------------------------------
# finite-difference frame / shape pipeline (mirrors the production design)
# ---------------------------------------------------------------------------

def raw_tangents(chart, u0, z0, c, h):
    m = len(u0)
    taus = []
    for i in range(m):
        up = list(u0); up[i] += h
        um = list(u0); um[i] -= h
        zp = align(normalize_point(chart(up), c), z0, c)
        zm = align(normalize_point(chart(um), c), z0, c)
        taus.append(project_h(vscale(vsub(zp, zm), 1 / (2 * h)), z0, c))
    return taus


def orthonormal_frame(taus, c):
    m = len(taus)
    G = matrix(m)
    for i in range(m):
        for j in range(m):
            G[i, j] = gmet(taus[i], taus[j], c)
    L = matrix(m)
    for i in range(m):
        for j in range(i + 1):
            s = G[i, j] - sum(L[i, k] * L[j, k] for k in range(j))
            L[i, j] = sqrt(s) if i == j else s / L[j, j]
    R = matrix(m)                       # R = L^{-1}
    for i in range(m):
        R[i, i] = 1 / L[i, i]
        for j in range(i - 1, -1, -1):
            R[i, j] = -sum(L[i, k] * R[k, j] for k in range(j, i)) / L[i, i]
    ts = []
    for a in range(m):
        t = [mpc(0)] * len(taus[0])
        for i in range(a + 1):
            t = vadd(t, vscale(taus[i], R[a, i]))
        ts.append(t)
    return ts, R


def normal_vector(z0, ts, c, orient_vec):
    n1 = len(z0)
    best, bestn = None, mpf(-1)
    for j in range(n1):
        for ii in (1, 1j):
            cand = [mpc(0)] * n1
            cand[j] = mpc(ii)
            w = project_h(cand, z0, c)
            for t in ts:
                w = vsub(w, vscale(t, gmet(w, t, c)))
            nn = gmet(w, w, c)
            if nn > bestn:
                best, bestn = w, nn
    xi = unit_g(best, c)
    if gmet(xi, orient_vec, c) < 0:
        xi = vscale(xi, -1)
    return xi


def frame_at(chart, u0, c, orient_ref, h):
    raw0 = normalize_point(chart(u0), c)
    k = max(range(len(raw0)), key=lambda j: abs(raw0[j]))
    lam0 = conj(raw0[k] / abs(raw0[k]))
    z0 = vscale(raw0, lam0)
    taus = raw_tangents(chart, u0, z0, c, h)
    ts, R = orthonormal_frame(taus, c)
    xi = normal_vector(z0, ts, c, vscale(orient_ref(u0), lam0))
    return z0, taus, ts, R, xi


def shape_operator(chart, u0, c, orient_ref, h):
    z0, taus, ts, R, xi0 = frame_at(chart, u0, c, orient_ref, h)
    m = len(u0)
    M = matrix(m)
    for i in range(m):
        xis = []
        for sgn in (1, -1):
            u = list(u0); u[i] += sgn * h
            zi, _, tsi, _, xii = frame_at(chart, u, c, orient_ref, h)
            lam = herm(zi, z0, c)
            lam = c * conj(lam) / abs(lam)
            xit = vscale(xii, lam)
            if gmet(xit, xi0, c) < 0:
                xit = vscale(xit, -1)
            xis.append(xit)
        dxi = project_h(vscale(vsub(xis[0], xis[1]), 1 / (2 * h)), z0, c)
        for b in range(m):
            M[i, b] = -gmet(dxi, ts[b], c)
    A = R * M
    asym = max(abs(A[i, j] - A[j, i]) for i in range(m) for j in range(m))
    A = (A + A.T) / 2
    return z0, ts, xi0, A, asym


def spectrum(chart, u0, c, orient_ref, h=H_FD):
    z0, ts, xi, A, asym = shape_operator(chart, u0, c, orient_ref, h)
    m = A.rows
    U = vscale(xi, -1j)
    u = matrix([gmet(U, t, c) for t in ts])
    Au = A * u
    mu = sum(u[a] * Au[a] for a in range(m))
    defect = sqrt(sum((Au[a] - mu * u[a]) ** 2 for a in range(m)))
    E, _ = eigsy(A)
    eigs = sorted(E[i] for i in range(m))
    return {'eigs': eigs, 'mu': mu, 'defect': defect, 'asym': asym,
            'A': A, 'u': u, 'ts': ts, 'xi': xi, 'z0': z0}


# ---------------------------------------------------------------------------
# charts for the canned examples (same constructions as the library)
# ---------------------------------------------------------------------------

def basis_vec(n1, j, im=False):
    v = [mpc(0)] * n1
    v[j] = mpc(0, 1) if im else mpc(1)
    return v


def sphere_angles(phis):
    """spherical-coordinate direction on S^{d}, d = len(phis)"""
    out = []
    prod = mpf(1)
    for p in phis:
        out.append(prod * cos(p))
        prod *= sin(p)
    out.append(prod)
    return out


def sphere_chart(n, r, c, warp=None):
    """geodesic sphere of radius r about e0; params = 2n-1 spherical angles"""
    n1 = n + 1
    q0 = basis_vec(n1, 0)
    dirs = []
    for j in range(1, n1):
        dirs.append(basis_vec(n1, j))
        dirs.append(basis_vec(n1, j, True))

    def chart(u):
        w = sphere_angles(u)
        v = [mpc(0)] * n1
        for l in range(2 * n):
            v = vadd(v, vscale(dirs[l], w[l]))
        rr = r if warp is None else r + warp(u)
        if c > 0:
            return vadd(vscale(q0, cos(rr)), vscale(v, sin(rr)))
        return vadd(vscale(q0, cosh(rr)), vscale(v, sinh(rr)))

    def inward(u):
        w = sphere_angles(u)
        v = [mpc(0)] * n1
        for l in range(2 * n):
            v = vadd(v, vscale(dirs[l], w[l]))
        rr = r if warp is None else r + warp(u)
        if c > 0:
            return vsub(vscale(q0, sin(rr)), vscale(v, cos(rr)))
        return vscale(vadd(vscale(q0, sinh(rr)), vscale(v, cosh(rr))), -1)

    return chart, inward


def tube_cpk_chart(n, k, r):
    """tube over the linear subvariety spanned by e0..ek in CP^n;
    params: 2k base + 2(n-k)-1 fiber spherical angles"""
    n1 = n + 1
    nd = []
    for j in range(k + 1, n1):
        nd.append(basis_vec(n1, j))
        nd.append(basis_vec(n1, j, True))

    def parts(u):
        b, ph = u[:2 * k], u[2 * k:]
        x = basis_vec(n1, 0)
        for j in range(k):
            x[j + 1] = mpc(b[2 * j], b[2 * j + 1])
        x = normalize_point(x, 1)
        w = sphere_angles(ph)
        v = [mpc(0)] * n1
        for l in range(len(nd)):
            v = vadd(v, vscale(nd[l], w[l]))
        return x, v

    def chart(u):
        x, v = parts(u)
        return vadd(vscale(x, cos(r)), vscale(v, sin(r)))

    def outward(u):
        x, v = parts(u)
        return vadd(vscale(x, -sin(r)), vscale(v, cos(r)))

    return chart, outward


def tube_rp2_chart(r):
    """tube over the real form in CP^2; params (b1, b2, phi)"""
    def parts(u):
        b1, b2, phi = u
        x = [mpc(1), mpc(b1), mpc(b2)]
        x = normalize_point(x, 1)
        t1 = project_h(basis_vec(3, 1), x, 1)
        t2 = project_h(basis_vec(3, 2), x, 1)
        t1 = unit_g(t1, 1)
        t2 = vsub(t2, vscale(t1, gmet(t2, t1, 1)))
        t2 = unit_g(t2, 1)
        v = vscale(vadd(vscale(t1, cos(phi)), vscale(t2, sin(phi))), mpc(0, 1))
        return x, v

    def chart(u):
        x, v = parts(u)
        return vadd(vscale(x, cos(r)), vscale(v, sin(r)))

    def outward(u):
        x, v = parts(u)
        return vadd(vscale(x, -sin(r)), vscale(v, cos(r)))

    return chart, outward


def tube_quadric_chart(n, r):
    """tube over {sum z_j^2 = 0} via a rational base chart; fiber angle last"""
    def base(u):
        if n == 2:
            t = mpc(u[0], u[1])
            x = [1 - t * t, mpc(0, 1) * (1 + t * t), 2 * t]
        else:
            p = mpc(u[0], u[1]); q = mpc(u[2], u[3])
            x = [(1 - p * q) / 2, (1 + p * q) / (2 * mpc(0, 1)),
                 (p + q) / 2, (p - q) / (2 * mpc(0, 1))]
        return normalize_point(x, 1)

    def parts(u):
        x = base(u[:-1])
        nu = unit_g([conj(z) for z in x], 1)      # grad of sum z^2 is 2z
        v = vscale(nu, exp(mpc(0, 1) * u[-1]))
        return x, v

    def chart(u):
        x, v = parts(u)
        return vadd(vscale(x, cos(r)), vscale(v, sin(r)))

    def outward(u):
        x, v = parts(u)
        return vadd(vscale(x, -sin(r)), vscale(v, cos(r)))

    return chart, outward


# ---------------------------------------------------------------------------
# homogeneous polynomials, Newton implicit chart, analytic base angles
# ---------------------------------------------------------------------------

class Poly:
    def __init__(self, monos):                    # [(coef, (e0..en))]
        self.monos = monos
        self.nvars = len(monos[0][1])

    def val(self, z):
        s = mpc(0)
        for cf, ex in self.monos:
            t = mpc(cf)
            for j, e in enumerate(ex):
                if e:
                    t *= z[j] ** e
            s += t
        return s

    def grad(self, z):
        g = []
        for j in range(self.nvars):
            s = mpc(0)
            for cf, ex in self.monos:
                if ex[j] == 0:
                    continue
                t = mpc(cf) * ex[j]
                for l, e in enumerate(ex):
                    ee = e - 1 if l == j else e
                    if ee:
                        t *= z[l] ** ee
                s += t
            g.append(s)
        return g

    def hess(self, z):
        n1 = self.nvars
        Hm = [[mpc(0)] * n1 for _ in range(n1)]
        for j in range(n1):
            for k in range(j, n1):
                s = mpc(0)
                for cf, ex in self.monos:
                    cjk = ex[j] * (ex[k] - (1 if j == k else 0))
                    if cjk == 0:
                        continue
                    t = mpc(cf) * cjk
                    for l, e in enumerate(ex):
                        ee = e - (1 if l == j else 0) - (1 if l == k else 0)
                        if ee:
                            t *= z[l] ** ee
                        elif ee < 0:
                            t = mpc(0)
                    s += t
                Hm[j][k] = Hm[k][j] = s
        return Hm


SEXTIC = Poly([(1, (6, 0, 0, 2)), (1, (0, 3, 5, 0))])
QUADRIC3 = Poly([(1, (2, 0, 0, 0)), (1, (0, 2, 0, 0)),
                 (1, (0, 0, 2, 0)), (1, (0, 0, 0, 2))])


def newton_dep(poly, z, jstar, seed):
    t = mpc(seed)
    for _ in range(80):
        zz = list(z); zz[jstar] = t
        fv = poly.val(zz)
        gd = poly.grad(zz)[jstar]
        step = fv / gd
        t -= step
        if abs(step) < mpf('1e-45') * max(abs(t), mpf('1e-30')):
            break
    return t


def algebraic_tube_chart(poly, x0raw, r):
    """Newton implicit chart around a (normalized) variety point + tube circle.
    params: 2(n-1) free-coordinate offsets + angle t.  Offsets are relative:
    each free coordinate moves on the scale of its own magnitude (floored),
    which keeps the chart well-conditioned near coordinate degenerations."""
    x0 = normalize_point(x0raw, 1)
    n1 = poly.nvars
    j0 = max(range(n1), key=lambda j: abs(x0[j]))
    g0 = poly.grad(x0)
    jstar = max((j for j in range(n1) if j != j0), key=lambda j: abs(g0[j]))
    free = [j for j in range(n1) if j not in (j0, jstar)]
    scl = [max(abs(x0[j]), mpf('1e-3')) for j in free]

    def base(s):
        z = list(x0)
        for i, j in enumerate(free):
            z[j] = x0[j] + scl[i] * mpc(s[2 * i], s[2 * i + 1])
        z[jstar] = newton_dep(poly, z, jstar, x0[jstar])
        return normalize_point(z, 1)

    def parts(u):
        x = base(u[:-1])
        g = poly.grad(x)
        nu = unit_g(project_h([conj(w) for w in g], x, 1), 1)
        v = vscale(nu, exp(mpc(0, 1) * u[-1]))
        return x, v

    def chart(u):
        x, v = parts(u)
        return vadd(vscale(x, cos(r)), vscale(v, sin(r)))

    def outward(u):
        x, v = parts(u)
        return vadd(vscale(x, -sin(r)), vscale(v, cos(r)))

    return chart, outward


def base_angles(poly, xraw):
    """principal angles of the variety at x from the restricted Hessian"""
    x = normalize_point(xraw, 1)
    n1 = poly.nvars
    g = poly.grad(x)
    gn = sqrt(sum(abs(w) ** 2 for w in g))
    nu = unit_g([conj(w) for w in g], 1)
    basis = []
    for j in range(n1):
        v = basis_vec(n1, j)
        v = vsub(v, vscale(x, herm(v, x, 1)))
        v = vsub(v, vscale(nu, herm(v, nu, 1)))
        for b in basis:
            v = vsub(v, vscale(b, herm(v, b, 1)))
        nn = sqrt(mpre(herm(v, v, 1)))
        if nn > mpf('1e-8'):
            basis.append(vscale(v, 1 / nn))
    assert len(basis) == n1 - 2, f"tangent basis dim {len(basis)}"
    Hm = poly.hess(x)
    m = len(basis)
    B = matrix(m, m)
    for a in range(m):
        for b in range(m):
            s = mpc(0)
            for j in range(n1):
                for k in range(n1):
                    s += Hm[j][k] * basis[a][j] * basis[b][k]
            B[a, b] = s / gn
    _, S, _ = svd_c(B)
    svals = sorted([S[i] for i in range(m)], reverse=True)
    thetas = []
    for s in svals:
        thetas.append(arccot(s))
        thetas.append(pi - arccot(s))
    return svals, sorted(thetas)


def predicted_tube_spectrum(thetas, Theta, kcount, r):
    """closed-form tube spectrum w.r.t. the outward normal"""
    eigs = [(-1 / tan(r), kcount - 1)] if kcount > 1 else []
    for th, mult in thetas:
        eigs.append((1 / tan(th - r), mult))
    eigs.append((2 / tan(2 * (Theta - r)), 1))
    return sorted(eigs)


def show_spec(tag, res, extra=''):
    ev = ', '.join(mp.nstr(e, 17) for e in res['eigs'])
    print(f"{tag}\n  eigs   [{ev}]\n  mu     {mp.nstr(res['mu'], 17)}"
          f"\n  defect {mp.nstr(res['defect'], 3)}   asym {mp.nstr(res['asym'], 3)} {extra}")


# ---------------------------------------------------------------------------
# sections
# ---------------------------------------------------------------------------

def section_spheres():
    print("=" * 72)
    print("geodesic spheres (inward normal)")
    for (c, n, r, label) in [(1, 2, pi / 3, 'cp2 r=pi/3'),
                             (1, 2, pi / 4, 'cp2 r=pi/4'),
                             (1, 2, pi / 6, 'cp2 r=pi/6'),
                             (-1, 2, mpf('0.7'), 'ch2 r=0.7')]:
        chart, inward = sphere_chart(n, r, c)
        u0 = [mpf('0.7'), mpf('0.8'), mpf('0.9')]
        res = spectrum(chart, u0, c, inward)
        if c > 0:
            closed = sorted([2 / tan(2 * r)] + [1 / tan(r)] * (2 * n - 2))
        else:
            closed = sorted([2 / tanh_(2 * r)] + [1 / tanh_(r)] * (2 * n - 2))
        show_spec(f"sphere {label}", res)
        err = max(abs(a - b) for a, b in zip(res['eigs'], closed))
        print(f"  closed-form max dev {mp.nstr(err, 3)}")
        mus = []
        for du in ([0, 0, 0], [0.21, -0.13, 0.17], [-0.2, 0.11, -0.23]):
            uu = [u0[i] + mpf(str(du[i])) for i in range(3)]
            mus.append(spectrum(chart, uu, c, inward)['mu'])
        print(f"  mu spread over 3 pts {mp.nstr(max(mus) - min(mus), 3)}")


def tanh_(x):
    return sinh(x) / cosh(x)


def section_tubes():
    print("=" * 72)
    print("tubes (outward normal), finite-difference vs closed form")
    runs = []

    chart, ow = tube_cpk_chart(2, 1, pi / 6)
    runs.append(("tube cp1 in cp2  r=pi/6", chart, ow,
                 [mpf('0.15'), mpf('-0.1'), mpf('0.9')],
                 predicted_tube_spectrum([(pi / 2, 2)], pi / 2, 1, pi / 6)))

    chart, ow = tube_cpk_chart(3, 1, pi / 5)
    runs.append(("tube cp1 in cp3  r=pi/5", chart, ow,
                 [mpf('0.15'), mpf('-0.1'), mpf('0.7'), mpf('0.9'), mpf('1.0')],
                 predicted_tube_spectrum([(pi / 2, 2)], pi / 2, 3, pi / 5)))

    chart, ow = tube_rp2_chart(pi / 8)
    runs.append(("tube rp2 in cp2  r=pi/8", chart, ow,
                 [mpf('0.2'), mpf('-0.15'), mpf('0.7')],
                 predicted_tube_spectrum([(pi / 2, 1)], pi / 4, 2, pi / 8)))

    chart, ow = tube_quadric_chart(2, pi / 8)
    runs.append(("tube quadric cp2 r=pi/8", chart, ow,
                 [mpf('0.2'), mpf('0.1'), mpf('0.8')],
                 predicted_tube_spectrum([(pi / 4, 1), (3 * pi / 4, 1)], pi / 2, 1, pi / 8)))

    chart, ow = tube_quadric_chart(3, pi / 8)
    runs.append(("tube quadric cp3 r=pi/8", chart, ow,
                 [mpf('0.2'), mpf('0.1'), mpf('-0.15'), mpf('0.25'), mpf('0.8')],
                 predicted_tube_spectrum([(pi / 4, 2), (3 * pi / 4, 2)], pi / 2, 1, pi / 8)))

    for label, chart, ow, u0, pred in runs:
        res = spectrum(chart, u0, 1, ow)
        flat = sorted(sum([[e] * m for e, m in pred], []))
        err = max(abs(a - b) for a, b in zip(res['eigs'], flat))
        show_spec(label, res)
        pp = ', '.join(f"{mp.nstr(e, 17)}x{m}" for e, m in pred)
        print(f"  predicted [{pp}]   max dev {mp.nstr(err, 3)}")

    print("\nfiber multiplicity convention: the -cot(r) eigenvalue count above")
    print("fixes k-1 = (unit normal fiber dimension) for each base kind.")

    chart, ow = tube_cpk_chart(2, 1, pi / 6)
    inw = lambda u: vscale(ow(u), -1)
    res = spectrum(chart, [mpf('0.15'), mpf('-0.1'), mpf('0.9')], 1, inw)
    show_spec("tube cp1 in cp2, inward normal (focal-radius source)", res)
    mu = res['mu']
    r_h = arccot(mu / 2) / 2
    lam = res['eigs'][0]
    r_e = arccot(lam)
    print(f"  hopf focal radius  {mp.nstr(r_h, 17)}  (pi/6 = {mp.nstr(pi/6, 17)})")
    print(f"  eigen focal radius {mp.nstr(r_e, 17)}  (2pi/3 = {mp.nstr(2*pi/3, 17)})")


def section_takagi():
    print("=" * 72)
    print("analytic base angles (restricted Hessian / Takagi route)")
    x = normalize_point([1 - mpc(0.2, 0.1) ** 2 * 1, mpc(0, 1) * (1 + mpc(0.2, 0.1) ** 2),
                         2 * mpc(0.2, 0.1)], 1)
    q2 = Poly([(1, (2, 0, 0)), (1, (0, 2, 0)), (1, (0, 0, 2))])
    sv, th = base_angles(q2, x)
    print(f"quadric cp2: takagi values {[mp.nstr(s, 17) for s in sv]}")
    print(f"             angles        {[mp.nstr(t, 17) for t in th]}")

    p = mpc(0.2, 0.1); q = mpc(-0.15, 0.25)
    x3 = [(1 - p * q) / 2, (1 + p * q) / (2 * mpc(0, 1)), (p + q) / 2,
          (p - q) / (2 * mpc(0, 1))]
    sv, th = base_angles(QUADRIC3, x3)
    print(f"quadric cp3: takagi values {[mp.nstr(s, 17) for s in sv]}")

    print("\ncross-check: high-precision FD tube spectrum over the quadric cp3")
    print("at the same base point equals cot(theta_j - r) / hopf closed form")
    chart, ow = algebraic_tube_chart(QUADRIC3, x3, mpf('0.5'))
    res = spectrum(chart, [mpf(0)] * 4 + [mpf('0.4')], 1, ow)
    pred = predicted_tube_spectrum([(th[0], 2), (th[-1], 2)], pi / 2, 1, mpf('0.5'))
    flat = sorted(sum([[e] * m for e, m in pred], []))
    err = max(abs(a - b) for a, b in zip(res['eigs'], flat))
    show_spec("tube quadric cp3 r=0.5 (newton chart)", res)
    print(f"  predicted-vs-fd max dev {mp.nstr(err, 3)}")


def probe_point(af, sigma):
    m = 1000 * sigma                   # m = 1 at the innermost scale
    a = af * m ** (mpf(4) / 3)
    b = mpf('0.4') * m ** (mpf(1) / 3)
    w = mpc(0, 1) * a ** mpf('1.5') * b ** mpf('2.5')
    return [mpc(1), mpc(a), mpc(b), w]


def section_probe():
    print("=" * 72)
    print("blow-up probe calibration:  f = x0^6 x3^2 + x1^3 x2^5,  r = 0.5")
    print("curve a = af m^(4/3), b = 0.4 m^(1/3), m = 1000 sigma, w = i a^1.5 b^2.5")
    r = mpf('0.5')
    target = r + mpf('5e-4')

    def theta1(af):
        sv, th = base_angles(SEXTIC, probe_point(af, mpf('1e-3')))
        return th[0]

    lo, hi = mpf('1e-4'), mpf('1e-2')
    assert theta1(lo) < target < theta1(hi)
    for _ in range(90):
        mid = (lo + hi) / 2
        if theta1(mid) < target:
            lo = mid
        else:
            hi = mid
    af = (lo + hi) / 2
    print(f"calibrated af = {mp.nstr(af, 20)}   theta1(1e-3) = {mp.nstr(theta1(af), 20)}")

    scales = [mpf('1e-1'), mpf('3e-2'), mpf('1e-2'), mpf('3e-3'), mpf('1e-3')]
    print(f"{'scale':>8} {'|x1_hat|':>12} {'|grad(x_hat)|':>14} "
          f"{'theta1':>18} {'fd step h':>12} {'max|eig| (analytic)':>21}")
    expected = []
    for s in scales:
        xr = probe_point(af, s)
        xh = normalize_point(xr, 1)
        g = SEXTIC.grad(xh)
        gn = sqrt(sum(abs(w) ** 2 for w in g))
        sv, th = base_angles(SEXTIC, xr)
        pred = predicted_tube_spectrum(
            [(th[0], 1), (pi - th[0], 1), (th[1], 1), (pi - th[1], 1)], pi / 2, 1, r)
        mx = max(abs(e) for e, m in pred)
        expected.append(mx)
        hstep = min(mpf('1e-4'), min(abs(xh[1]), abs(xh[2])) / 2000)
        print(f"{mp.nstr(s, 3):>8} {mp.nstr(abs(xh[1]), 4):>12} {mp.nstr(gn, 4):>14} "
              f"{mp.nstr(th[0], 10):>18} {mp.nstr(hstep, 3):>12} {mp.nstr(mx, 10):>21}")
    print("strictly increasing over all five:",
          all(expected[i] < expected[i + 1] for i in range(4)))

    print("\nnested-FD truncation coefficient (gap = C h^2) at two scales:")
    for s in (mpf('3e-3'), mpf('1e-3')):
        xr = probe_point(af, s)
        sv, th = base_angles(SEXTIC, xr)
        pred = predicted_tube_spectrum(
            [(th[0], 1), (pi - th[0], 1), (th[1], 1), (pi - th[1], 1)], pi / 2, 1, r)
        flat = sorted(sum([[e] * m for e, m in pred], []))
        chart, ow = algebraic_tube_chart(SEXTIC, xr, r)
        res = spectrum(chart, [mpf(0)] * 4 + [mpf('0.4')], 1, ow, h=mpf('1e-12'))
        gap = max(abs(a - b) for a, b in zip(res['eigs'], flat))
        xh = normalize_point(xr, 1)
        a4 = abs(xh[1]) ** 4
        print(f"  scale {mp.nstr(s, 3)}: gap(h=1e-12) {mp.nstr(gap, 4)}  "
              f"C {mp.nstr(gap / mpf('1e-24'), 4)}  C*a^4 {mp.nstr(gap * a4 / mpf('1e-24'), 4)}")

    print("\nquadric control curve x(s) = [1, i sqrt(1+2s^2), s, s]:")
    for s in [mpf('1e-1'), mpf('1e-3')]:
        xq = [mpc(1), mpc(0, 1) * sqrt(1 + 2 * s * s), mpc(s), mpc(s)]
        sv, th = base_angles(QUADRIC3, xq)
        pred = predicted_tube_spectrum([(th[0], 2), (th[-1], 2)], pi / 2, 1, r)
        mx = max(abs(e) for e, m in pred)
        print(f"  scale {mp.nstr(s, 3)}: takagi {[mp.nstr(v, 8) for v in sv]} "
              f"max|eig| {mp.nstr(mx, 12)}")

    print(f"\nfrozen: af = {mp.nstr(af, 20)}")
    return af


def section_warp():
    print("=" * 72)
    print("warped sphere (non-Hopf control), cp2 r0=pi/4, amplitude 1e-2")

    def warp(u):
        return mpf('0.01') * (sin(mpf('1.3') * u[0] + mpf('0.2'))
                              + mpf('0.8') * cos(mpf('0.9') * u[1] - mpf('0.4'))
                              + mpf('0.5') * sin(mpf('1.1') * u[2] + mpf('0.7')))

    chart, inward = sphere_chart(2, pi / 4, 1, warp=warp)
    for du in ([0, 0, 0], [0.2, -0.1, 0.15]):
        u0 = [mpf('0.7') + mpf(str(du[0])), mpf('0.8') + mpf(str(du[1])),
              mpf('0.9') + mpf(str(du[2]))]
        res = spectrum(chart, u0, 1, inward)
        show_spec(f"warped sphere at offset {du}", res)


def main():
    args = sys.argv[1:] or ['all']
    if 'spheres' in args or 'all' in args:
        section_spheres()
    if 'tubes' in args or 'all' in args:
        section_tubes()
    if 'takagi' in args or 'all' in args:
        section_takagi()
    if 'probe' in args or 'all' in args:
        section_probe()
    if 'warp' in args or 'all' in args:
        section_warp()


if __name__ == '__main__':
    main()
