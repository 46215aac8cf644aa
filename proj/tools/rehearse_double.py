#!/usr/bin/env python3
"""Float64 rehearsal of the blow-up probe.

Mirrors the production finite-difference pipeline in IEEE doubles (numpy
complex128) and scans the FD step per approach scale, for both the plain
central-difference estimator and Richardson (h, h/2) extrapolation.  Errors
are reported against the frozen high-precision analytic values from
highprec_check.py.  Used to freeze the per-scale steps, the expected error
margins, and the probe asymmetry tolerance.

Run:  python3 tools/rehearse_double.py
"""

import numpy as np

AF = 0.0020016519169454285569
R_TUBE = 0.5

# frozen analytic max|eig| per scale (highprec_check.py probe section)
SCALES = [1e-1, 3e-2, 1e-2, 3e-3, 1e-3]
ANALYTIC = [22.62626656, 10.02099328, 4.522624166, 9.938873548, 1999.999833]
QUADRIC_ANALYTIC = 3.40822344234


# --- ambient model: C^{n+1}, definite (c=+1) or (-,+,...,+) (c=-1) ----------

def herm(a, b, c=1):
    w = a * np.conj(b)
    if c < 0:
        return -w[0] + np.sum(w[1:])
    return np.sum(w)


def gmet(a, b, c=1):
    return herm(a, b, c).real


def normalize_point(z, c=1):
    return z / np.sqrt((c * herm(z, z, c)).real)


def project_h(w, x, c=1):
    return w - x * (c * herm(w, x, c))


def align(q, z0, c=1):
    p = herm(q, z0, c)
    return q * (c * np.conj(p) / abs(p))


def unit_g(v, c=1):
    return v / np.sqrt(gmet(v, v, c))


# --- finite-difference frame / shape pipeline ------------------------------

def raw_tangents(chart, u0, z0, c, h):
    m = len(u0)
    taus = []
    for i in range(m):
        up = list(u0); up[i] += h
        um = list(u0); um[i] -= h
        zp = align(normalize_point(chart(up), c), z0, c)
        zm = align(normalize_point(chart(um), c), z0, c)
        taus.append(project_h((zp - zm) / (2 * h), z0, c))
    return taus


def orthonormal_frame(taus, c):
    m = len(taus)
    G = np.empty((m, m))
    for i in range(m):
        for j in range(m):
            G[i, j] = gmet(taus[i], taus[j], c)
    L = np.linalg.cholesky(G)
    R = np.linalg.inv(L)
    ts = [sum(taus[i] * R[a, i] for i in range(a + 1)) for a in range(m)]
    return ts, R


def normal_vector(z0, ts, c, orient_vec):
    n1 = len(z0)
    best, bestn = None, -1.0
    for j in range(n1):
        for ii in (1.0, 1.0j):
            cand = np.zeros(n1, dtype=complex)
            cand[j] = ii
            w = project_h(cand, z0, c)
            for t in ts:
                w = w - t * gmet(w, t, c)
            nn = gmet(w, w, c)
            if nn > bestn:
                best, bestn = w, nn
    xi = unit_g(best, c)
    if gmet(xi, orient_vec, c) < 0:
        xi = -xi
    return xi


def frame_at(chart, u0, c, orient_ref, h):
    raw0 = normalize_point(chart(u0), c)
    k = int(np.argmax(np.abs(raw0)))
    lam0 = np.conj(raw0[k] / abs(raw0[k]))
    z0 = raw0 * lam0
    taus = raw_tangents(chart, u0, z0, c, h)
    ts, R = orthonormal_frame(taus, c)
    xi = normal_vector(z0, ts, c, orient_ref(u0) * lam0)
    return z0, ts, R, xi


def shape_operator(chart, u0, orient_ref, h, c=1):
    z0, ts, R, xi0 = frame_at(chart, u0, c, orient_ref, h)
    m = len(u0)
    M = np.empty((m, m))
    for i in range(m):
        xis = []
        for sgn in (1, -1):
            u = list(u0); u[i] += sgn * h
            zi, _, _, xii = frame_at(chart, u, c, orient_ref, h)
            lam = herm(zi, z0, c)
            xit = xii * (c * np.conj(lam) / abs(lam))
            if gmet(xit, xi0, c) < 0:
                xit = -xit
            xis.append(xit)
        dxi = project_h((xis[0] - xis[1]) / (2 * h), z0, c)
        for b in range(m):
            M[i, b] = -gmet(dxi, ts[b], c)
    A = R @ M
    asym = np.max(np.abs(A - A.T))
    return (A + A.T) / 2, asym


def max_eig(A):
    return np.max(np.abs(np.linalg.eigvalsh(A)))


def richardson(chart, u0, orient_ref, h, c=1):
    A1, as1 = shape_operator(chart, u0, orient_ref, h, c)
    A2, as2 = shape_operator(chart, u0, orient_ref, h / 2, c)
    return (4 * A2 - A1) / 3, max(as1, as2)


def hopf_vec(chart, u0, c, orient_ref, h):
    z0, ts, R, xi = frame_at(chart, u0, c, orient_ref, h)
    return np.array([gmet(-1j * xi, t, c) for t in ts])


def hopf_quantities(chart, u0, orient_ref, h, c=1):
    A1, as1 = shape_operator(chart, u0, orient_ref, h, c)
    A2, as2 = shape_operator(chart, u0, orient_ref, h / 2, c)
    A = (4 * A2 - A1) / 3
    u1 = hopf_vec(chart, u0, c, orient_ref, h)
    u2 = hopf_vec(chart, u0, c, orient_ref, h / 2)
    u = (4 * u2 - u1) / 3
    Au = A @ u
    mu = u @ Au
    defect = np.linalg.norm(Au - mu * u)
    return np.linalg.eigvalsh(A), mu, defect, max(as1, as2)


# --- homogeneous polynomials + Newton implicit tube chart -------------------

class Poly:
    def __init__(self, monos):
        self.monos = monos
        self.nvars = len(monos[0][1])

    def val(self, z):
        s = 0j
        for cf, ex in self.monos:
            t = complex(cf)
            for j, e in enumerate(ex):
                if e:
                    t *= z[j] ** e
            s += t
        return s

    def grad(self, z):
        g = np.zeros(self.nvars, dtype=complex)
        for j in range(self.nvars):
            s = 0j
            for cf, ex in self.monos:
                if ex[j] == 0:
                    continue
                t = complex(cf) * ex[j]
                for l, e in enumerate(ex):
                    ee = e - 1 if l == j else e
                    if ee:
                        t *= z[l] ** ee
                s += t
            g[j] = s
        return g


SEXTIC = Poly([(1, (6, 0, 0, 2)), (1, (0, 3, 5, 0))])
QUADRIC3 = Poly([(1, (2, 0, 0, 0)), (1, (0, 2, 0, 0)),
                 (1, (0, 0, 2, 0)), (1, (0, 0, 0, 2))])


def newton_dep(poly, z, jstar, seed):
    t = complex(seed)
    for _ in range(80):
        zz = np.array(z, dtype=complex)
        zz[jstar] = t
        fv = poly.val(zz)
        gd = poly.grad(zz)[jstar]
        step = fv / gd
        t -= step
        if abs(step) < 4e-16 * max(abs(t), 1e-12):
            break
    return t


def algebraic_tube_chart(poly, x0raw, r):
    x0 = normalize_point(np.array(x0raw, dtype=complex))
    n1 = poly.nvars
    j0 = int(np.argmax(np.abs(x0)))
    g0 = poly.grad(x0)
    jstar = max((j for j in range(n1) if j != j0), key=lambda j: abs(g0[j]))
    free = [j for j in range(n1) if j not in (j0, jstar)]
    scl = [max(abs(x0[j]), 1e-3) for j in free]

    def base(s):
        z = np.array(x0, dtype=complex)
        for i, j in enumerate(free):
            z[j] = x0[j] + scl[i] * complex(s[2 * i], s[2 * i + 1])
        z[jstar] = newton_dep(poly, z, jstar, x0[jstar])
        return normalize_point(z)

    def parts(u):
        x = base(u[:-1])
        nu = unit_g(project_h(np.conj(poly.grad(x)), x))
        v = nu * np.exp(1j * u[-1])
        return x, v

    def chart(u):
        x, v = parts(u)
        return x * np.cos(r) + v * np.sin(r)

    def outward(u):
        x, v = parts(u)
        return -x * np.sin(r) + v * np.cos(r)

    return chart, outward, j0, jstar


def probe_point(sigma):
    m = 1000.0 * sigma
    a = AF * m ** (4.0 / 3.0)
    b = 0.4 * m ** (1.0 / 3.0)
    w = 1j * a ** 1.5 * b ** 2.5
    return np.array([1.0, a, b, w], dtype=complex)


# --- canned angle charts (ports of the production constructions) ------------

def basis_vec(n1, j, im=False):
    v = np.zeros(n1, dtype=complex)
    v[j] = 1j if im else 1.0
    return v


def sphere_angles(phis):
    out = []
    prod = 1.0
    for p in phis:
        out.append(prod * np.cos(p))
        prod *= np.sin(p)
    out.append(prod)
    return out


def sphere_chart(n, r, c, warp=None):
    n1 = n + 1
    q0 = basis_vec(n1, 0)
    dirs = []
    for j in range(1, n1):
        dirs.append(basis_vec(n1, j))
        dirs.append(basis_vec(n1, j, True))

    def vdir(u):
        w = sphere_angles(u)
        v = np.zeros(n1, dtype=complex)
        for l in range(2 * n):
            v += dirs[l] * w[l]
        return v

    def chart(u):
        v = vdir(u)
        rr = r if warp is None else r + warp(u)
        if c > 0:
            return q0 * np.cos(rr) + v * np.sin(rr)
        return q0 * np.cosh(rr) + v * np.sinh(rr)

    def inward(u):
        v = vdir(u)
        rr = r if warp is None else r + warp(u)
        if c > 0:
            return q0 * np.sin(rr) - v * np.cos(rr)
        return -(q0 * np.sinh(rr) + v * np.cosh(rr))

    return chart, inward


def tube_cpk_chart(n, k, r):
    n1 = n + 1
    nd = []
    for j in range(k + 1, n1):
        nd.append(basis_vec(n1, j))
        nd.append(basis_vec(n1, j, True))

    def parts(u):
        b, ph = u[:2 * k], u[2 * k:]
        x = basis_vec(n1, 0)
        for j in range(k):
            x[j + 1] = complex(b[2 * j], b[2 * j + 1])
        x = normalize_point(x)
        w = sphere_angles(ph)
        v = np.zeros(n1, dtype=complex)
        for l in range(len(nd)):
            v += nd[l] * w[l]
        return x, v

    def chart(u):
        x, v = parts(u)
        return x * np.cos(r) + v * np.sin(r)

    def outward(u):
        x, v = parts(u)
        return -x * np.sin(r) + v * np.cos(r)

    return chart, outward


def tube_rp2_chart(r):
    def parts(u):
        b1, b2, phi = u
        x = normalize_point(np.array([1.0, b1, b2], dtype=complex))
        t1 = unit_g(project_h(basis_vec(3, 1), x))
        t2 = project_h(basis_vec(3, 2), x)
        t2 = unit_g(t2 - t1 * gmet(t2, t1))
        v = 1j * (t1 * np.cos(phi) + t2 * np.sin(phi))
        return x, v

    def chart(u):
        x, v = parts(u)
        return x * np.cos(r) + v * np.sin(r)

    def outward(u):
        x, v = parts(u)
        return -x * np.sin(r) + v * np.cos(r)

    return chart, outward


def tube_quadric_chart(n, r):
    def base(u):
        if n == 2:
            t = complex(u[0], u[1])
            x = np.array([1 - t * t, 1j * (1 + t * t), 2 * t], dtype=complex)
        else:
            p = complex(u[0], u[1]); q = complex(u[2], u[3])
            x = np.array([(1 - p * q) / 2, (1 + p * q) / 2j,
                          (p + q) / 2, (p - q) / 2j], dtype=complex)
        return normalize_point(x)

    def parts(u):
        x = base(u[:-1])
        nu = unit_g(np.conj(x))
        v = nu * np.exp(1j * u[-1])
        return x, v

    def chart(u):
        x, v = parts(u)
        return x * np.cos(r) + v * np.sin(r)

    def outward(u):
        x, v = parts(u)
        return -x * np.sin(r) + v * np.cos(r)

    return chart, outward


def scan(poly, xraw, analytic, hgrid, label):
    chart, ow, j0, jstar = algebraic_tube_chart(poly, xraw, R_TUBE)
    u0 = [0.0, 0.0, 0.0, 0.0, 0.4]
    print(f"{label}:  j0={j0} j*={jstar}  analytic max|eig| = {analytic:.6g}")
    print(f"  {'h':>9} {'plain':>12} {'relerr':>9} {'rich':>12} "
          f"{'relerr':>9} {'asym(h)':>9} {'asym(h/2)':>10}")
    rows = []
    for h in hgrid:
        A1, as1 = shape_operator(chart, u0, ow, h)
        A2, as2 = shape_operator(chart, u0, ow, h / 2)
        plain = max_eig(A1)
        rich = max_eig((4 * A2 - A1) / 3)
        ep = abs(plain - analytic) / analytic
        er = abs(rich - analytic) / analytic
        na1 = as1 / max(1.0, np.max(np.abs(A1)))
        na2 = as2 / max(1.0, np.max(np.abs(A2)))
        rows.append((h, plain, ep, rich, er, na1, na2))
        print(f"  {h:>9.1e} {plain:>12.6g} {ep:>9.2e} {rich:>12.6g} "
              f"{er:>9.2e} {na1:>9.2e} {na2:>10.2e}")
    return rows


def check_spec(label, chart, u0, orient, c, frozen, h=1e-3):
    eigs, mu, defect, asym = hopf_quantities(chart, u0, orient, h, c)
    dev = np.max(np.abs(np.sort(eigs) - np.sort(np.array(frozen))))
    print(f"{label}:")
    print(f"  eigs {np.sort(eigs)}  dev-from-frozen {dev:.2e}")
    print(f"  mu {mu:.12g}  defect {defect:.2e}  asym {asym:.2e}")


def section_canned():
    print("=" * 72)
    print("float64 rehearsal: canned charts, Richardson h=1e-3")
    pi = np.pi

    ch, inw = sphere_chart(2, pi / 3, 1)
    check_spec("sphere cp2 r=pi/3 (inward)", ch, [0.7, 0.8, 0.9], inw, 1,
               [-1.1547005383792515, 0.57735026918962576, 0.57735026918962576])

    ch, inw = sphere_chart(2, 0.7, -1)
    check_spec("sphere ch2 r=0.7 (inward)", ch, [0.7, 0.8, 0.9], inw, -1,
               [1.6546216358026294, 1.6546216358026294, 2.2589894129197929])

    ch, ow = tube_cpk_chart(2, 1, pi / 6)
    check_spec("tube cp1-in-cp2 r=pi/6 (outward)", ch, [0.3, -0.2, 0.6], ow, 1,
               [-1.1547005383792515, 0.57735026918962576, 0.57735026918962576])

    ch, ow = tube_cpk_chart(3, 1, pi / 5)
    check_spec("tube cp1-in-cp3 r=pi/5 (outward)", ch,
               [0.3, -0.2, 0.6, 0.5, 0.7], ow, 1,
               [-1.3763819204711735, -1.3763819204711735,
                -0.64983939246581265, 0.72654252800536089, 0.72654252800536089])

    ch, ow = tube_rp2_chart(pi / 8)
    check_spec("tube rp2-in-cp2 r=pi/8 (outward)", ch, [0.2, -0.3, 0.5], ow, 1,
               [-2.414213562373095, 0.41421356237309505, 2.0])

    ch, ow = tube_quadric_chart(2, pi / 8)
    check_spec("tube quadric-in-cp2 r=pi/8 (outward)", ch, [0.15, -0.2, 0.5],
               ow, 1, [-2.0, -0.41421356237309505, 2.414213562373095])

    ch, ow = tube_quadric_chart(3, pi / 8)
    check_spec("tube quadric-in-cp3 r=pi/8 (outward)", ch,
               [0.15, -0.2, 0.25, 0.1, 0.5], ow, 1,
               [-2.0, -0.41421356237309505, -0.41421356237309505,
                2.414213562373095, 2.414213562373095])

    print("\nconstancy mini-sweep: mu over grids, Richardson h=1e-3")
    ch, ow = tube_cpk_chart(2, 1, pi / 6)
    mus = []
    for b1 in np.linspace(-0.5, 0.5, 4):
        for b2 in np.linspace(-0.4, 0.6, 4):
            for phi in np.linspace(0.2, 1.2, 3):
                _, mu, dft, _ = hopf_quantities(ch, [b1, b2, phi], ow, 1e-3)
                mus.append(mu)
    mus = np.array(mus)
    print(f"  tube cp1-in-cp2: n={len(mus)} mean {np.mean(mus):.12g} "
          f"stddev {np.std(mus):.2e} max-defect-seen n/a")

    ch, ow = tube_quadric_chart(3, pi / 8)
    mus, dfts = [], []
    for p1 in np.linspace(-0.3, 0.3, 3):
        for q1 in np.linspace(-0.2, 0.4, 3):
            for phi in np.linspace(0.2, 1.2, 3):
                _, mu, dft, _ = hopf_quantities(
                    ch, [p1, 0.12, q1, -0.15, phi], ow, 1e-3)
                mus.append(mu); dfts.append(dft)
    mus = np.array(mus)
    print(f"  tube quadric-in-cp3: n={len(mus)} mean {np.mean(mus):.12g} "
          f"stddev {np.std(mus):.2e} max defect {max(dfts):.2e}")

    ch, inw = sphere_chart(2, 0.7, -1)
    mus, dfts = [], []
    for a1 in np.linspace(0.4, 1.0, 4):
        for a2 in np.linspace(0.5, 1.1, 4):
            for a3 in np.linspace(0.6, 1.2, 3):
                _, mu, dft, _ = hopf_quantities(ch, [a1, a2, a3], inw,
                                                1e-3, -1)
                mus.append(mu); dfts.append(dft)
    mus = np.array(mus)
    print(f"  sphere ch2: n={len(mus)} mean {np.mean(mus):.12g} "
          f"stddev {np.std(mus):.2e} max defect {max(dfts):.2e}")

    print("\nwarped (non-Hopf) control, cp2 r0=pi/4:")

    def warp(u):
        return 0.01 * (np.sin(1.3 * u[0] + 0.2) + 0.8 * np.cos(0.9 * u[1] - 0.4)
                       + 0.5 * np.sin(1.1 * u[2] + 0.7))

    ch, inw = sphere_chart(2, np.pi / 4, 1, warp=warp)
    for u0, frozen_d in (([0.7, 0.8, 0.9], 1.19e-2),
                         ([0.9, 0.7, 1.05], 9.48e-3)):
        _, mu, dft, asym = hopf_quantities(ch, u0, inw, 1e-3)
        print(f"  at {u0}: mu {mu:.6g} defect {dft:.4e} "
              f"(hp frozen ~{frozen_d:g}) asym {asym:.2e}")


def section_probe():
    print("=" * 72)
    print("float64 rehearsal: sextic blow-up probe, r = 0.5")
    grids = [
        [1e-3, 3e-4, 1e-4, 3e-5, 1e-5],
        [1e-3, 3e-4, 1e-4, 3e-5, 1e-5],
        [1e-3, 3e-4, 1e-4, 3e-5, 1e-5],
        [3e-3, 1e-3, 3e-4, 1e-4, 3e-5],
        [1e-2, 3e-3, 1e-3, 3e-4, 1e-4, 3e-5],
    ]
    for s, an, hg in zip(SCALES, ANALYTIC, grids):
        scan(SEXTIC, probe_point(s), an, hg, f"scale {s:g}")
        print()

    print("quadric control:")
    for s in (1e-1, 1e-3):
        xq = np.array([1.0, 1j * np.sqrt(1 + 2 * s * s), s, s], dtype=complex)
        scan(QUADRIC3, xq, QUADRIC_ANALYTIC, [1e-3, 3e-4, 1e-4, 3e-5],
             f"control scale {s:g}")
        print()

    print("frozen probe recipe: Richardson h=1e-3 at every scale;")
    print("expected sequence (this machine):")
    for s, an in zip(SCALES, ANALYTIC):
        chart, ow, j0, jstar = algebraic_tube_chart(SEXTIC, probe_point(s),
                                                    R_TUBE)
        A, asym = richardson(chart, [0.0] * 4 + [0.4], ow, 1e-3)
        print(f"  scale {s:g}: max|eig| {max_eig(A):.6g}  "
              f"(analytic {an:g})  asym {asym:.2e}")


def main():
    np.set_printoptions(precision=6)
    args = sys.argv[1:] or ['all']
    if 'probe' in args or 'all' in args:
        section_probe()
    if 'canned' in args or 'all' in args:
        section_canned()


if __name__ == '__main__':
    import sys
    main()
