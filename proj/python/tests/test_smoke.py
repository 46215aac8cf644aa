"""Smoke tests for the Python bindings: every major operation is exercised
once with loose tolerances; the heavy numerical scrutiny lives in the C++
test suites."""

import math

import numpy as np
import pytest

import hopftube as ht

PI = math.pi
SQ3 = math.sqrt(3.0)


def rich(patch):
    patch.fd_step = 1e-3
    patch.richardson = True
    return patch


def test_version_string():
    assert isinstance(ht.version(), str) and ht.version().count(".") == 2


def test_space_form_and_points():
    cp2 = ht.SpaceForm(+1, 2)
    assert cp2.ambient_dim() == 3
    x = ht.make_point(cp2, np.array([1, 0, 0], dtype=complex))
    y = ht.make_point(cp2, np.array([0, 1, 0], dtype=complex))
    assert abs(ht.distance(x, y) - PI / 2) < 1e-12
    # phase-equivalent representatives agree
    z = ht.make_point(cp2, np.exp(0.7j) * np.array([1, 2j, 0.5]))
    w = ht.make_point(cp2, np.array([1, 2j, 0.5], dtype=complex))
    assert ht.same_point(z, w)
    with pytest.raises(ht.PreconditionError):
        ht.SpaceForm(2, 2)


def test_sphere_spectrum_matches_closed_form():
    patch = rich(ht.geodesic_sphere_patch(ht.SpaceForm(+1, 2), PI / 3, True))
    sp = ht.spectrum(patch, np.array([0.7, 0.8, 0.9]))
    assert np.allclose(np.sort(sp.eigenvalues),
                       [-2 / SQ3, 1 / SQ3, 1 / SQ3], atol=1e-6)
    assert abs(sp.mu + 2 / SQ3) < 1e-6
    assert sp.hopf_defect < 1e-6


def test_hyperbolic_sphere_mu():
    patch = rich(ht.geodesic_sphere_patch(ht.SpaceForm(-1, 2), 0.7, True))
    sp = ht.spectrum(patch, np.array([0.7, 0.8, 0.9]))
    assert abs(sp.mu - 2 / math.tanh(1.4)) < 1e-6


def test_hopf_report_on_tube():
    patch = rich(ht.tube_cpk_patch(2, 1, PI / 6, False))
    grid = ht.grid_linspace(np.array([0.1, -0.5, 0.2]),
                            np.array([0.9, 0.5, 1.2]), [3, 3, 3])
    rep = ht.hopf_report(patch, grid, 1e-6)
    assert rep.is_hopf and rep.points_evaluated == 27
    assert rep.mu_stddev < 1e-6 and not rep.failed_points


def test_identity_and_bound():
    patch = rich(ht.geodesic_sphere_patch(ht.SpaceForm(+1, 2), PI / 4, True))
    u = np.array([0.7, 0.8, 0.9])
    res = ht.shape_identity_residuals(patch, u)
    assert res.identity_residual < 1e-5
    cb = ht.mean_curvature_bound_check(ht.spectrum(patch, u), 2, +1)
    assert cb.applicable and cb.satisfied and abs(cb.lhs - cb.rhs) < 1e-6


def test_predicted_spectrum_and_focal():
    pred = ht.predicted_spectrum([(PI / 2, 2)], PI / 2, 1, PI / 6)
    flat = sorted(v for v, mult in pred for _ in range(mult))
    assert np.allclose(flat, [-2 / SQ3, 1 / SQ3, 1 / SQ3], atol=1e-12)
    patch = rich(ht.tube_cpk_patch(2, 1, PI / 6, True))
    focal = ht.focal_radii(ht.spectrum(patch, np.array([0.3, -0.2, 0.6])))
    assert [f.multiplicity for f in focal.radii] == [1, 2]
    assert abs(focal.radii[0].r - PI / 6) < 1e-6
    assert abs(focal.radii[1].r - 2 * PI / 3) < 1e-6


def test_rank_collapse_at_focal_radius():
    patch = ht.tube_cpk_patch(2, 1, PI / 6, True)
    u = np.array([0.3, -0.2, 0.6])
    assert ht.normal_map_rank(patch, u, 0.9) == 3
    assert ht.normal_map_rank(patch, u, PI / 6) == 2
    assert ht.normal_map_rank(patch, u, 2 * PI / 3) == 0


def test_custom_patch_from_python_chart():
    cp2 = ht.SpaceForm(+1, 2)
    r = PI / 3

    def chart(u):
        z = np.zeros(3, dtype=complex)
        z[0] = math.cos(r)
        z[1] = math.sin(r) * math.cos(u[0]) * np.exp(1j * u[1])
        z[2] = math.sin(r) * math.sin(u[0]) * np.exp(1j * u[2])
        return z

    def orient_ref(u):
        z = chart(u)
        ref = np.zeros(3, dtype=complex)
        ref[0] = 1.0
        return ref - z * np.vdot(z, ref) / np.vdot(z, z)

    patch = ht.custom_patch(cp2, chart, orient_ref, fd_step=1e-3,
                            richardson=True)
    sp = ht.spectrum(patch, np.array([0.7, 0.8, 0.9]))
    assert np.allclose(np.sort(sp.eigenvalues),
                       [-2 / SQ3, 1 / SQ3, 1 / SQ3], atol=1e-5)


def test_polynomials_and_duality():
    quad = ht.parse_polynomial_file(ht.data_path("quadric_cp2.poly"))
    assert quad.degree == 2 and quad.nvars == 3
    x = np.array([1, 1j, 0], dtype=complex)
    assert abs(quad.value(x)) < 1e-14
    y = ht.gauss_point(quad, x)
    cp2 = ht.SpaceForm(+1, 2)
    assert abs(ht.distance(ht.make_point(cp2, x), y) - PI / 2) < 1e-12
    res = ht.tube_duality_check(quad, 0.5, 8)
    assert res.max_direct_residual < 1e-8
    assert ht.biduality_spot_check(quad, x) == ht.SpotCheck.passed
    pts = ht.sample_variety_points(quad, 5, 11)
    assert len(pts) == 5
    assert all(abs(quad.value(p)) < 1e-9 for p in pts)
    # round-trip through the text format
    again = ht.parse_polynomial(ht.format_polynomial(quad))
    assert again.degree == quad.degree


def test_blowup_probe_increases_toward_singularity():
    octic = ht.parse_polynomial_file(ht.data_path("octic_cp3.poly"))
    P = np.zeros(4, dtype=complex)
    P[0] = 1.0
    amp = 0.0020016519169454285569

    def approach(sigma):
        mm = 1000.0 * sigma
        a = amp * mm ** (4.0 / 3.0)
        b = 0.4 * mm ** (1.0 / 3.0)
        return np.array([1.0, a, b, 1j * a**1.5 * b**2.5], dtype=complex)

    vals = ht.singular_blowup_probe(octic, P, 0.5, [1e-1, 1e-3], approach)
    assert vals[0] is not None and vals[1] is not None
    assert vals[1] > 1e3 and vals[1] > 50 * vals[0]


def test_scenario_round_trip(tmp_path):
    names = ht.canned_scenario_names()
    assert len(names) >= 10 and "sphere_cp2" in names
    rep = ht.run_scenario(ht.resolve_scenario("sphere_cp2"))
    assert rep.overall_pass()
    assert any(c.name == "hopf" and c.passed for c in rep.checks)
    # deterministic bytes
    rep2 = ht.run_scenario(ht.resolve_scenario("sphere_cp2"))
    assert rep.json() == rep2.json() and rep.text() == rep2.text()
    # seed override is echoed
    rep3 = ht.run_scenario(ht.resolve_scenario("duality_quadric"), seed=777)
    assert rep3.seed == 777
    # config file from disk
    cfg = ht.resolve_scenario(
        ht.data_path("scenarios", "tube_cp1_in_cp2.cfg"))
    assert cfg.name == "tube_cp1_in_cp2"
    out = ht.write_report_files(rep, str(tmp_path))
    assert all((tmp_path / p).exists() or p for p in out)


def test_parse_errors_carry_messages():
    with pytest.raises(ht.ParseError):
        ht.parse_polynomial("1 0 : 2 0\n1 0 : 1 0\n")
    with pytest.raises(ht.Error):
        ht.resolve_scenario("no_such_scenario")
