from fractions import Fraction
from math import acosh, cosh, log

import numpy as np
import pytest
from hypothesis import given, strategies as st

from teichlab import classical as cl, fatgraph as fg

SPINES = [(1, 1), (1, 2), (2, 1), (0, 3), (0, 4)]
shear_value = st.floats(-3, 3, allow_nan=False)
seeds = st.integers(0, 2 ** 32 - 1)


def random_setup(gs, seed, steps=8):
    G = fg.build_standard_spine(*gs)
    rng = np.random.default_rng(seed)
    sh = {l: float(rng.uniform(-2, 2)) for l in G.edge_labels()}
    return G, rng, sh, fg.random_closed_path(G, rng, steps)


def test_torus_generator_traces_at_zero_shear():
    # e^{Z/2} + e^{-Z/2} terms at zero shear: tr = 3 for X and Y, 6 for Z
    G = fg.torus_spine()
    zero = dict.fromkeys("XYZ", 0.0)
    assert abs(cl.geodesic_trace(G, fg.slope_path(0, 1), zero)) == pytest.approx(3.0)
    assert abs(cl.geodesic_trace(G, fg.slope_path(1, 0), zero)) == pytest.approx(3.0)
    assert cl.proper_length_classical(3.0) == pytest.approx(acosh(1.5))


def test_elliptic_trace_rejected():
    with pytest.raises(cl.EllipticError):
        cl.proper_length_classical(1.5)


@given(st.sampled_from(SPINES), seeds)
def test_path_matrix_is_unimodular(gs, seed):
    G, rng, sh, p = random_setup(gs, seed)
    M = cl.path_matrix(G, p, sh)
    # cancellation in ad - bc grows with the entries
    scale = max(1.0, np.abs(M).max() ** 2)
    assert abs(np.linalg.det(M) - 1.0) < 1e-13 * scale


@given(st.sampled_from(SPINES), seeds)
def test_trace_is_cyclic(gs, seed):
    G, rng, sh, p = random_setup(gs, seed)
    t = cl.geodesic_trace(G, p, sh)
    for k in range(1, len(p)):
        assert cl.geodesic_trace(G, p.rotate(k), sh) == pytest.approx(t, rel=1e-10)


@given(st.sampled_from(SPINES), seeds)
def test_flip_preserves_traces(gs, seed):
    G, rng, sh, p = random_setup(gs, seed)
    labs = [l for l in G.edge_labels() if G.is_flippable(l)]
    lab = labs[rng.integers(len(labs))]
    H, sh2 = cl.flip_shear(G, sh, lab)
    a = abs(cl.geodesic_trace(G, p, sh))
    b = abs(cl.geodesic_trace(H, fg.transport_path(G, lab, p), sh2))
    assert b == pytest.approx(a, rel=1e-9)


@given(st.sampled_from(SPINES), seeds)
def test_flip_twice_returns_shear(gs, seed):
    G, rng, sh, _ = random_setup(gs, seed)
    labs = [l for l in G.edge_labels() if G.is_flippable(l)]
    lab = labs[rng.integers(len(labs))]
    H, sh2 = cl.flip_shear(G, sh, lab)
    K, sh3 = cl.flip_shear(H, sh2, lab)
    assert K.is_isomorphic(G)
    assert sh3 == pytest.approx(sh, abs=1e-10)


@given(st.sampled_from(SPINES), seeds)
def test_log_trace_matches_direct_trace(gs, seed):
    G, rng, sh, p = random_setup(gs, seed)
    t = abs(cl.geodesic_trace(G, p, sh))
    assert cl.log_trace(G, p, sh) == pytest.approx(log(t), rel=1e-10, abs=1e-10)


@given(st.floats(2.0001, 1e6))
def test_proper_length_inverts_cosh(t):
    pl = cl.proper_length_classical(t)
    assert 2 * cosh(pl) == pytest.approx(t, rel=1e-12)
    assert cl.proper_length_from_log_trace(log(t)) == pytest.approx(pl, rel=1e-9, abs=1e-9)


@given(st.sampled_from(SPINES), seeds)
def test_laurent_geodesic_matches_numeric(gs, seed):
    G, rng, sh, p = random_setup(gs, seed, steps=5)
    f = cl.geodesic_laurent(G, p)
    z = [sh[l] for l in G.edge_labels()]
    assert all(c > 0 for c in f.terms.values())
    assert f.evaluate(z) == pytest.approx(abs(cl.geodesic_trace(G, p, sh)), rel=1e-10)


@pytest.mark.parametrize("gs", SPINES)
def test_bracket_is_antisymmetric_with_face_casimirs(gs):
    G = fg.build_standard_spine(*gs)
    B = cl.wp_matrix(G)
    assert (B.B == -B.B.T).all()
    assert set(np.unique(B.B)) <= {-2, -1, 0, 1, 2}
    F = np.array(G.face_vectors())
    assert not (B.B @ F.T).any()


def _random_laurent(rng, dim):
    terms = {}
    for _ in range(3):
        u = tuple(int(x) for x in rng.integers(-2, 3, size=dim))
        terms[u] = Fraction(int(rng.integers(1, 4)))
    return cl.LaurentExpr(terms, dim)


@given(seeds)
def test_poisson_bracket_is_a_lie_bracket(seed):
    rng = np.random.default_rng(seed)
    G = fg.torus_spine()
    B = cl.wp_matrix(G)
    f, g, h = (_random_laurent(rng, 3) for _ in range(3))
    pb = lambda a, b: cl.poisson_bracket(a, b, B)
    assert (pb(f, g) + pb(g, f)).is_zero()
    assert (pb(f, pb(g, h)) + pb(g, pb(h, f)) + pb(h, pb(f, g))).is_zero()
    assert (pb(f, g * h) - pb(f, g) * h - g * pb(f, h)).is_zero()


@given(shear_value, shear_value)
def test_classical_pentagon_map_has_period_five(x, y):
    assert cl.pentagon_map_check(x, y) < 1e-9


@given(st.floats(-30, 30))
def test_phi_reflection(z):
    assert cl.phi_classical(z) - cl.phi_classical(-z) == pytest.approx(z, abs=1e-12)


def test_boundary_length_of_torus_face():
    G = fg.torus_spine()
    (face,) = G.faces()
    sh = {"X": 0.5, "Y": -0.2, "Z": 0.1}
    assert cl.boundary_length(sh, face) == pytest.approx(2 * 0.4)
    assert cl.is_puncture({"X": 1.0, "Y": -0.5, "Z": -0.5}, face)


def test_laurent_json_round_trip():
    f = cl.geodesic_laurent(fg.torus_spine(), fg.slope_path(2, 3))
    assert cl.LaurentExpr.from_json(f.to_json(), 3) == f
