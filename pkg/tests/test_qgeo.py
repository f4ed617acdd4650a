from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from teichlab import classical as cl, fatgraph as fg, qgeo
from teichlab.qalg import QCoeff

G = fg.torus_spine()
coprime = [(m1, n - m1) for n in range(1, 9) for m1 in range(n + 1) if gcd(m1, n - m1) == 1]


@pytest.mark.parametrize("name", sorted(qgeo.torus_identities()))
def test_torus_identity(name):
    assert qgeo.torus_identities()[name].is_zero()


def test_generators_hermitian_and_tilde_coefficient():
    G_X, G_Y, G_Z, tG_Z = qgeo.torus_generators()
    assert all(x.is_hermitian() for x in (G_X, G_Y, G_Z, tG_Z))
    assert tG_Z.coefficient((1, -1, 0)) == QCoeff({4: 1, -4: 1})


@pytest.mark.parametrize("m1,m2", coprime)
def test_curve_trace_is_hermitian(m1, m2):
    assert qgeo.torus_curve_trace(m1, m2).is_hermitian()


@given(st.sampled_from(coprime), st.tuples(*[st.floats(-1.5, 1.5)] * 3))
def test_curve_trace_reduces_to_classical_trace(mm, z):
    # skein recursion at q = 1 against the 2x2 matrix product
    t = qgeo.torus_curve_trace(*mm).at_q1().evaluate(list(z))
    sh = dict(zip("XYZ", z))
    c = abs(cl.geodesic_trace(G, fg.slope_path(*mm), sh))
    assert t == pytest.approx(c, rel=1e-10)


@pytest.mark.parametrize("m1,m2", [(1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1), (1, 4)])
def test_strand_sum_matches_skein_on_short_words(m1, m2):
    assert qgeo.torus_word_trace(fg.slope_word(m1, m2)) == qgeo.torus_curve_trace(m1, m2)


@pytest.mark.parametrize("m1,m2", [(m1, m2) for m1, m2 in coprime if m1 + m2 <= 6])
def test_twist_naturality(m1, m2):
    ok, steps = qgeo.naturality_check(m1, m2)
    assert ok


def test_I_m_recursions_and_U_forms():
    _, res = qgeo.I_m_sequence(6)
    assert all(r.is_zero() for r in res.values())
    for m in range(1, 5):
        assert all(r.is_zero() for r in qgeo.I_m_closed_forms(m))


def test_printed_cosh_forms_do_not_hold():
    # the e^{ml/2} + e^{-ml/2} forms differ from I_m already at m = 1
    r1, r2 = qgeo.I_m_closed_forms(1, printed=True)
    assert not (r1.is_zero() and r2.is_zero())


def test_positivity_certificate():
    diff2, r = qgeo.positivity_certificate()
    assert r.is_zero()
    f = diff2.at_q1()
    rng = np.random.default_rng(1)
    assert min(f.evaluate(rng.normal(scale=2, size=3)) for _ in range(200)) >= 0


@given(st.lists(st.floats(-2, 2), min_size=5, max_size=5),
       st.sampled_from([(1, None), (2, None), (3, None), (1, "AB"), (2, "AC"), (3, "CD")]))
def test_flip_identities_in_commuting_limit(vals, case):
    s = dict(zip("ABCDZ", vals))
    assert qgeo.flip_identities_classical_check(case[0], s, case[1]) < 1e-10


def test_coincidence_must_match_case():
    with pytest.raises(ValueError):
        qgeo.flip_identities_classical_check(1, dict.fromkeys("ABCDZ", 0.0), "CD")


def test_chebyshev_traces():
    G_X = qgeo.torus_generators()[0]
    for n in (2, 3, 4):
        assert qgeo.torus_word_trace("a" * n) == qgeo.chebyshev_T(n, G_X)
