from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from teichlab import qalg
from teichlab.qalg import QCoeff, QElement, TORUS_BRACKET

B = TORUS_BRACKET
exps = st.tuples(*[st.integers(-2, 2)] * 3)
coeffs = st.dictionaries(st.integers(-8, 8), st.integers(-3, 3), min_size=1, max_size=2)
elements = st.dictionaries(exps, coeffs.map(QCoeff), min_size=1, max_size=3).map(
    lambda t: QElement(t, B))


@given(elements, elements, elements)
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@given(elements, elements)
def test_adjoint_is_an_anti_involution(a, b):
    assert (a * b).adjoint() == b.adjoint() * a.adjoint()
    assert a.adjoint().adjoint() == a


@given(elements, elements)
def test_commutative_limit_is_a_homomorphism(a, b):
    assert (a * b).at_q1() == a.at_q1() * b.at_q1()


@given(elements, st.tuples(*[st.floats(-1, 1)] * 3))
def test_evaluate_at_one_matches_commutative_limit(a, z):
    assert a.evaluate(1.0, z) == pytest.approx(a.at_q1().evaluate(z), rel=1e-12, abs=1e-12)


@given(elements, elements)
def test_reduced_lattice_is_an_isomorphism(a, b):
    ra, rb = qalg.to_reduced(a), qalg.to_reduced(b)
    assert ra * rb == qalg.to_reduced(a * b)
    assert qalg.from_reduced(ra) == a


@given(elements)
def test_json_round_trip(a):
    assert QElement.from_json(a.to_json(), B) == a


@given(exps, exps)
def test_monomials_q_commute(u, v):
    x, y = QElement.monomial(u, B), QElement.monomial(v, B)
    w = x.omega(u, v)
    assert x * y == (y * x).shift(-2 * w)


def test_central_direction():
    c = QElement.monomial((1, 1, 1), B)
    for u in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]:
        m = QElement.monomial(u, B)
        assert c * m == m * c


def test_bracket_mismatch():
    other = ((0, 1), (-1, 0))
    with pytest.raises(qalg.BracketMismatch):
        QElement.one(B) + QElement.one(other)


def test_q_powers():
    assert QCoeff.q(Fraction(1, 2)) == QCoeff({2: 1})
    assert QCoeff({4: 1, -4: 1}).at(np.exp(0.3j)) == pytest.approx(2 * np.cos(0.3))
