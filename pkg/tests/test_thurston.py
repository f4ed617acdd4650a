from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from teichlab import classical as cl, fatgraph as fg, thurston as th

pairs = st.tuples(st.integers(1, 200), st.integers(1, 200)).filter(
    lambda p: gcd(*p) == 1 and p[0] != p[1])
points = st.tuples(st.floats(-50, 50), st.floats(-50, 50))
positive_rationals = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)


@given(pairs)
def test_splitting_runs_are_partial_quotients(p):
    big, small = max(p), min(p)
    word, hit = th.splitting_sequence(small, big)
    assert hit
    assert [len(r) for r in th.runs(word)] == th.cf_expand(big, small)


@given(pairs)
def test_unzip_then_zip_is_identity(p):
    m1, m2 = p
    word = th.unzip_sequence((m1, m2, m1 + m2))
    assert th.zip_word(th.invert_word(word)) == (m1, m2, m1 + m2)
    counts = [-e for _, e in word][::-1]
    assert counts == th.cf_expand(max(p), min(p))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=8))
def test_consecutive_convergents_are_farey_neighbours(cf):
    conv = th.convergents(cf)
    for a, b in zip(conv, conv[1:]):
        assert th.intersection_number(a, b) == 1


@given(points, st.sampled_from("XY"))
def test_domain_table_matches_twist_formula(p, t):
    a = th.tropical_dehn(p, t)[0]
    b = th.tropical_twist_formula(t, *p)
    assert a == pytest.approx(b, abs=1e-9)


@given(points, st.sampled_from("XY"), st.floats(0.1, 10))
def test_tropical_twist_is_homogeneous(p, t, lam):
    a = th.tropical_dehn(p, t)[0]
    b = th.tropical_dehn((lam * p[0], lam * p[1]), t)[0]
    assert b == pytest.approx((lam * a[0], lam * a[1]), rel=1e-9, abs=1e-9)


@given(st.tuples(st.floats(-2, 2), st.floats(-2, 2)), st.sampled_from("XY"))
def test_classical_twist_scales_to_tropical(p, t):
    # shear twist with phi = log(1 + e^z), rescaled by lam, against the table
    lam = 400.0
    X, Y = lam * p[0], lam * p[1]
    Z = -X - Y
    if t == "X":
        img = (X + 2 * cl.phi_classical(Z), -Z)
    else:
        img = (-Z, Y - 2 * cl.phi_classical(-Z))
    trop = th.tropical_dehn(p, t)[0]
    assert img[0] / lam == pytest.approx(trop[0], abs=5e-3)
    assert img[1] / lam == pytest.approx(trop[1], abs=5e-3)


@given(points, st.lists(st.sampled_from("XY"), min_size=1, max_size=40))
def test_no_return_to_domain_three(p, twists):
    inside = False
    for t in twists:
        p, doms = th.tropical_dehn(p, t)
        inside = inside or doms[0] in ("I", "II")
        if inside:
            assert not doms[1].startswith("III")


@given(positive_rationals, positive_rationals, st.lists(st.integers(1, 4), min_size=1, max_size=5))
def test_tropical_recurrences_exact(X, Y, cf):
    pl, gl, res = th.tropical_recurrence((X, Y), cf)
    assert all(r == 0 for r in res)
    assert all(isinstance(v, Fraction) for v in pl)


@given(st.tuples(*[st.floats(-1, 1)] * 3), st.lists(st.integers(1, 3), min_size=2, max_size=6))
def test_word_matrices_match_path_traces(s, cf):
    sh = dict(zip("XYZ", s))
    G = fg.torus_spine()
    for M, w in zip(th.cf_word_matrices(sh, cf), fg.cf_word(cf)):
        direct = cl.log_trace(G, fg.torus_word_path(w), sh)
        assert M.log_abs_trace() == pytest.approx(direct, rel=1e-10, abs=1e-10)


def test_golden_convergence_at_zero_shear():
    rows = th.converge_ratio((0, 0, 0), [1] * 15)
    gaps = th.cauchy_gaps(rows)
    assert gaps[-1] < 1e-3
    assert th.decreasing_after(gaps, 5)


def test_weightings_change_the_limit():
    a = th.converge_ratio((0, 0, 0), [1] * 15)[-1][-1]
    b = th.converge_ratio((0, 0, 0), [1] * 15, weights={"X": 1.0, "Y": 3.0, "Z": 1.0})[-1][-1]
    assert abs(a - b) > 1e-2


def test_depth_checks():
    with pytest.raises(ValueError):
        th.converge_ratio((0, 0, 0), [1] * 5, depth=6)
    assert len(th.converge_ratio((0, 0, 0), [2, 1], depth=1)) == 1


def test_alphabet_table():
    tab = th.alphabet_table()
    got = {a: tuple(tab[a][b] for b in th.LETTERS) for a in th.LETTERS}
    assert got == th.LETTER_TABLE


@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 2 ** 32 - 1))
def test_cluster_letter_expansion(m, k, seed):
    rng = np.random.default_rng(seed)
    assert th.cluster_decompose(rng.normal(size=m), rng.normal(size=k)) < 1e-10


@given(st.tuples(*[st.floats(-1.5, 1.5)] * 3), st.sampled_from([[1] * 14, [2, 1] * 7]))
def test_long_word_estimate(s, cf):
    for N in range(6, 11):
        lhs, bound = th.long_word_estimate(s, cf, 3, N)
        assert lhs <= bound
