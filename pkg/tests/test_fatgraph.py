from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from teichlab import fatgraph as fg

SPINES = [(1, 1), (1, 2), (2, 1), (0, 3), (0, 4), (1, 3), (2, 2), (3, 1)]


def balanced(w):
    """Every two cyclic factors of equal length differ by at most one ``a``."""
    n = len(w)
    ww = w * 2
    for k in range(1, n):
        counts = {ww[i:i + k].count("a") for i in range(n)}
        if max(counts) - min(counts) > 1:
            return False
    return True


@pytest.mark.parametrize("genus,holes", SPINES)
def test_standard_spine_topology(genus, holes):
    G = fg.build_standard_spine(genus, holes)
    assert G.genus() == genus
    assert G.num_faces() == holes
    assert G.num_edges() == 6 * genus - 6 + 3 * holes
    assert G.euler_characteristic() == 2 - 2 * genus - holes
    assert all(len(v) == 3 for v in G.vertices)


@pytest.mark.parametrize("genus,holes", [(0, 1), (0, 2)])
def test_unstable_spines_rejected(genus, holes):
    with pytest.raises(fg.NotConstructible):
        fg.build_standard_spine(genus, holes)


@pytest.mark.parametrize("genus,holes", SPINES)
def test_text_round_trip(genus, holes):
    G = fg.build_standard_spine(genus, holes)
    H = fg.FatGraph.from_text(G.to_text())
    assert H.is_isomorphic(G, labels=True)
    assert H.to_text() == G.to_text()


@pytest.mark.parametrize("text,where", [
    ("fatgraph v1\nv a b\n", "line 2"),
    ("fatgraph v2\n", "line 1"),
    ("fatgraph v1\nv x0 z0 y0\nv x1 z1 y1\ne X x0 x1\ne Y y0 y1\ne Z z0 q\n", "line 6, column 8"),
])
def test_parse_errors_carry_position(text, where):
    with pytest.raises(fg.FatGraphError) as e:
        fg.FatGraph.from_text(text)
    assert where in str(e.value)
    assert "column" in str(e.value)


@given(st.sampled_from(SPINES), st.integers(0, 2 ** 32 - 1), st.data())
def test_whitehead_preserves_topology_and_is_involutive(gs, seed, data):
    G = fg.build_standard_spine(*gs)
    labs = [l for l in G.edge_labels() if G.is_flippable(l)]
    lab = data.draw(st.sampled_from(labs))
    H = G.whitehead(lab)
    assert (H.genus(), H.num_faces(), H.num_edges()) == (G.genus(), G.num_faces(), G.num_edges())
    assert H.whitehead(lab).is_isomorphic(G)


@given(st.sampled_from(SPINES), st.integers(0, 2 ** 32 - 1), st.integers(1, 15))
def test_random_paths_are_closed_and_reduced(gs, seed, steps):
    G = fg.build_standard_spine(*gs)
    p = fg.random_closed_path(G, np.random.default_rng(seed), steps)
    turns = fg.path_turns(G, p)
    assert len(turns) == len(p)
    assert set(turns) <= {fg.LEFT, fg.RIGHT}


@given(st.lists(st.integers(1, 3), min_size=1, max_size=4))
def test_cf_words_are_balanced_and_primitive(cf):
    words = fg.cf_word(cf)
    for w in words:
        assert balanced(w)
        assert gcd(*fg.letter_counts(w)) == 1


@given(st.integers(1, 30), st.integers(1, 30))
def test_slope_word_counts_and_balance(m1, m2):
    if gcd(m1, m2) != 1:
        return
    w = fg.slope_word(m1, m2)
    assert w.count("b") == m1 and w.count("a") == m2
    assert balanced(w)


def test_tilde_swaps_first_two_blocks_in_path_order():
    assert fg.tilde_word("abaab") == "ababa"
    assert fg.tilde_word("ab") == "ba"


def test_graph_length_weights():
    G = fg.torus_spine()
    p = fg.slope_path(2, 3)
    assert fg.graph_length(p, g=G) == 2 * 5
    with pytest.raises(ValueError):
        fg.graph_length(p, {"X": 1.0, "Y": 0.0, "Z": 1.0}, g=G)
