r"""
Thurston theory of the once-punctured torus.

Foliation shears and tropical flips, continued fractions and their three
incarnations (train-track splitting, Euclidean unzipping by Dehn twists and
block words on the spine), the piecewise-linear twist dynamics on tropical
shears, convergence of proper length over graph length along convergents,
and the letter calculus used to estimate long traces.

EXAMPLES::

    >>> cf_expand(7, 3)
    [2, 3]
    >>> unzip_sequence((7, 3, 10))
    [('X', -3), ('Y', -2)]
    >>> splitting_sequence(2, 5)
    ('LLRR', True)
"""
from fractions import Fraction
from math import gcd, log, sqrt

import numpy as np

from .classical import (EllipticError, edge_matrix, log_trace, phi_classical,
                        proper_length_from_log_trace, turn_matrix, flip_shear)
from .fatgraph import (LEFT, RIGHT, cf_word, letter_counts, path_turns, torus_spine,
                       torus_word_path)


# foliation shears

def phi_tropical(x):
    r"""
    ``(x + |x|)/2``.

    EXAMPLES::

        >>> phi_tropical(2), phi_tropical(-3)
        (2, 0)
    """
    return x if x > 0 else x * 0


def face_sums(g, coords):
    return [sum(coords[lab] for lab in f.edges) for f in g.faces()]


def tropical_flip(g, coords, label):
    r"""
    Flip with the tropical ``phi``; face sums of the input must vanish.

    Returns ``(g', coords')``. Exact on Fractions.

    EXAMPLES::

        >>> G = torus_spine()
        >>> c = {"X": Fraction(1), "Y": Fraction(2), "Z": Fraction(-3)}
        >>> G2, c2 = tropical_flip(G, c, "Z")
        >>> c2 == {"X": 1, "Y": -4, "Z": 3}
        True
    """
    sums = face_sums(g, coords)
    if any(s != 0 for s in sums):
        raise ValueError("face conditions violated: face sums %r" % (sums,))
    return flip_shear(g, coords, label, phi=phi_tropical)


def freeway_solve(a1, a2, a3):
    r"""
    Measures of the three short branches of a trigon from the three long
    ones: ``mu_i = (a1 + a2 + a3 - 2 a_i)/2``.

    EXAMPLES::

        >>> freeway_solve(2, 1, 1)
        (0, 1, 1)
    """
    s = a1 + a2 + a3
    out = tuple(Fraction(s - 2 * a, 2) for a in (a1, a2, a3))
    return tuple(int(x) if x.denominator == 1 else x for x in out)


def is_measure_triple(t):
    mx, my, mz = t
    return (min(t) >= 0 and
            (mx == my + mz or my == mx + mz or mz == mx + my))


def foliation_shear_from_triple(t, g=None):
    r"""
    Foliation shear ``zeta_e = (m_A - m_B + m_C - m_D)/2`` over the four
    edges around each edge ``e``; ``t = (m_X, m_Y, m_Z)``.

    EXAMPLES::

        >>> z = foliation_shear_from_triple((1, 1, 2))
        >>> z == {"X": -1, "Y": 1, "Z": 0}
        True
    """
    if not is_measure_triple(t):
        raise ValueError("%r is not a measure triple" % (tuple(t),))
    g = g or torus_spine()
    m = dict(zip(("X", "Y", "Z"), (Fraction(x) for x in t)))
    out = {}
    for lab in g.edge_labels():
        nb = g.flip_neighbors(lab)
        mm = {s: m[g.edge_of[h]] for s, h in nb.items()}
        v = (mm["A"] - mm["B"] + mm["C"] - mm["D"]) / 2
        out[lab] = int(v) if v.denominator == 1 else v
    return out


# continued fractions, slopes

def cf_expand(m1, m2):
    r"""
    Partial quotients of ``m1/m2`` for coprime ``0 < m2 < m1``.

    EXAMPLES::

        >>> cf_expand(8, 5)
        [1, 1, 1, 2]
        >>> cf_expand(4, 2)
        Traceback (most recent call last):
        ...
        ValueError: (4, 2) is not coprime
    """
    m1, m2 = int(m1), int(m2)
    if not 0 < m2 < m1:
        raise ValueError("need 0 < m2 < m1, got (%d, %d)" % (m1, m2))
    if gcd(m1, m2) != 1:
        raise ValueError("(%d, %d) is not coprime" % (m1, m2))
    out = []
    while m2:
        out.append(m1 // m2)
        m1, m2 = m2, m1 % m2
    return out


def cf_value(cf):
    r"""
    ``1/(a_1 + 1/(a_2 + ...))`` as a Fraction, i.e. ``m2/m1``.

    EXAMPLES::

        >>> cf_value([1, 1, 1, 1])
        Fraction(3, 5)
        >>> cf_value([2, 3])
        Fraction(3, 7)
    """
    if not cf or any(int(a) < 1 for a in cf):
        raise ValueError("partial quotients must be positive")
    x = Fraction(0)
    for a in reversed(cf):
        x = 1 / (a + x)
    return x


def convergents(cf):
    """Pairs ``(p_k, q_k)`` with ``q_k/p_k = cf_value(cf[:k])``."""
    out = []
    p0, p1 = 1, cf[0]
    q0, q1 = 0, 1
    out.append((p1, q1))
    for a in cf[1:]:
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        out.append((p1, q1))
    return out


def splitting_sequence(A, B, max_steps=10 ** 6):
    r"""
    Split the two branches of weights ``A`` and ``B`` until a collision.

    The larger weight splits through the smaller: ``L`` when ``B`` is
    larger, ``R`` when ``A`` is. On a tie the split continues the current
    run and empties both branches, which is the collision. Returns
    ``(word, collided)``.

    EXAMPLES::

        >>> splitting_sequence(1, 3)
        ('LLL', True)
        >>> w, c = splitting_sequence(1, (1 + 5 ** 0.5) / 2, 20)
        >>> [len(r) for r in runs(w)] == [1] * 20, c
        (True, False)
    """
    if not (A > 0 and B > 0):
        raise ValueError("weights must be positive")
    a, b = A, B
    word = []
    last = None
    while len(word) < max_steps:
        if b > a or (b == a and last != RIGHT):
            b = b - a
            word.append(LEFT)
        else:
            a = a - b
            word.append(RIGHT)
        last = word[-1]
        if a == 0 or b == 0:
            return "".join(word), True
    return "".join(word), False


def runs(word):
    out = []
    for ch in word:
        if out and out[-1][0] == ch:
            out[-1] += ch
        else:
            out.append(ch)
    return out


def intersection_number(a, b):
    r"""
    ``|ps - qr|`` for slopes ``a = p/q`` and ``b = r/s`` given as pairs or
    Fractions; ``(1, 0)`` is the slope ``1/0``.

    EXAMPLES::

        >>> intersection_number((1, 0), (0, 1))
        1
        >>> intersection_number(Fraction(1, 2), Fraction(1, 3))
        1
    """
    p, q = _slope(a)
    r, s = _slope(b)
    return abs(p * s - q * r)


def _slope(x):
    if isinstance(x, Fraction):
        return x.numerator, x.denominator
    p, q = (int(v) for v in x)
    if (p, q) == (0, 0) or gcd(p, q) != 1:
        raise ValueError("slope %r/%r is not reduced" % (p, q))
    return p, q


# unzipping

def unzip_steps(m1, m2):
    r"""
    Single steps ``(twist, before, after)`` of the Euclidean reduction of
    ``(m1, m2)``: ``Y`` takes ``(m1, m2)`` to ``(m1 - m2, m2)`` and ``X``
    takes it to ``(m1, m2 - m1)``; a tie continues the current run (``Y``
    first).
    """
    m1, m2 = int(m1), int(m2)
    if m1 < 0 or m2 < 0 or (m1, m2) == (0, 0) or gcd(m1, m2) != 1:
        raise ValueError("(%d, %d) must be nonnegative and coprime" % (m1, m2))
    out = []
    last = None
    while m1 and m2:
        if m1 > m2 or (m1 == m2 and last != "X"):
            t, nxt = "Y", (m1 - m2, m2)
        else:
            t, nxt = "X", (m1, m2 - m1)
        out.append((t, (m1, m2), nxt))
        m1, m2 = nxt
        last = t
    return out


def unzip_sequence(t):
    r"""
    Dehn word reducing ``(m1, m2, m1 + m2)`` to ``(1, 0, 1)`` or ``(0, 1, 1)``.

    Written as a composition, leftmost applied last: ``[('X', -3), ('Y',
    -2)]`` is ``D_X^{-3} D_Y^{-2}``.

    EXAMPLES::

        >>> unzip_sequence((1, 0, 1))
        []
    """
    m1, m2 = t[0], t[1]
    if len(t) > 2 and t[2] != m1 + m2:
        raise ValueError("expected a triple (m1, m2, m1 + m2), got %r" % (tuple(t),))
    word = []
    for tw, _, _ in unzip_steps(m1, m2):
        if word and word[-1][0] == tw:
            word[-1] = (tw, word[-1][1] - 1)
        else:
            word.append((tw, -1))
    return word[::-1]


def invert_word(word):
    return [(g, -e) for g, e in reversed(word)]


def zip_word(word):
    r"""
    Apply a positive Dehn word to the generator it ends on.

    ``D_Y`` takes ``(m1, m2)`` to ``(m1 + m2, m2)`` and ``D_X`` to
    ``(m1, m1 + m2)``; the start is ``(1, 0)`` when the rightmost twist is
    ``D_X`` and ``(0, 1)`` when it is ``D_Y``.

    EXAMPLES::

        >>> zip_word([("Y", 2), ("X", 3)])
        (7, 3, 10)
        >>> zip_word(invert_word(unzip_sequence((8, 5, 13))))
        (8, 5, 13)
    """
    if not word:
        return (1, 0, 1)
    if any(e < 1 for _, e in word):
        raise ValueError("zip takes positive exponents")
    m1, m2 = (1, 0) if word[-1][0] == "X" else (0, 1)
    for gen, e in reversed(word):
        for _ in range(e):
            m1, m2 = (m1 + m2, m2) if gen == "Y" else (m1, m1 + m2)
    return (m1, m2, m1 + m2)


# tropical twist dynamics

def tropical_domain(X, Y):
    r"""
    Domain label of a tropical point; boundaries go to the lower domain.

    EXAMPLES::

        >>> tropical_domain(2, 1), tropical_domain(1, -3), tropical_domain(-1, 3), tropical_domain(-3, 1)
        ('I', 'II', 'IIIa', 'IIIb')
    """
    if X >= 0 and Y >= 0:
        return "I"
    if X > 0 and Y < 0:
        return "I" if X >= -Y else "II"
    if X <= 0 and Y <= 0:
        return "II"
    return "IIIa" if -X <= Y else "IIIb"


def _row_I(twist, X, Y):
    return (X, X + Y) if twist == "X" else (X + Y, -2 * X - Y)


def _row_II(twist, X, Y):
    return (-X - 2 * Y, X + Y) if twist == "X" else (X + Y, Y)


DOMAIN_TABLE = {"I": _row_I, "II": _row_II, "IIIa": _row_I, "IIIb": _row_II}


def tropical_twist_formula(twist, X, Y):
    r"""
    Tropical limit of the twist on shears with ``Z = -X - Y``: ``D_X^{-1}``
    is ``(X + 2 phi(Z), -Z)`` and ``D_Y^{-1}`` is ``(-Z, Y - 2 phi(-Z))``.
    """
    Z = -X - Y
    if twist == "X":
        return (X + 2 * phi_tropical(Z), -Z)
    return (-Z, Y - 2 * phi_tropical(-Z))


def tropical_dehn(p, twist, count=1):
    r"""
    Apply ``D_twist^{-1}`` ``count`` times using the domain table.

    Returns ``(point, domains)`` where ``domains`` lists the domain of the
    starting point and of each image.

    EXAMPLES::

        >>> tropical_dehn((2, 1), "Y")
        ((3, -5), ['I', 'II'])
        >>> tropical_dehn((-1, -1), "Y")
        ((-2, -1), ['II', 'II'])
    """
    if twist not in ("X", "Y"):
        raise ValueError("twist must be 'X' or 'Y'")
    X, Y = p
    doms = [tropical_domain(X, Y)]
    for _ in range(count):
        X, Y = DOMAIN_TABLE[doms[-1]](twist, X, Y)
        doms.append(tropical_domain(X, Y))
    return (X, Y), doms


def tropical_proper_lengths(p):
    r"""
    ``(pl_Y, pl_X)``: ``X + Y/2`` in domain I, ``-Y - X/2`` in domain II;
    the entry for the other domain is ``None``.

    EXAMPLES::

        >>> tropical_proper_lengths((2, 1))
        (Fraction(5, 2), None)
        >>> tropical_proper_lengths((-1, -3))
        (None, Fraction(7, 2))
    """
    X, Y = (Fraction(v) for v in p)
    d = tropical_domain(X, Y)
    if d == "I":
        return X + Y / 2, None
    if d == "II":
        return None, -Y - X / 2
    raise ValueError("(%s, %s) lies in domain %s" % (X, Y, d))


def tropical_recurrence(p, cf):
    r"""
    Proper and graph lengths along alternating twist blocks.

    Starting at ``p`` in domain I, apply ``D_Y^{-a_1}``, ``D_X^{-a_2}``, ...
    and read the proper length of the current generator (``gamma_X`` in
    domain II, ``gamma_Y`` in domain I). Returns ``(pl, gl, residuals)``
    where residuals are ``l_k - a_k l_{k-1} - l_{k-2}`` for both sequences,
    seeded with ``l_0 = pl_Y(p)`` and ``l_{-1} = X/2``, and graph lengths of
    the words ``L_k`` seeded with the blocks.

    EXAMPLES::

        >>> pl, gl, res = tropical_recurrence((Fraction(2), Fraction(1)), [2, 3])
        >>> all(r == 0 for r in res)
        True
    """
    X, Y = (Fraction(v) for v in p)
    if tropical_domain(X, Y) != "I":
        raise ValueError("start must lie in domain I")
    pl = [X / 2, X + Y / 2]
    for k, a in enumerate(cf):
        twist = "Y" if k % 2 == 0 else "X"
        (X, Y), doms = tropical_dehn((X, Y), twist, a)
        want = "II" if twist == "Y" else "I"
        if doms[-1] != want:
            raise ValueError("left the stable domains: %r" % (doms,))
        pY, pX = tropical_proper_lengths((X, Y))
        pl.append(pX if twist == "Y" else pY)
    words = ["a", "b"] + cf_word(list(cf))
    gl = [2 * len(w) for w in words]
    res = []
    for k, a in enumerate(cf):
        res.append(pl[k + 2] - a * pl[k + 1] - pl[k])
        if k >= 1:
            res.append(Fraction(gl[k + 2] - a * gl[k + 1] - gl[k]))
    return pl[1:], gl[2:], res


# proper length over graph length

class ScaledMat:
    """2x2 float matrix times ``e^{scale}``."""

    def __init__(self, m, scale=0.0):
        m = np.asarray(m, dtype=float)
        s = np.abs(m).max()
        self.m = m / s
        self.scale = scale + log(s)

    def __matmul__(self, other):
        return ScaledMat(self.m @ other.m, self.scale + other.scale)

    def __pow__(self, n):
        out = ScaledMat(np.eye(2))
        for _ in range(n):
            out = out @ self
        return out

    def log_abs_trace(self):
        t = abs(self.m[0, 0] + self.m[1, 1])
        if t == 0:
            return float("-inf")
        return self.scale + log(t)


def block_matrices(shear):
    r"""
    Matrices of the blocks ``a`` and ``b``; the matrix of a word is the
    product of its block matrices in the word's order.
    """
    g = torus_spine()
    out = {}
    for ch in "ab":
        path = torus_word_path(ch)
        P = np.eye(2)
        for h, t in zip(path.half_edges, path_turns(g, path)):
            P = turn_matrix(t) @ edge_matrix(shear[g.edge_of[h]]) @ P
        out[ch] = P
    return out


def cf_word_matrices(shear, cf):
    r"""
    Scaled matrices of ``L_1, ..., L_n`` built by the word recursion, never
    expanding the words.

    EXAMPLES::

        >>> from teichlab.classical import log_trace
        >>> s = {"X": 0.4, "Y": -0.3, "Z": 0.2}
        >>> M = cf_word_matrices(s, [1, 2, 1, 2])[-1]
        >>> w = cf_word([1, 2, 1, 2])[-1]
        >>> abs(M.log_abs_trace() - log_trace(torus_spine(), torus_word_path(w), s)) < 1e-10
        True
    """
    blk = {k: ScaledMat(v) for k, v in block_matrices(shear).items()}
    ab = blk["a"] @ blk["b"]
    a_, b_, c_, d_ = ab.m.ravel()
    ab_inv = ScaledMat(np.array([[d_, -b_], [-c_, a_]]) / (a_ * d_ - b_ * c_), -ab.scale)
    # every L_i ends in L_1 = a^{a_1} b, so tilde swaps a trailing "ab"
    swap = ab_inv @ (blk["b"] @ blk["a"])

    def tilde(M):
        return M @ swap

    mats = []
    for i, a in enumerate(cf, start=1):
        if i == 1:
            M = blk["a"] ** a @ blk["b"]
        elif i == 2:
            M = mats[-1] ** (a - 1) @ blk["a"] @ mats[-1]
        elif i % 2 == 0:
            M = mats[-1] ** (a - 1) @ tilde(mats[-2]) @ mats[-1]
        else:
            M = tilde(mats[-1]) ** (a - 1) @ mats[-2] @ mats[-1]
        mats.append(M)
    return mats


def _shear_dict(s):
    if isinstance(s, dict):
        return {k: float(v) for k, v in s.items()}
    return dict(zip(("X", "Y", "Z"), (float(v) for v in s)))


def converge_ratio(shear, cf, depth=None, weights=None):
    r"""
    Proper length over graph length along the convergent words of ``cf``.

    Returns rows ``(depth, m1, m2, trace_log, pl, gl, ratio)`` where ``m1``
    counts ``b`` blocks and ``m2`` counts ``a`` blocks.

    EXAMPLES::

        >>> rows = converge_ratio((0, 0, 0), [1] * 12)
        >>> abs(rows[-1][-1] - rows[-2][-1]) < 1e-3
        True
    """
    s = _shear_dict(shear)
    depth = len(cf) if depth is None else depth
    if depth > len(cf):
        raise ValueError("depth %d exceeds the %d partial quotients" % (depth, len(cf)))
    if depth > 30:
        raise ValueError("depth is capped at 30")
    w = weights or {"X": 1.0, "Y": 1.0, "Z": 1.0}
    if any(not v > 0 for v in w.values()):
        raise ValueError("weights must be positive")
    mats = cf_word_matrices(s, cf[:depth])
    # letter counts by the same recursion
    counts = []
    for i, a in enumerate(cf[:depth], start=1):
        if i == 1:
            c = (a, 1)
        elif i == 2:
            c = (a * counts[-1][0] + 1, a * counts[-1][1])
        else:
            c = (a * counts[-1][0] + counts[-2][0], a * counts[-1][1] + counts[-2][1])
        counts.append(c)
    rows = []
    for k, (M, (na, nb)) in enumerate(zip(mats, counts), start=1):
        lt = M.log_abs_trace()
        if lt < log(2) - 1e-12:
            raise EllipticError("|trace| < 2 at depth %d: degenerate shear" % k)
        pl = proper_length_from_log_trace(max(lt, log(2)))
        gl = na * (w["Z"] + w["Y"]) + nb * (w["Z"] + w["X"])
        rows.append((k, nb, na, lt, pl, gl, pl / gl))
    return rows


def cauchy_gaps(rows):
    r = [row[-1] for row in rows]
    return [abs(b - a) for a, b in zip(r, r[1:])]


def decreasing_after(gaps, burn_in):
    tail = gaps[burn_in:]
    return all(b < a for a, b in zip(tail, tail[1:]))


# letters

LETTERS = {
    "A": np.array([[1, 0], [-1, 0]]),
    "B": np.array([[0, 0], [0, 1]]),
    "D": np.array([[0, -1], [0, 1]]),
    "P": np.array([[0, 0], [-1, 0]]),
}

LETTER_TABLE = {
    "A": ("A", "0", "D", "0"),
    "B": ("P", "B", "B", "P"),
    "D": ("A", "D", "D", "A"),
    "P": ("P", "0", "B", "0"),
}


def alphabet_table():
    r"""
    Products of the letters, named where they are a letter or zero.

    EXAMPLES::

        >>> t = alphabet_table()
        >>> t["A"]["B"], t["B"]["A"]
        ('0', 'P')
    """
    out = {}
    for a, Ma in LETTERS.items():
        out[a] = {}
        for b, Mb in LETTERS.items():
            M = Ma @ Mb
            name = [n for n, N in LETTERS.items() if (N == M).all()]
            out[a][b] = name[0] if name else ("0" if not M.any() else repr(M.tolist()))
    return out


def cluster_product(z1, z2):
    r"""
    Product of a left cluster and a right cluster:
    ``L X_{-Z_m} ... L X_{-Z_1} R X_{-Z_{m+k}} ... R X_{-Z_{m+1}}``.
    """
    M = np.eye(2)
    for z in reversed(z1):
        M = M @ (turn_matrix(LEFT) @ edge_matrix(-z))
    for z in reversed(z2):
        M = M @ (turn_matrix(RIGHT) @ edge_matrix(-z))
    return M


def cluster_letters(z1, z2):
    r"""
    Letter expansion ``A s1+ s2+ + B (s1- s2- + S1 s2- + S1 S2) + D (s1+ s2-
    + s1+ S2) + P S1 s2+`` of a left-right cluster pair.
    """
    z1, z2 = np.asarray(z1, float), np.asarray(z2, float)
    m, k = len(z1), len(z2)
    s1p, s1m = np.exp(z1.sum() / 2), np.exp(-z1.sum() / 2)
    s2p, s2m = np.exp(z2.sum() / 2), np.exp(-z2.sum() / 2)
    S1 = sum(np.exp(z1[:q - 1].sum() / 2 - z1[q - 1:].sum() / 2) for q in range(2, m + 1))
    S2 = sum(np.exp(-z2[:q - 1].sum() / 2 + z2[q - 1:].sum() / 2) for q in range(2, k + 1))
    L = LETTERS
    return (L["A"] * s1p * s2p + L["B"] * (s1m * s2m + S1 * s2m + S1 * S2)
            + L["D"] * (s1p * s2m + s1p * S2) + L["P"] * S1 * s2p)


def cluster_decompose(z1, z2):
    r"""
    Relative residual of the letter expansion against the direct product,
    up to the projective sign.

    EXAMPLES::

        >>> bool(cluster_decompose([0.3, -0.2], [0.1, 0.5, -0.4]) < 1e-12)
        True
    """
    M = cluster_product(z1, z2)
    E = cluster_letters(z1, z2)
    scale = max(1.0, np.abs(M).max())
    return min(np.abs(M - E).max(), np.abs(M + E).max()) / scale


# long-word estimate

def pq_counts(cf, I, N):
    r"""
    ``(p_N, q_N)``: copies of ``L_I`` and ``L_{I-1}`` (or their tildes) in
    ``L_{I+N}``, from ``p_k = a_{I+k} p_{k-1} + p_{k-2}`` with ``p_0 = 1,
    p_{-1} = 0`` and ``q_0 = 0, q_{-1} = 1``.
    """
    p0, p1 = 0, 1
    q0, q1 = 1, 0
    for k in range(1, N + 1):
        a = cf[I + k - 1]
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
    return p1, q1


def long_word_defect(shear, cf, I, N):
    r"""
    ``|log tr L_{I+N} - p_N log tr L_I - q_N log tr L_{I-1}|`` and
    ``p_N + q_N``.
    """
    if I < 2 or I + N > len(cf):
        raise ValueError("need 2 <= I and I + N <= len(cf)")
    mats = cf_word_matrices(_shear_dict(shear), cf[:I + N])
    lt = [M.log_abs_trace() for M in mats]
    p, q = pq_counts(cf, I, N)
    return abs(lt[I + N - 1] - p * lt[I - 1] - q * lt[I - 2]), p + q


def long_word_estimate(shear, cf, I, N, calibrate=(1, 2, 3), margin=2.0):
    r"""
    Fit ``C`` as ``margin`` times the largest ``lhs/(p+q)`` over the
    calibration depths, then return ``(lhs, bound)`` at depth ``N`` with
    ``bound = C (p_N + q_N)``.

    EXAMPLES::

        >>> lhs, bound = long_word_estimate((0, 0, 0), [1] * 12, 5, 5)
        >>> lhs <= bound
        True
        >>> long_word_estimate((0, 0, 0), [1] * 12, 5, 0)[0]
        0.0
    """
    C = 0.0
    for n in calibrate:
        if I + n <= len(cf):
            lhs, pq = long_word_defect(shear, cf, I, n)
            C = max(C, lhs / pq)
    C *= margin
    lhs, pq = long_word_defect(shear, cf, I, N)
    return lhs, C * pq
