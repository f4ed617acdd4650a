r"""
Quantum geodesic functions.

The quantum trace of a closed path is the state sum of the classical path
product in which every pass along an edge carries an extra power of ``q``
fixed by how it sits among the other passes along the same edge. Passes are
ordered across each edge (left to right, seen along the edge's reference
direction) by comparing where the strands go next; a pass of exponent sign
``s`` picks up ``q^{s w/2}`` where ``w`` counts passes to its right minus
passes to its left. The monomials of the resulting commutative sum are read
as Weyl-ordered exponentials.

On the torus spine this produces Hermitian elements with unit coefficients
for the graph-simple curves, the displayed ``tilde G_Z`` for the flipped word,
the words ``a^m b`` and all the torus identities below exactly. For simple
curves of slope ``(2, 3)`` and beyond the state sum is still Hermitian but no
longer equals the quantum geodesic; those are produced by
:func:`torus_curve_trace` from the skein rule, which is what the twist
substitutions act on naturally.

EXAMPLES::

    >>> G_X, G_Y, G_Z, tG_Z = torus_generators()
    >>> q_trace(q_path_product(torus_spine(), torus_word_path("ab"))) == tG_Z
    True
    >>> G_X * G_Y == tG_Z.shift(-2) + G_Z.shift(2)
    True
"""
from fractions import Fraction

import numpy as np

from .fatgraph import (EdgePath, LEFT, RIGHT, cf_word, letter_counts, path_turns,
                       slope_word, tilde_word, torus_spine, torus_word_path)
from .qalg import (QCoeff, QElement, REDUCED_BRACKET, TORUS_BRACKET, from_reduced,
                   q_commutator, to_reduced)


class QMat2:
    """2x2 matrix of QElements over one bracket."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __mul__(self, other):
        A, B = self.rows, other.rows
        return QMat2([[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)])

    def trace(self):
        return self.rows[0][0] + self.rows[1][1]


def q_trace(m):
    return m.trace()


# strand order across an edge

def _forward_turns(g, hs, k, count):
    n = len(hs)
    out = []
    for m in range(count):
        arr = g.iota[hs[(k + m) % n]]
        out.append(RIGHT if g.sigma[arr] == hs[(k + m + 1) % n] else LEFT)
    return out


def _backward_turns(g, hs, k, count):
    # turns of the reversed path, starting from the reversed pass k
    n = len(hs)
    out = []
    for m in range(count):
        cur = hs[(k - m) % n]
        prev = hs[(k - m - 1) % n]
        out.append(RIGHT if g.sigma[cur] == g.iota[prev] else LEFT)
    return out


def strand_side(g, hs, i, j):
    r"""
    ``+1`` if pass ``i`` runs to the right of pass ``j`` on their common edge
    (seen along the edge's reference direction), ``-1`` if to the left.
    """
    n = len(hs)
    span = 2 * n
    ref_i, ref_j = g.is_reference(hs[i]), g.is_reference(hs[j])

    def ahead(k, ref):
        return _forward_turns(g, hs, k, span) if ref else _backward_turns(g, hs, k, span)

    def behind(k, ref):
        return _backward_turns(g, hs, k, span) if ref else _forward_turns(g, hs, k, span)

    for a, b in zip(ahead(i, ref_i), ahead(j, ref_j)):
        if a != b:
            return 1 if a == RIGHT else -1
    for a, b in zip(behind(i, ref_i), behind(j, ref_j)):
        if a != b:
            return -1 if a == RIGHT else 1
    # identical strands of a repeated word: order by position
    r = 1 if i > j else -1
    return r if ref_i else -r


def strand_weights(g, path):
    r"""
    For each pass, the number of passes on the same edge to its right minus
    the number to its left.
    """
    hs = path.half_edges
    n = len(hs)
    w = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and g.edge_of[hs[i]] == g.edge_of[hs[j]]:
                w[i] += 1 if strand_side(g, hs, i, j) < 0 else -1
    return w


def _zero_bracket(d):
    return tuple((0,) * d for _ in range(d))


def q_path_product(g, path, B=None, labels=None):
    r"""
    Strand-weighted path product with Weyl-ordered entries.

    Equivalent to summing the states of the classical product with each
    pass multiplied by ``q^{s w/2}`` (``s`` its exponent sign, ``w`` its
    strand weight); entries are returned over the bracket ``B``.

    EXAMPLES::

        >>> G = torus_spine()
        >>> G_X = torus_generators()[0]
        >>> q_trace(q_path_product(G, torus_word_path("aa"))) == G_X * G_X - 2
        True
    """
    labels = list(labels or g.edge_labels())
    B = B if B is not None else (TORUS_BRACKET if len(labels) == 3 else None)
    if B is None:
        from .classical import wp_matrix
        B = wp_matrix(g, labels)
    dim = len(labels)
    Z0 = _zero_bracket(dim)
    idx = {lab: i for i, lab in enumerate(labels)}
    weights = strand_weights(g, path)
    turns = path_turns(g, path)
    one = QElement.one(Z0)
    zero = QElement.zero(Z0)
    P = QMat2([[one, zero], [zero, one]])
    for h, t, w in zip(path.half_edges, turns, weights):
        e = [0] * dim
        e[idx[g.edge_of[h]]] = 1
        up = QElement.monomial(e, Z0, QCoeff({2 * w: -1}))
        dn = QElement.monomial([-x for x in e], Z0, QCoeff({-2 * w: 1}))
        X = QMat2([[zero, up], [dn, zero]])
        T = _turn(t, Z0)
        P = (T * X) * P
    return QMat2([[QElement(P[i, j].terms, B) for j in range(2)] for i in range(2)])


def _turn(t, B, k4=0):
    T = ((1, 1), (-1, 0)) if t == RIGHT else ((0, 1), (-1, -1))
    return QMat2([[QElement.one(B) * QCoeff({k4: T[i][j]}) if T[i][j] else QElement.zero(B)
                   for j in range(2)] for i in range(2)])


def quantum_geodesic(g, path, B=None, labels=None):
    r"""Quantum trace of a closed path, sign-normalized to be positive at ``q = 1``."""
    tr = q_trace(q_path_product(g, path, B, labels))
    if tr.terms and tr.at_q1().evaluate([0] * tr.dim) < 0:
        tr = -tr
    return tr


def operator_path_product(g, path, B=None, labels=None, flavor="tilde"):
    r"""
    Literal operator product ``X_{Z_n} T ... X_{Z_1} T`` with quantum edge
    matrices and turn factors ``q^{-1/4} L``, ``q^{1/4} R`` (``flavor=
    "tilde"``) or their squares (``"double"``). Kept for comparison: its
    trace is in general not Hermitian.
    """
    k = {"tilde": 1, "double": 2, "plain": 0}[flavor]
    labels = list(labels or g.edge_labels())
    B = B if B is not None else TORUS_BRACKET
    dim = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    one, zero = QElement.one(B), QElement.zero(B)
    P = QMat2([[one, zero], [zero, one]])
    for h, t in zip(path.half_edges, path_turns(g, path)):
        e = [0] * dim
        e[idx[g.edge_of[h]]] = 1
        X = QMat2([[zero, QElement.monomial(e, B, -1)],
                   [QElement.monomial([-x for x in e], B), zero]])
        T = _turn(t, B, k if t == RIGHT else -k)
        P = (T * X) * P
    return P


# torus

TORUS_Z_PATH = EdgePath(("x0", "y1"))


def _w(B, *pairs):
    return QElement({tuple(u): 1 for u in pairs}, B)


def torus_generators():
    r"""
    ``(G_X, G_Y, G_Z, tilde G_Z)`` on the torus, exponents in half-units of
    ``(X, Y, Z)``.

    EXAMPLES::

        >>> G_X, G_Y, G_Z, tG_Z = torus_generators()
        >>> G_X
        [0,-1,-1] + [0,-1,1] + [0,1,1]
        >>> tG_Z.coefficient((1, -1, 0))
        q^(-1) + q
    """
    B = TORUS_BRACKET
    G_X = _w(B, (0, -1, -1), (0, -1, 1), (0, 1, 1))
    G_Y = _w(B, (-1, 0, -1), (1, 0, -1), (1, 0, 1))
    G_Z = _w(B, (-1, -1, 0), (-1, 1, 0), (1, 1, 0))
    tG_Z = _w(B, (-1, -1, -2), (1, -1, -2), (1, -1, 2), (1, 1, 2))
    tG_Z = tG_Z + QElement.monomial((1, -1, 0), B, QCoeff({4: 1, -4: 1}))
    return G_X, G_Y, G_Z, tG_Z


def xi():
    """``q - q^{-1}``."""
    return QCoeff({4: 1, -4: -1})


def markov_element():
    r"""
    ``G_X G_Y G_Z - q^{1/2}(G_X^2 + q^{-2} G_Y^2 + G_Z^2)``.

    EXAMPLES::

        >>> M = markov_element()
        >>> G_X = torus_generators()[0]
        >>> (M * G_X - G_X * M).is_zero()
        True
    """
    G_X, G_Y, G_Z, _ = torus_generators()
    return G_X * G_Y * G_Z - (G_X * G_X + (G_Y * G_Y).shift(-8) + G_Z * G_Z).shift(2)


def chebyshev_T(n, x):
    r"""``2 T_n(x/2)`` as a polynomial in the element ``x``."""
    one = QElement.one(x.B)
    if n == 0:
        return one * 2
    a, b = one * 2, x
    for _ in range(n - 1):
        a, b = b, x * b - a
    return b


def chebyshev_U(n, x):
    r"""``U_n(x/2)`` as a polynomial in the element ``x``; ``U_{-1} = 0``."""
    one = QElement.one(x.B)
    if n < 0:
        return QElement.zero(x.B)
    a, b = QElement.zero(x.B), one
    for _ in range(n):
        a, b = b, x * b - a
    return b


def torus_word_trace(word):
    """Quantum trace of a torus block word (matrix-product order)."""
    return quantum_geodesic(torus_spine(), torus_word_path(word))


def torus_identities():
    r"""
    Exact residuals of the torus algebra identities, keyed by name; every
    value is a QElement that must be zero.
    """
    G_X, G_Y, G_Z, tG_Z = torus_generators()
    G = torus_spine()
    M = markov_element()
    out = {
        "so3_XY": q_commutator(G_X, G_Y) - G_Z * xi(),
        "so3_YZ": q_commutator(G_Y, G_Z) - G_X * xi(),
        "so3_ZX": q_commutator(G_Z, G_X) - G_Y * xi(),
        "product_rule": G_X * G_Y - tG_Z.shift(-2) - G_Z.shift(2),
        "product_rule_reversed": G_Y * G_X - tG_Z.shift(2) - G_Z.shift(-2),
        "markov_central_X": M * G_X - G_X * M,
        "markov_central_Y": M * G_Y - G_Y * M,
        "markov_central_Z": M * G_Z - G_Z * M,
        "trace_G_X": torus_word_trace("a") - G_X,
        "trace_G_Y": torus_word_trace("b") - G_Y,
        "trace_G_Z": quantum_geodesic(G, TORUS_Z_PATH) - G_Z,
        "trace_flipped_G_Z": torus_word_trace("ab") - tG_Z,
        "chebyshev_2": torus_word_trace("aa") - chebyshev_T(2, G_X),
        "chebyshev_3": torus_word_trace("aaa") - chebyshev_T(3, G_X),
        "chebyshev_2_Y": torus_word_trace("bb") - chebyshev_T(2, G_Y),
    }
    return out


# Dehn twist endomorphisms in the reduced lattice (U, V, C)

class DomainError(ValueError):
    pass


def _red(*terms):
    return QElement({tuple(u): c for u, c in terms}, REDUCED_BRACKET)


def dehn_generator_images(gen, sign=-1):
    r"""
    Images of ``U = e^{X/2}`` and ``V = e^{-Y/2}`` (or of their inverses for
    ``sign=+1``) under the twist substitution. ``C = e^{(X+Y+Z)/2}`` is
    fixed. With ``C = 1``, ``gen="X", sign=-1`` is ``U -> U + V U^{-1} V``,
    ``V -> q^{1/2} U^{-1} V``.

    Returns ``(image of U^s, image of V^s)`` with ``s = -sign``.
    """
    if (gen, sign) == ("X", -1):
        return (_red(((1, 0, 0), 1), ((-1, 2, 2), 1)), _red(((-1, 1, 1), 1)))
    if (gen, sign) == ("Y", -1):
        return (_red(((1, -1, -1), 1)), _red(((0, 1, 0), 1), ((2, -1, -2), 1)))
    if (gen, sign) == ("X", 1):
        return (_red(((-1, 0, 0), 1), ((-1, 2, 0), 1)),
                _red(((-1, 1, 1), 1), ((-1, -1, 1), 1)))
    if (gen, sign) == ("Y", 1):
        return (_red(((-1, -1, -1), 1), ((1, -1, -1), 1)),
                _red(((0, -1, 0), 1), ((2, -1, 0), 1)))
    raise ValueError("gen must be 'X' or 'Y' and sign must be +1 or -1")


def dehn_endomorphism(gen, sign, a):
    r"""
    Apply the twist substitution to ``a`` multiplicatively.

    ``a`` may be a torus element or a reduced-lattice element; the result
    is returned in the same form. A Weyl monomial ``[U^i V^j] C^k`` equals
    ``q^{-ij/2} U^i V^j C^k``; negative powers of a generator whose image is
    not a monomial leave the Laurent ring and raise :class:`DomainError`.

    EXAMPLES::

        >>> G_X, G_Y, G_Z, tG_Z = torus_generators()
        >>> dehn_endomorphism("X", -1, G_Y) == tG_Z
        True
        >>> dehn_endomorphism("Y", -1, G_X) == tG_Z
        True
    """
    reduced = a.B == REDUCED_BRACKET
    r = a if reduced else to_reduced(a)
    imU, imV = dehn_generator_images(gen, sign)
    s = -sign  # images are of U^s, V^s
    imU_mono = len(imU.terms) == 1
    imV_mono = len(imV.terms) == 1
    B = REDUCED_BRACKET
    one = QElement.one(B)
    out = QElement.zero(B)
    for (i, j, k), c in r.terms.items():
        pi, pj = i * s, j * s  # powers of the images
        if pi < 0 and not imU_mono or pj < 0 and not imV_mono:
            raise DomainError("monomial [U^%d V^%d] leaves the Laurent ring under D_%s^%+d"
                              % (i, j, gen, sign))
        fu = imU ** pi if pi >= 0 else imU.inverse_monomial() ** (-pi)
        fv = imV ** pj if pj >= 0 else imV.inverse_monomial() ** (-pj)
        cm = QElement.monomial((0, 0, k), B)
        # [U^i V^j] = q^{-ij/2} U^i V^j
        out = out + (fu * fv * cm).shift(-2 * i * j) * c
    _ = one
    return out if reduced else from_reduced(out)


def dehn_image_equals(gen, sign, a, b):
    r"""
    Whether the twist substitution takes ``a`` to ``b`` in the fraction
    field.

    Generators whose image is a binomial may occur in ``a`` with powers of
    the wrong sign; those are cleared by a right monomial factor ``g`` and
    the check becomes ``T(a g) = b T(g)``.

    EXAMPLES::

        >>> G_X, G_Y, G_Z, tG_Z = torus_generators()
        >>> dehn_image_equals("X", -1, G_Y, tG_Z)
        True
    """
    r = a if a.B == REDUCED_BRACKET else to_reduced(a)
    rb = b if b.B == REDUCED_BRACKET else to_reduced(b)
    imU, imV = dehn_generator_images(gen, sign)
    s = -sign
    e = [0, 0, 0]
    for slot, im in enumerate((imU, imV)):
        if len(im.terms) > 1 and r.terms:
            e[slot] = s * max(0, -min(u[slot] * s for u in r.terms))
    g = QElement.monomial(e, REDUCED_BRACKET)
    return dehn_endomorphism(gen, sign, r * g) == rb * dehn_endomorphism(gen, sign, g)


def dehn_fixes(gen, sign, a):
    r"""
    Whether the twist substitution fixes ``a``.

    EXAMPLES::

        >>> G_X, G_Y, G_Z, tG_Z = torus_generators()
        >>> dehn_fixes("Y", -1, G_Y), dehn_fixes("X", -1, G_X)
        (True, True)
        >>> dehn_fixes("X", -1, G_Y)
        False
    """
    return dehn_image_equals(gen, sign, a, a)


def _farey_parents(m1, m2):
    for a in range(m1 + 1):
        for b in range(m2 + 1):
            c, d = m1 - a, m2 - b
            if (a, b) != (0, 0) and (c, d) != (0, 0) and a * d - b * c == 1:
                return (a, b), (c, d)
    raise ValueError("(%d, %d) is not a primitive slope" % (m1, m2))


_CURVE_CACHE = {}


def torus_curve_trace(m1, m2):
    r"""
    Quantum geodesic of the simple torus curve with ``m1`` passes of the
    ``b`` block and ``m2`` of the ``a`` block, built from ``G_X``, ``G_Y``
    and ``tilde G_Z`` by the skein rule along the Farey tree: for Farey
    neighbours ``A = (a, b)``, ``C = (c, d)`` with ``ad - bc = 1``,

    .. MATH::

        G_A G_C = q^{1/2} G_{A+C} + q^{-1/2} G_{|A-C|}.

    EXAMPLES::

        >>> G_X, G_Y, G_Z, tG_Z = torus_generators()
        >>> torus_curve_trace(1, 1) == tG_Z
        True
        >>> torus_curve_trace(1, 2) == torus_word_trace("aab")
        True
        >>> torus_curve_trace(2, 3).is_hermitian()
        True
        >>> torus_curve_trace(2, 3) == torus_word_trace(slope_word(2, 3))
        False
    """
    m1, m2 = int(m1), int(m2)
    if m1 < 0 or m2 < 0 or (m1, m2) == (0, 0):
        raise ValueError("counts must be nonnegative and not both zero")
    from math import gcd
    if gcd(m1, m2) != 1:
        raise ValueError("(%d, %d) is not a primitive slope" % (m1, m2))
    if not _CURVE_CACHE:
        G_X, G_Y, _, tG_Z = torus_generators()
        _CURVE_CACHE.update({(0, 1): G_X, (1, 0): G_Y, (1, 1): tG_Z})
    if (m1, m2) not in _CURVE_CACHE:
        A, C = _farey_parents(m1, m2)
        D = torus_curve_trace(abs(A[0] - C[0]), abs(A[1] - C[1]))
        _CURVE_CACHE[m1, m2] = (torus_curve_trace(*A) * torus_curve_trace(*C)
                                - D.shift(-2)).shift(-2)
    return _CURVE_CACHE[m1, m2]


def naturality_check(m1, m2):
    r"""
    Follow the unzipping of ``(m1, m2)`` and check at every step that the
    twist substitution carries the quantum trace of the smaller curve to
    that of the larger one, exactly.

    Traces are :func:`torus_curve_trace`, so the check compares the skein
    rule with the twist substitution. Returns ``(ok, steps)`` where
    ``steps`` lists ``(twist, before, after, equal)``.

    EXAMPLES::

        >>> naturality_check(1, 1)[0]
        True
        >>> naturality_check(2, 3)[0]
        True
    """
    from .thurston import unzip_steps
    steps = []
    ok = True
    for twist, before, after in unzip_steps(m1, m2):
        big = torus_curve_trace(*before)
        small = torus_curve_trace(*after)
        eq = dehn_image_equals(twist, -1, small, big)
        ok &= eq
        steps.append((twist, before, after, eq))
    return ok, steps


# continued-fraction words

def cf_word_operators(cf, depth=None):
    r"""
    Quantum operators of the words ``L_i`` and ``tilde L_i``.

    Returns a list of dicts with the words, letter counts, both
    strand-weighted products and whether their traces agree.

    EXAMPLES::

        >>> [d["traces_equal"] for d in cf_word_operators([1, 2])]
        [True, True]
    """
    if any(int(a) < 1 for a in cf):
        raise ValueError("partial quotients must be positive")
    depth = len(cf) if depth is None else depth
    G = torus_spine()
    out = []
    for w in cf_word(list(cf)[:depth]):
        tw = tilde_word(w)
        P = q_path_product(G, torus_word_path(w))
        Pt = q_path_product(G, torus_word_path(tw))
        out.append({"word": w, "tilde_word": tw, "counts": letter_counts(w),
                    "L": P, "tilde_L": Pt,
                    "traces_equal": _norm_sign(P.trace()) == _norm_sign(Pt.trace())})
    return out


def _norm_sign(tr):
    if tr.terms and tr.at_q1().evaluate([0] * tr.dim) < 0:
        return -tr
    return tr


def I_m(m):
    r"""``I_m``: quantum trace of ``a^m b``; ``I_0 = G_Y`` and ``I_{-1} = G_Z``."""
    if m == -1:
        return torus_generators()[2]
    return torus_word_trace("a" * m + "b")


def I_m_sequence(m_max=6):
    r"""
    ``I_{-1}, ..., I_{m_max}`` with exact residuals of both recursions.

    Returns ``(I, residuals)`` where ``I[m]`` is ``I_m`` (``I[-1]`` included)
    and ``residuals`` maps ``("right", m)`` / ``("left", m)`` to the residual
    of ``I_{m-1} G_X = q^{1/2} I_m + q^{-1/2} I_{m-2}`` and of
    ``G_X I_{m-1} = q^{-1/2} I_m + q^{1/2} I_{m-2}``.
    """
    G_X = torus_generators()[0]
    I = {m: I_m(m) for m in range(-1, m_max + 1)}
    res = {}
    for m in range(1, m_max + 1):
        res[("right", m)] = I[m - 1] * G_X - I[m].shift(2) - I[m - 2].shift(-2)
        res[("left", m)] = G_X * I[m - 1] - I[m].shift(-2) - I[m - 2].shift(2)
    I[-2] = None
    del I[-2]
    return I, res


def I_m_closed_forms(m, printed=False):
    r"""
    Residuals of the two closed forms for ``I_m``.

    With ``printed=False`` the forms use ``U_m(G_X/2)``::

        I_m = q^{-m/2} I_0 U_m - q^{-(m+1)/2} I_{-1} U_{m-1}
        I_m = q^{m/2} U_m I_0 - q^{(m+1)/2} U_{m-1} I_{-1}

    With ``printed=True`` they use ``2 T_m(G_X/2) = e^{m l/2} + e^{-m l/2}``
    in place of ``U_m``; those forms are not identities (see tests).
    """
    G_X = torus_generators()[0]
    I0, Im1 = I_m(0), I_m(-1)
    P = (lambda n: chebyshev_T(n, G_X)) if printed else (lambda n: chebyshev_U(n, G_X))
    Im = I_m(m)
    r1 = Im - (I0 * P(m)).shift(-2 * m) + (Im1 * P(m - 1)).shift(-2 * m - 2)
    r2 = Im - (P(m) * I0).shift(2 * m) + (P(m - 1) * Im1).shift(2 * m + 2)
    return r1, r2


def positivity_certificate():
    r"""
    Twice the difference ``(1/2)(q tG_Z G_Z + q^{-1} G_Z tG_Z) - G_Y^2``
    together with the residual against
    ``(q^2 + q^{-2}) G_X^2 + (q + q^{-1})(e^{X+Y+Z} + e^{-X-Y-Z} - q - q^{-1})``.

    EXAMPLES::

        >>> diff2, residual = positivity_certificate()
        >>> residual.is_zero()
        True
    """
    G_X, G_Y, G_Z, tG_Z = torus_generators()
    B = TORUS_BRACKET
    diff2 = (tG_Z * G_Z).shift(4) + (G_Z * tG_Z).shift(-4) - G_Y * G_Y * 2
    c = QCoeff({4: 1, -4: 1})
    casimir = QElement({(2, 2, 2): 1, (-2, -2, -2): 1}, B) - QElement.one(B) * c
    target = G_X * G_X * QCoeff({8: 1, -8: 1}) + casimir * c
    return diff2, diff2 - target


# flip identities in the commuting limit

def _pm_residual(M, N):
    return float(min(np.abs(M - N).max(), np.abs(M + N).max()))


def flip_identities_classical_check(case, sample, coincide=None):
    r"""
    Residual of the flip identity for curve ``case`` (1, 2 or 3) at ``q = 1``.

    ``sample`` maps ``A, B, C, D, Z`` to reals. The identities are::

        1:  X_{B'} L X_{-Z} L X_{A'} = X_B L X_A
        2:  X_{C'} R X_{-Z} L X_{A'} = X_C L X_Z R X_A
        3:  X_{C'} R X_{-Z} R X_{D'} = X_C R X_D

    with ``A' = A + phi(Z)``, ``B' = B - phi(-Z)``, ``C' = C + phi(Z)``,
    ``D' = D - phi(-Z)``, up to sign. ``coincide`` selects a coincident
    pair: ``"AB"`` for case 1 and ``"CD"`` for case 3 close the curve into
    a loop around the vertex, so the two loop traces are compared; ``"AC"``
    for case 2 splits the shared edge into halves ``X_{A/2} J X_{A/2}``.

    EXAMPLES::

        >>> s = dict(A=0.3, B=-1.1, C=0.7, D=0.2, Z=-0.4)
        >>> all(flip_identities_classical_check(k, s) < 1e-12 for k in (1, 2, 3))
        True
        >>> flip_identities_classical_check(2, s, "AC") < 1e-12
        True
    """
    from .classical import edge_matrix as X, phi_classical as phi, turn_left, turn_right
    L, R = turn_left(), turn_right()
    A, B, C, D, Z = (float(sample[k]) for k in "ABCDZ")
    if case not in (1, 2, 3):
        raise ValueError("case must be 1, 2 or 3")
    pairs = {1: (None, "AB"), 2: (None, "AC"), 3: (None, "CD")}
    if coincide not in pairs[case]:
        raise ValueError("coincidence %r does not apply to case %d" % (coincide, case))
    if coincide is None:
        Ap, Bp, Cp, Dp = A + phi(Z), B - phi(-Z), C + phi(Z), D - phi(-Z)
        if case == 1:
            return _pm_residual(X(Bp) @ L @ X(-Z) @ L @ X(Ap), X(B) @ L @ X(A))
        if case == 2:
            return _pm_residual(X(Cp) @ R @ X(-Z) @ L @ X(Ap), X(C) @ L @ X(Z) @ R @ X(A))
        return _pm_residual(X(Cp) @ R @ X(-Z) @ R @ X(Dp), X(C) @ R @ X(D))
    if coincide == "AB":
        Ap = A + phi(Z) - phi(-Z)
        return abs(abs(np.trace(X(Ap) @ L @ X(-Z) @ L)) - abs(np.trace(X(A) @ L)))
    if coincide == "CD":
        Cp = C + phi(Z) - phi(-Z)
        return abs(abs(np.trace(X(Cp) @ R @ X(-Z) @ R)) - abs(np.trace(X(C) @ R)))
    J = np.array([[0.0, 1.0], [-1.0, 0.0]])
    Ap = A + 2 * phi(Z)
    split = _pm_residual(X(A / 2) @ J @ X(A / 2), X(A))
    return max(split, _pm_residual(X(Ap / 2) @ R @ X(-Z) @ L @ X(Ap / 2),
                                   X(A / 2) @ L @ X(Z) @ R @ X(A / 2)))
