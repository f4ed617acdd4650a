r"""
Classical shear coordinates on a cubic fatgraph.

Edge and turn matrices, path products and geodesic traces, the flip of
shear coordinates, the Weil-Petersson bracket and its Casimirs, and exact
Laurent polynomials in the half-exponentials ``e^{Z_alpha/2}``.

EXAMPLES::

    >>> from teichlab.fatgraph import torus_spine, slope_path
    >>> G = torus_spine()
    >>> geodesic_trace(G, slope_path(0, 1), {"X": 0.0, "Y": 0.0, "Z": 0.0})
    3.0
"""
from fractions import Fraction
from math import acosh, exp, fsum, log, log1p, sqrt

import numpy as np
import sympy

from .fatgraph import LEFT, RIGHT, path_turns

R_TURN = np.array([[1.0, 1.0], [-1.0, 0.0]])
L_TURN = R_TURN @ R_TURN
SPLIT_TURN = np.array([[0.0, 1.0], [-1.0, 0.0]])


class EllipticError(ValueError):
    pass


def edge_matrix(z):
    r"""
    The edge matrix ``[[0, -e^{z/2}], [e^{-z/2}, 0]]``.

    EXAMPLES::

        >>> edge_matrix(0.0).tolist()
        [[0.0, -1.0], [1.0, 0.0]]
    """
    return np.array([[0.0, -exp(z / 2)], [exp(-z / 2), 0.0]])


def turn_right():
    return R_TURN.copy()


def turn_left():
    r"""
    EXAMPLES::

        >>> bool((turn_left() == turn_right() @ turn_right()).all())
        True
    """
    return L_TURN.copy()


def turn_matrix(t):
    return R_TURN if t == RIGHT else L_TURN


def path_factors(g, path, shear):
    """The matrices ``T_i X_{Z_i}`` of each step, first step first."""
    turns = path_turns(g, path)
    return [turn_matrix(t) @ edge_matrix(shear[g.edge_of[h]])
            for h, t in zip(path.half_edges, turns)]


def path_matrix(g, path, shear):
    r"""
    Ordered product ``M_n ... M_1`` with ``M_i = T_i X_{Z_i}``, where
    ``T_i`` is the turn taken after step ``i``.

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine, face_path
        >>> G = torus_spine()
        >>> P = path_matrix(G, face_path(G, G.faces()[0]), {"X": .1, "Y": .2, "Z": .3})
        >>> bool(abs(P[1, 0]) < 1e-15)
        True
    """
    P = np.eye(2)
    for M in path_factors(g, path, shear):
        P = M @ P
    return P


def geodesic_trace(g, path, shear):
    """``|tr P|`` of the path product."""
    return float(abs(np.trace(path_matrix(g, path, shear))))


def log_trace(g, path, shear):
    r"""
    ``log |tr P|`` with the running product rescaled to avoid overflow.
    """
    P = np.eye(2)
    scale = 0.0
    for M in path_factors(g, path, shear):
        P = M @ P
        s = np.abs(P).max()
        P /= s
        scale += log(s)
    return scale + log(abs(np.trace(P)))


def proper_length_classical(trace):
    r"""
    ``arccosh(|tr|/2)``, half the hyperbolic length.

    EXAMPLES::

        >>> proper_length_classical(2.0)
        0.0
        >>> round(proper_length_classical(3.0), 6)
        0.962424
        >>> proper_length_classical(1.0)
        Traceback (most recent call last):
        ...
        teichlab.classical.EllipticError: |trace| = 1.0 < 2: elliptic element
    """
    t = abs(trace)
    if t < 2:
        if t > 2 - 1e-12:
            return 0.0
        raise EllipticError("|trace| = %r < 2: elliptic element" % (trace,))
    return acosh(t / 2)


def proper_length_from_log_trace(lt):
    r"""
    ``arccosh(T/2)`` for ``T = e^{lt}`` computed as
    ``log((T + sqrt(T^2 - 4)) / 2)`` without forming ``T`` when it is large.
    """
    if lt > 20:
        # log(T/2) + log(1 + sqrt(1 - 4/T^2))
        return lt - log(2) + log1p(sqrt(1 - 4 * exp(-2 * lt)))
    return proper_length_classical(exp(lt))


def boundary_length(shear, face):
    r"""
    ``|sum Z_i|`` over a face, with multiplicity; zero means a puncture.

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine
        >>> f = torus_spine().faces()[0]
        >>> boundary_length({"X": 1, "Y": 0, "Z": 0}, f)
        2
    """
    return abs(sum(shear[lab] for lab in face.edges))


def is_puncture(shear, face, tol=0.0):
    return boundary_length(shear, face) <= tol


def phi_classical(z):
    r"""
    ``log(1 + e^z)``, evaluated stably for large ``|z|``.

    EXAMPLES::

        >>> round(phi_classical(0.0), 12) == round(log(2), 12)
        True
        >>> phi_classical(800.0)
        800.0
    """
    if z > 30:
        return z + log1p(exp(-z))
    return log1p(exp(z))


# flips

FLIP_SIGNS = {"A": 1, "B": -1, "C": 1, "D": -1}


def flip_increments(g, label, z, phi=phi_classical, neg=None):
    r"""
    Increment of each neighbouring edge under the flip of ``label``.

    Generic slots get ``A, C: +phi(Z)`` and ``B, D: -phi(-Z)``. Slots that
    share an edge take the coincidence rules: ``A = C`` gives ``2 phi(Z)``,
    ``B = D`` gives ``-2 phi(-Z)``, and ``A = B``, ``C = D``, ``A = D``,
    ``B = C`` give ``Z``.
    """
    neg = neg if neg is not None else (lambda x: -x)
    nb = g.flip_neighbors(label)
    groups = {}
    for slot in "ABCD":
        groups.setdefault(g.edge_of[nb[slot]], []).append(slot)
    p_plus = phi(z)
    p_minus = phi(neg(z))
    out = {}
    for lab, slots in groups.items():
        key = "".join(sorted(slots))
        if key in ("A", "C"):
            out[lab] = p_plus
        elif key in ("B", "D"):
            out[lab] = neg(p_minus)
        elif key == "AC":
            out[lab] = p_plus + p_plus
        elif key == "BD":
            out[lab] = neg(p_minus + p_minus)
        elif key in ("AB", "CD", "AD", "BC"):
            out[lab] = z
        else:
            raise AssertionError("three slots on one edge: %r" % (key,))
    return out


def flip_shear(g, shear, label, phi=phi_classical):
    r"""
    Whitehead move on ``label`` together with its action on shears.

    ``phi`` may be replaced by any function whose values support ``+`` and
    unary ``-``, e.g. :class:`PhiForm` for exact bookkeeping.

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine
        >>> G = torus_spine()
        >>> G2, s2 = flip_shear(G, {"X": 0.0, "Y": 0.0, "Z": 0.0}, "Z")
        >>> [round(s2[k], 6) for k in "XYZ"]
        [1.386294, -1.386294, -0.0]
    """
    z = shear[label]
    inc = flip_increments(g, label, z, phi, neg=lambda x: -x)
    new = dict(shear)
    for lab, d in inc.items():
        new[lab] = new[lab] + d
    new[label] = -z
    return g.whitehead(label), new


def flip_increments_by_slot(g, label, z, phi=phi_classical):
    """Per-slot sum of the generic increments; agrees with the branches."""
    nb = g.flip_neighbors(label)
    out = {}
    for slot in "ABCD":
        lab = g.edge_of[nb[slot]]
        d = phi(z) if FLIP_SIGNS[slot] > 0 else -phi(-z)
        out[lab] = out.get(lab, 0) + d
    return out


class PhiForm:
    r"""
    Exact linear combination of formal symbols and formal ``phi`` values.

    ``phi(-x)`` is rewritten as ``phi(x) - x``, so face sums of flipped
    coordinates can be compared exactly.

    EXAMPLES::

        >>> x = PhiForm.symbol("x")
        >>> PhiForm.phi(x) - PhiForm.phi(-x) == x
        True
    """

    def __init__(self, terms=None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def symbol(cls, name):
        return cls({("s", name): 1})

    @classmethod
    def const(cls, c):
        return cls({("c",): c})

    def _key(self):
        return tuple(sorted((repr(k), v) for k, v in self.terms.items()))

    @classmethod
    def phi(cls, x):
        x = x if isinstance(x, PhiForm) else cls.const(x)
        if not x.terms:
            return cls({("phi0",): 1})
        lead = min(x.terms, key=repr)
        if x.terms[lead] < 0:
            y = -x
            return cls({("phi", y._key()): 1}) - y
        return cls({("phi", x._key()): 1})

    def __add__(self, other):
        if not isinstance(other, PhiForm):
            other = PhiForm.const(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return PhiForm(t)

    __radd__ = __add__

    def __neg__(self):
        return PhiForm({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __eq__(self, other):
        if not isinstance(other, PhiForm):
            other = PhiForm.const(other)
        return (self - other).terms == {}

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return "PhiForm(%r)" % (self.terms,)


# Weil-Petersson bracket

class WPMatrix:
    r"""
    Antisymmetric integer matrix of brackets ``{Z_alpha, Z_beta}``.

    ``labels`` fixes the row order; ``B`` is a numpy integer array.
    """

    def __init__(self, labels, B):
        self.labels = list(labels)
        self.B = np.asarray(B, dtype=np.int64)
        self.index = {lab: i for i, lab in enumerate(self.labels)}

    def __getitem__(self, pair):
        a, b = pair
        return int(self.B[self.index[a], self.index[b]])

    def __eq__(self, other):
        return self.labels == other.labels and (self.B == other.B).all()

    def __repr__(self):
        return "WPMatrix(%r,\n%r)" % (self.labels, self.B.tolist())


def wp_matrix(g, labels=None):
    r"""
    Weil-Petersson bracket of the edge coordinates.

    Each vertex with counterclockwise half-edges ``(h_1, h_2, h_3)`` adds
    ``+1`` to ``{Z(h_{i+1}), Z(h_i)}`` for each cyclic ``i``.

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine
        >>> wp_matrix(torus_spine()).B.tolist()
        [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]
    """
    labels = list(labels or g.edge_labels())
    idx = {lab: i for i, lab in enumerate(labels)}
    B = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for v in g.vertices:
        for i in range(3):
            a = idx[g.edge_of[v[(i + 1) % 3]]]
            b = idx[g.edge_of[v[i]]]
            B[a, b] += 1
            B[b, a] -= 1
    return WPMatrix(labels, B)


def casimir_kernel(B, g=None):
    r"""
    Rank and rational kernel basis of the bracket matrix.

    When ``g`` is given, also checks that the face vectors lie in the kernel
    and span it; the result then carries ``faces_span_kernel``.

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine
        >>> G = torus_spine()
        >>> r = casimir_kernel(wp_matrix(G), G)
        >>> r["rank"], r["kernel"], r["faces_span_kernel"]
        (2, [[1, 1, 1]], True)
    """
    M = sympy.Matrix(B.B.tolist())
    rank = M.rank()
    kernel = []
    for v in M.nullspace():
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
        w = [int(x * den) for x in v]
        kernel.append(w)
    out = {"rank": int(rank), "kernel": kernel}
    if g is not None:
        F = sympy.Matrix(g.face_vectors())
        in_kernel = all(x == 0 for x in (M * F.T))
        spans = F.rank() == len(kernel) and sympy.Matrix.vstack(
            F, sympy.Matrix(kernel)).rank() == len(kernel) if kernel else F.rank() == 0
        out["faces_span_kernel"] = bool(in_kernel and spans)
    return out


# Laurent polynomials in e^{Z/2}

class LaurentExpr:
    r"""
    Commutative Laurent polynomial: ``{u: c}`` stands for ``sum c e^{u.Z/2}``.

    Exponent vectors are integer tuples (half-units); coefficients are
    ``Fraction``.

    EXAMPLES::

        >>> x = LaurentExpr.monomial((1, 0, 0))
        >>> y = LaurentExpr.monomial((0, 1, 0))
        >>> (x + y) * (x - y) == x * x - y * y
        True
    """

    def __init__(self, terms=None, dim=None):
        terms = dict(terms or {})
        self.terms = {tuple(u): Fraction(c) for u, c in terms.items() if c}
        if dim is None:
            dim = len(next(iter(terms))) if terms else 0
        self.dim = dim

    @classmethod
    def monomial(cls, u, c=1):
        return cls({tuple(u): c}, len(u))

    @classmethod
    def constant(cls, c, dim):
        return cls({(0,) * dim: c}, dim)

    def _coerce(self, other):
        if isinstance(other, LaurentExpr):
            return other
        return LaurentExpr.constant(other, self.dim)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for u, c in other.terms.items():
            t[u] = t.get(u, 0) + c
        return LaurentExpr(t, max(self.dim, other.dim))

    __radd__ = __add__

    def __neg__(self):
        return LaurentExpr({u: -c for u, c in self.terms.items()}, self.dim)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        t = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                t[w] = t.get(w, 0) + c * d
        return LaurentExpr(t, max(self.dim, other.dim))

    __rmul__ = __mul__

    def __pow__(self, n):
        out = LaurentExpr.constant(1, self.dim)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def evaluate(self, z):
        r"""Numeric value at the shear vector ``z`` (edge order)."""
        return fsum(float(c) * exp(sum(a * b for a, b in zip(u, z)) / 2)
                    for u, c in self.terms.items())

    def coefficients(self):
        return sorted(self.terms.values())

    def to_json(self):
        return [{"exponents": list(u), "coeff": "%d/%d" % (c.numerator, c.denominator)}
                for u, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data, dim=None):
        return cls({tuple(d["exponents"]): Fraction(d["coeff"]) for d in data}, dim)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for u, c in sorted(self.terms.items()):
            parts.append("%s*e^(%s)" % (c, ",".join(map(str, u))))
        return " + ".join(parts)


def laurent_edge_matrix(i, dim):
    """Edge matrix of coordinate ``i`` with LaurentExpr entries."""
    e = [0] * dim
    e[i] = 1
    up = LaurentExpr.monomial(e)
    dn = LaurentExpr.monomial([-x for x in e])
    zero = LaurentExpr({}, dim)
    return [[zero, -up], [dn, zero]]


def _lmat_mul(A, B):
    return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]


def _lmat_scalar(T, dim):
    return [[LaurentExpr.constant(int(T[i][j]), dim) for j in range(2)] for i in range(2)]


def geodesic_laurent(g, path, labels=None):
    r"""
    Trace of the path product as an exact Laurent polynomial, normalized so
    that it is positive (the PSL2 sign).

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine, slope_path
        >>> G = torus_spine()
        >>> geodesic_laurent(G, slope_path(0, 1))
        1*e^(0,-1,-1) + 1*e^(0,-1,1) + 1*e^(0,1,1)
    """
    labels = list(labels or g.edge_labels())
    idx = {lab: i for i, lab in enumerate(labels)}
    dim = len(labels)
    P = _lmat_scalar(np.eye(2), dim)
    for h, t in zip(path.half_edges, path_turns(g, path)):
        M = _lmat_mul(_lmat_scalar(turn_matrix(t), dim),
                      laurent_edge_matrix(idx[g.edge_of[h]], dim))
        P = _lmat_mul(M, P)
    tr = P[0][0] + P[1][1]
    if tr.terms and sum(tr.terms.values()) < 0:
        tr = -tr
    return tr


def poisson_bracket(f, h, B):
    r"""
    ``{f, h}`` from ``{e^{u.Z/2}, e^{v.Z/2}} = (u^T B v / 4) e^{(u+v).Z/2}``.

    EXAMPLES::

        >>> from teichlab.fatgraph import torus_spine
        >>> B = wp_matrix(torus_spine())
        >>> x = LaurentExpr.monomial((1, 0, 0)); y = LaurentExpr.monomial((0, 1, 0))
        >>> poisson_bracket(x, y, B)
        1/2*e^(1,1,0)
    """
    M = B.B if isinstance(B, WPMatrix) else np.asarray(B)
    t = {}
    for u, c in f.terms.items():
        Bu = [sum(u[i] * int(M[i, j]) for i in range(len(u))) for j in range(len(u))]
        for v, d in h.terms.items():
            w = sum(a * b for a, b in zip(Bu, v))
            if w:
                s = tuple(a + b for a, b in zip(u, v))
                t[s] = t.get(s, 0) + Fraction(w, 4) * c * d
    return LaurentExpr(t, max(f.dim, h.dim))


def classical_skein_check(A, B, tol=1e-9):
    r"""
    ``|tr(AB) + tr(AB^{-1}) - tr A tr B|`` for unimodular ``A, B``.

    EXAMPLES::

        >>> I = np.eye(2)
        >>> classical_skein_check(I, I)
        0.0
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    for M in (A, B):
        if abs(np.linalg.det(M) - 1) > tol * max(1.0, np.abs(M).max() ** 2):
            raise ValueError("determinant %r is not 1" % (np.linalg.det(M),))
    Binv = np.array([[B[1, 1], -B[0, 1]], [-B[1, 0], B[0, 0]]])
    return float(abs(np.trace(A @ B) + np.trace(A @ Binv) - np.trace(A) * np.trace(B)))


def pentagon_step(state, phi=phi_classical):
    """One flip of the pentagon sequence on ``(X, Y, A, B, C, D, E)``."""
    X, Y, A, B, C, D, E = state
    return (Y - phi(-X), -X, D, E, A + phi(X), B - phi(-X), C + phi(X))


def pentagon_map_check(x0, y0, outer=(0.0, 0.0, 0.0, 0.0, 0.0), phi=phi_classical):
    r"""
    Maximal deviation after five steps of the pentagon flip sequence.

    EXAMPLES::

        >>> pentagon_map_check(0.3, -0.7) < 1e-10
        True
    """
    start = (x0, y0) + tuple(outer)
    s = start
    for _ in range(5):
        s = pentagon_step(s, phi)
    return max(abs(a - b) for a, b in zip(s, start))
