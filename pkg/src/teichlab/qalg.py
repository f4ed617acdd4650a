r"""
Quantum exponentials of shear coordinates.

A :class:`QElement` is a finite sum of Weyl-ordered exponentials
``:exp(u.Z/2):`` with coefficients in ``Z[q^{1/4}, q^{-1/4}]``. Monomials
multiply by

    m_u m_v = q^{-u^T B v / 4} m_{u+v}

for an antisymmetric integer bracket matrix ``B``. Exponent vectors ``u``
are integers (half-units of ``Z``) and powers of ``q`` are stored times 4.

EXAMPLES::

    >>> B = TORUS_BRACKET
    >>> x = QElement.monomial((1, 0, 0), B); y = QElement.monomial((0, 1, 0), B)
    >>> x * y
    q^(-1/2)*[1,1,0]
    >>> (x * y) == (y * x).shift(-4)
    True
"""
from fractions import Fraction
import cmath

from .classical import LaurentExpr

TORUS_BRACKET = ((0, 2, -2), (-2, 0, 2), (2, -2, 0))


class BracketMismatch(ValueError):
    pass


def _bracket(B):
    return tuple(tuple(int(x) for x in row) for row in (B.B.tolist() if hasattr(B, "B") else B))


class QCoeff:
    r"""
    Laurent polynomial in ``q^{1/4}`` with integer coefficients.

    EXAMPLES::

        >>> c = QCoeff({4: 1, -4: 1})
        >>> c
        q^(-1) + q
        >>> c.star() == c
        True
    """
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms}
        self.terms = {int(k): int(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def q(cls, p=1):
        """``q^p`` for a quarter-integer ``p``."""
        k = Fraction(p) * 4
        if k.denominator != 1:
            raise ValueError("q exponent %r is not a multiple of 1/4" % (p,))
        return cls({int(k): 1})

    def __add__(self, other):
        other = other if isinstance(other, QCoeff) else QCoeff(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return QCoeff(t)

    __radd__ = __add__

    def __neg__(self):
        return QCoeff({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-(other if isinstance(other, QCoeff) else QCoeff(other)))

    def __mul__(self, other):
        other = other if isinstance(other, QCoeff) else QCoeff(other)
        t = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                t[k1 + k2] = t.get(k1 + k2, 0) + v1 * v2
        return QCoeff(t)

    __rmul__ = __mul__

    def shift(self, k4):
        return QCoeff({k + k4: v for k, v in self.terms.items()})

    def star(self):
        """The involution ``q^{1/4} -> q^{-1/4}``."""
        return QCoeff({-k: v for k, v in self.terms.items()})

    def at(self, q):
        return sum(v * q ** (k / 4) for k, v in self.terms.items())

    def at_one(self):
        return sum(self.terms.values())

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        other = other if isinstance(other, QCoeff) else QCoeff(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def to_json(self):
        return [[k, v] for k, v in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, v in sorted(self.terms.items()):
            e = Fraction(k, 4)
            mono = "1" if k == 0 else ("q" if e == 1 else "q^(%s)" % e)
            if v == 1:
                parts.append(mono)
            elif mono == "1":
                parts.append(str(v))
            else:
                parts.append("%d*%s" % (v, mono))
        return " + ".join(parts)


class QElement:
    r"""
    Sum of Weyl-ordered exponentials with :class:`QCoeff` coefficients over a
    fixed bracket matrix.

    EXAMPLES::

        >>> one = QElement.one(TORUS_BRACKET)
        >>> u = QElement.monomial((1, -1, 0), TORUS_BRACKET)
        >>> u * u.inverse_monomial() == one
        True
    """
    __slots__ = ("terms", "B")

    def __init__(self, terms, B):
        self.B = _bracket(B)
        self.terms = {}
        for u, c in dict(terms).items():
            c = c if isinstance(c, QCoeff) else QCoeff(c)
            if not c.is_zero():
                self.terms[tuple(u)] = c

    @property
    def dim(self):
        return len(self.B)

    @classmethod
    def monomial(cls, u, B, c=1):
        return cls({tuple(u): c}, B)

    @classmethod
    def one(cls, B):
        return cls({(0,) * len(B): 1}, B)

    @classmethod
    def zero(cls, B):
        return cls({}, B)

    @classmethod
    def from_laurent(cls, f, B):
        """Weyl quantization of a Laurent polynomial with integer coefficients."""
        t = {}
        for u, c in f.terms.items():
            if c.denominator != 1:
                raise ValueError("coefficient %s is not an integer" % c)
            t[u] = QCoeff(int(c))
        return cls(t, B)

    def _check(self, other):
        if not isinstance(other, QElement):
            return QElement.one(self.B) * (other if isinstance(other, QCoeff) else QCoeff(other))
        if other.B != self.B:
            raise BracketMismatch("elements live over different bracket matrices")
        return other

    def omega(self, u, v):
        return sum(u[i] * self.B[i][j] * v[j]
                   for i in range(len(u)) if u[i] for j in range(len(v)) if v[j])

    def __add__(self, other):
        other = self._check(other)
        t = dict(self.terms)
        for u, c in other.terms.items():
            t[u] = t[u] + c if u in t else c
        return QElement(t, self.B)

    __radd__ = __add__

    def __neg__(self):
        return QElement({u: -c for u, c in self.terms.items()}, self.B)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, QCoeff)):
            return QElement({u: c * other for u, c in self.terms.items()}, self.B)
        other = self._check(other)
        t = {}
        for u, c in self.terms.items():
            for v, d in other.terms.items():
                w = tuple(a + b for a, b in zip(u, v))
                cd = (c * d).shift(-self.omega(u, v))
                t[w] = t[w] + cd if w in t else cd
        return QElement(t, self.B)

    def __rmul__(self, other):
        if isinstance(other, (int, QCoeff)):
            return self * other
        return NotImplemented

    def __pow__(self, n):
        out = QElement.one(self.B)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k4):
        """Multiply by ``q^{k4/4}``."""
        return QElement({u: c.shift(k4) for u, c in self.terms.items()}, self.B)

    def inverse_monomial(self):
        if len(self.terms) != 1:
            raise ValueError("only monomials are inverted")
        (u, c), = self.terms.items()
        if len(c.terms) != 1 or abs(next(iter(c.terms.values()))) != 1:
            raise ValueError("coefficient is not a unit")
        (k, v), = c.terms.items()
        return QElement({tuple(-a for a in u): QCoeff({-k: v})}, self.B)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, QElement):
            other = self._check(other)
        return self.B == other.B and self.terms == other.terms

    def __hash__(self):
        return hash((self.B, tuple(sorted(self.terms.items()))))

    def adjoint(self):
        r"""
        ``q^{1/4} -> q^{-1/4}`` on coefficients; Weyl monomials are fixed.
        """
        return QElement({u: c.star() for u, c in self.terms.items()}, self.B)

    def is_hermitian(self):
        return self.adjoint() == self

    def coefficient(self, u):
        return self.terms.get(tuple(u), QCoeff())

    def at_q1(self):
        """The commutative limit ``q = 1`` as a LaurentExpr."""
        return LaurentExpr({u: c.at_one() for u, c in self.terms.items()}, self.dim)

    def evaluate(self, q, z):
        r"""
        Substitute ``q`` (on the unit circle) and commuting exponentials.
        """
        if abs(abs(q) - 1) > 1e-12:
            raise ValueError("|q| must be 1")
        total = 0j
        for u, c in self.terms.items():
            total += c.at(complex(q)) * cmath.exp(sum(a * b for a, b in zip(u, z)) / 2)
        return total

    def to_json(self):
        return [{"monomial": list(u), "coeff": c.to_json()} for u, c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data, B):
        return cls({tuple(d["monomial"]): QCoeff({k: v for k, v in d["coeff"]}) for d in data}, B)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for u, c in sorted(self.terms.items()):
            s = repr(c)
            mono = "[%s]" % ",".join(map(str, u))
            parts.append(mono if s == "1" else ("(%s)*%s" % (s, mono) if "+" in s else "%s*%s" % (s, mono)))
        return " + ".join(parts)


def q_mul(a, b):
    return a * b


def q_commutator(a, b, p=Fraction(1, 2)):
    r"""
    ``q^p a b - q^{-p} b a``.

    EXAMPLES::

        >>> x = QElement.monomial((1, 0, 0), TORUS_BRACKET)
        >>> q_commutator(x, x) == (x * x) * (QCoeff.q(Fraction(1, 2)) - QCoeff.q(Fraction(-1, 2)))
        True
    """
    k = int(Fraction(p) * 4)
    return (a * b).shift(k) - (b * a).shift(-k)


def adjoint(a):
    return a.adjoint()


def is_hermitian(a):
    return a.is_hermitian()


def evaluate(a, q, z):
    return a.evaluate(q, z)


# reduced torus lattice

# (U, V, C) = (e^{X/2}, e^{-Y/2}, e^{(X+Y+Z)/2}); C is central
REDUCED_BASIS = ((1, 0, 0), (0, -1, 0), (1, 1, 1))


def _change_bracket(B, basis):
    return tuple(tuple(sum(basis[i][a] * B[a][b] * basis[j][b]
                           for a in range(len(B)) for b in range(len(B)))
                       for j in range(len(basis))) for i in range(len(basis)))


REDUCED_BRACKET = _change_bracket(TORUS_BRACKET, REDUCED_BASIS)


def to_reduced(a):
    r"""
    Rewrite a torus element in the ``(U, V, C)`` lattice.

    ``e^{(aX + bY + cZ)/2}`` becomes ``[U^{a-c} V^{c-b}] C^c``.

    EXAMPLES::

        >>> x = QElement.monomial((1, 0, 0), TORUS_BRACKET)
        >>> to_reduced(x)
        [1,0,0]
        >>> REDUCED_BRACKET
        ((0, -2, 0), (2, 0, 0), (0, 0, 0))
    """
    if a.B != TORUS_BRACKET:
        raise BracketMismatch("reduced mode needs the torus bracket")
    return QElement({(u[0] - u[2], u[2] - u[1], u[2]): c for u, c in a.terms.items()},
                    REDUCED_BRACKET)


def from_reduced(a):
    if a.B != REDUCED_BRACKET:
        raise BracketMismatch("element is not in reduced mode")
    return QElement({(i + k, k - j, k): c for (i, j, k), c in a.terms.items()}, TORUS_BRACKET)
