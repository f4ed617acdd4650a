r"""
Faddeev's quantum dilogarithm by contour quadrature, and the finite
pentagon identity at rational ``hbar``.

``phi_hbar(z)`` is

.. MATH::

    -\frac{\pi\hbar}{2}\int_\Omega \frac{e^{-ipz}}{\sinh(\pi p)\sinh(\pi\hbar p)}\,dp

along the real line with a semicircle above the origin. It tends to
``log(1 + e^z)`` as ``hbar -> 0`` and satisfies

    phi(z) - phi(-z) = z,
    phi(z + i pi hbar) - phi(z - i pi hbar) = 2 pi i hbar / (1 + e^{-z}),
    phi(z + i pi) - phi(z - i pi) = 2 pi i / (1 + e^{-z/hbar}).

EXAMPLES::

    >>> p = DilogParams(0.5)
    >>> abs(phi_hbar(1.0, p) - phi_hbar(-1.0, p) - 1.0) < 1e-10
    True
    >>> round(phi_hbar(0.0, DilogParams(1.0)), 12)
    1.0
"""
from dataclasses import dataclass
from functools import lru_cache
from math import log, pi

import numpy as np


class QuadratureError(RuntimeError):
    pass


@dataclass(frozen=True)
class DilogParams:
    r"""
    ``hbar`` and the quadrature of the contour: indentation radius ``r``
    (default ``0.5 min(1, 1/hbar)``), truncation ``T`` (default from the
    decay rate) and Gauss-Legendre nodes per panel.

    EXAMPLES::

        >>> DilogParams(2.0).radius
        0.25
        >>> DilogParams(0.0)
        Traceback (most recent call last):
        ...
        ValueError: hbar must be positive
    """
    hbar: float
    r: float = None
    T: float = None
    nodes: int = 64
    panel: float = 1.0
    tol: float = 1e-16

    def __post_init__(self):
        if not self.hbar > 0:
            raise ValueError("hbar must be positive")
        if self.r is not None and not 0 < self.r < min(1.0, 1.0 / self.hbar):
            raise ValueError("indentation radius must lie in (0, min(1, 1/hbar))")

    @property
    def radius(self):
        return self.r if self.r is not None else 0.5 * min(1.0, 1.0 / self.hbar)

    def cutoff(self, im_z=0.0):
        r"""Truncation point where the integrand tail drops below ``tol``."""
        rate = pi * (1 + self.hbar) - abs(im_z)
        if rate <= 0:
            raise QuadratureError("|Im z| = %g is outside the strip of convergence" % im_z)
        if self.T is not None:
            return self.T
        # the tail of 1/(sinh sinh) is 4 e^{-rate p}; small hbar inflates the prefactor
        lead = 4.0 * max(1.0, 1.0 / (pi * self.hbar))
        return max(self.radius + 1.0, log(lead / self.tol) / rate)


@lru_cache(maxsize=None)
def _legendre(n):
    return np.polynomial.legendre.leggauss(n)


@lru_cache(maxsize=256)
def _contour(params, im_z, scale):
    r"""
    Nodes ``p`` and weights ``dp`` along the indented contour for points
    with ``|Im z| = im_z`` and ``|Re z| <= scale``.

    The radius shrinks like ``1/scale`` so that ``e^{r |z|}`` stays bounded
    on the semicircle; panels are graded geometrically away from the
    semicircle and are short enough to resolve ``e^{-ipz}``.
    """
    x, w = _legendre(params.nodes)
    r = min(params.radius, 1.0 / scale) if params.r is None else params.r
    T = params.cutoff(im_z)
    width = min(params.panel, 8.0 / scale)
    ps, ws = [], []
    k = max(2, int(np.ceil(pi * r / width)))
    edges = np.linspace(pi, 0.0, k + 1)
    for a, b in zip(edges, edges[1:]):
        th = 0.5 * (a + b) + 0.5 * (b - a) * x
        p = r * np.exp(1j * th)
        ps.append(p)
        ws.append(0.5 * (b - a) * w * 1j * p)
    edges = [r]
    while edges[-1] * 2 < min(1.0, T):
        edges.append(edges[-1] * 2)
    n = max(1, int(np.ceil((T - edges[-1]) / width)))
    edges = np.concatenate([edges[:-1], np.linspace(edges[-1], T, n + 1)])
    for a, b in zip(edges, edges[1:]):
        t = 0.5 * (a + b) + 0.5 * (b - a) * x
        for sgn in (1, -1):
            ps.append(sgn * t + 0j)
            ws.append(0.5 * (b - a) * w + 0j)
    return np.concatenate(ps), np.concatenate(ws)


def _params(p):
    return p if isinstance(p, DilogParams) else DilogParams(float(p))


def _integral(z, p, extra_pole):
    z = complex(z)
    p = _params(p)
    scale = 2.0 ** max(0, int(np.ceil(np.log2(max(abs(z.real), 1.0)))))
    nodes, weights = _contour(p, round(abs(z.imag), 12), scale)
    den = np.sinh(pi * nodes) * np.sinh(pi * p.hbar * nodes)
    if extra_pole:
        den = den * nodes
    vals = np.exp(-1j * nodes * z) / den
    return np.dot(weights, vals)


def phi_hbar_complex(z, p):
    r"""``phi_hbar`` for complex ``z`` in the strip ``|Im z| < pi (1 + hbar)``."""
    p = _params(p)
    return -0.5 * pi * p.hbar * _integral(z, p, False)


def phi_hbar(z, p):
    r"""
    ``phi_hbar`` at a real point; the imaginary part of the quadrature is
    checked to vanish.

    EXAMPLES::

        >>> p = DilogParams(1 / 3)
        >>> abs(phi_hbar(20.0, p) - 20.0) < 0.1
        True
        >>> abs(phi_hbar(0.5, DilogParams(0.01)) - log(1 + np.exp(0.5))) < 0.05
        True
    """
    val = phi_hbar_complex(float(z), p)
    if abs(val.imag) > 1e-10 * max(1.0, abs(val.real)):
        raise QuadratureError("imaginary residue %.3e at z=%r, hbar=%r"
                              % (val.imag, z, _params(p).hbar))
    return float(val.real)


def log_F_hbar(z, p):
    r"""``log F_hbar(z) = -(1/4) \int_Omega e^{-ipz} / (p sinh(pi p) sinh(pi hbar p)) dp``."""
    return -0.25 * _integral(z, _params(p), True)


def F_hbar(z, p):
    r"""
    ``F_hbar(z)``; its shifts satisfy ``F(z + i pi hbar) / F(z - i pi hbar) =
    1 + e^z``.

    EXAMPLES::

        >>> p = DilogParams(1 / 3)
        >>> abs(F_hbar(0.3, p)) > 0
        True
        >>> abs(shift_residual_F(1.0, p)) < 1e-6
        True
    """
    return complex(np.exp(log_F_hbar(z, p)))


def shift_residual_F(z, p):
    """``F(z + i pi hbar) / F(z - i pi hbar) - (1 + e^z)``."""
    p = _params(p)
    s = 1j * pi * p.hbar
    return complex(np.exp(log_F_hbar(z + s, p) - log_F_hbar(z - s, p)) - (1 + np.exp(z)))


def functional_residuals(z, p):
    r"""
    Residuals of the three functional relations at real ``z``.

    EXAMPLES::

        >>> [abs(r) < 1e-7 for r in functional_residuals(0.4, DilogParams(0.3))]
        [True, True, True]
    """
    p = _params(p)
    h = p.hbar
    f = lambda w: phi_hbar_complex(w, p)
    r1 = f(z) - f(-z) - z
    r2 = f(z + 1j * pi * h) - f(z - 1j * pi * h) - 2j * pi * h / (1 + np.exp(-z))
    r3 = f(z + 1j * pi) - f(z - 1j * pi) - 2j * pi / (1 + np.exp(-z / h))
    return complex(r1), complex(r2), complex(r3)


def duality_check(z, hbar):
    r"""
    ``|phi_hbar(z)/hbar - phi_{1/hbar}(z/hbar)|``.

    EXAMPLES::

        >>> duality_check(0.7, 2.0) < 1e-7
        True
        >>> duality_check(-1.3, 0.5) < 1e-7
        True
    """
    if hbar == 0:
        raise ValueError("hbar must be nonzero")
    return abs(phi_hbar(z, DilogParams(hbar)) / hbar - phi_hbar(z / hbar, DilogParams(1.0 / hbar)))


def asymptotic_slopes(p, z=25.0):
    r"""``(phi(z+1) - phi(z), phi(-z+1) - phi(-z))``; tend to ``1`` and ``0``."""
    return (phi_hbar(z + 1, p) - phi_hbar(z, p), phi_hbar(-z + 1, p) - phi_hbar(-z, p))


def tropical_limit(x, p, lam=100.0):
    r"""
    ``phi_hbar(lam x) / lam``, which approaches ``(x + |x|)/2``.

    EXAMPLES::

        >>> abs(tropical_limit(1.0, DilogParams(1.0)) - 1.0) < 0.02
        True
    """
    return phi_hbar(lam * x, p) / lam


# finite pentagon

@dataclass(frozen=True)
class CyclicRep:
    r"""
    ``hbar = m/n`` with ``m, n`` odd; ``q = e^{-i pi hbar}``.

    EXAMPLES::

        >>> CyclicRep(2, 3)
        Traceback (most recent call last):
        ...
        ValueError: m and n must both be odd
    """
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if self.m % 2 == 0 or self.n % 2 == 0:
            raise ValueError("m and n must both be odd")

    @property
    def q(self):
        return np.exp(-1j * pi * self.m / self.n)


def F_cyclic(j, u, rep, shift=2):
    r"""
    ``(1 + u)^{j/n} prod_{k<j} (1 + q^{-4k + shift} u^{1/n})^{-1}`` with
    positive real roots.
    """
    n, q = rep.n, rep.q
    val = complex((1 + u) ** (j / n))
    for k in range(j):
        val /= 1 + q ** (-4 * k + shift) * u ** (1.0 / n)
    return val


def L_matrix(u, rep, shift=2):
    r"""``L(u)^i_j = F(j, u) q^{-4ij}``."""
    if not u > 0:
        raise ValueError("u must be positive")
    n, q = rep.n, rep.q
    F = np.array([F_cyclic(j, u, rep, shift) for j in range(n)])
    i = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    return F[None, :] * q ** (-4 * i * j)


def pentagon_product(u, v, rep, shift=2):
    args = (u, v + u * v, v + v / u + 1 / u, 1 / (u * v) + 1 / u, 1 / v)
    P = np.eye(rep.n, dtype=complex)
    for x in args:
        P = P @ L_matrix(x, rep, shift)
    return P


def pentagon_finite(u, v, rep, shift=2):
    r"""
    ``max |L(u) L(v+uv) L(v+v/u+1/u) L(1/(uv)+1/u) L(1/v) - 1|``.

    ``shift`` is the ``q``-exponent offset in the inner product of
    ``F(j, u)``; ``2`` is the form stated with the identity.

    EXAMPLES::

        >>> pentagon_finite(1.0, 1.0, CyclicRep(1, 3)) > 1
        True
    """
    if not (u > 0 and v > 0):
        raise ValueError("u and v must be positive")
    P = pentagon_product(u, v, rep, shift)
    return float(np.abs(P - np.eye(rep.n)).max())


def pentagon_report(u, v, rep, shift=2):
    r"""
    Deviation from the identity, the scalar ``c = P[0, 0]`` and the relative
    deviation of the product from ``c`` times the identity.

    EXAMPLES::

        >>> r = pentagon_report(1.0, 1.0, CyclicRep(1, 3), shift=-2)
        >>> r["scalar_deviation"] < 1e-12, round(r["scalar_modulus"], 6) == round(3 ** 2.5, 6)
        (True, True)
    """
    P = pentagon_product(u, v, rep, shift)
    c = complex(P[0, 0])
    n = rep.n
    return {
        "m": rep.m, "n": n, "u": u, "v": v, "shift": shift,
        "deviation": float(np.abs(P - np.eye(n)).max()),
        "scalar": c,
        "scalar_modulus": abs(c),
        "scalar_deviation": float(np.abs(P - c * np.eye(n)).max() / abs(c)),
    }


def normalized_pentagon_phase(u, v, rep, shift=-2):
    r"""
    Scalar left after dividing each ``L`` by ``sqrt(n)`` and by the
    geometric mean of its ``F(j, u)``; independent of ``u, v``.

    EXAMPLES::

        >>> c = normalized_pentagon_phase(2.0, 0.5, CyclicRep(1, 3))
        >>> bool(abs(c - np.exp(5j * pi / 6)) < 1e-10)
        True
    """
    args = (u, v + u * v, v + v / u + 1 / u, 1 / (u * v) + 1 / u, 1 / v)
    n = rep.n
    P = np.eye(n, dtype=complex)
    for x in args:
        L = L_matrix(x, rep, shift)
        P = P @ (L / np.sqrt(n) / np.exp(np.mean(np.log(L[0, :]))))
    return complex(P[0, 0])
