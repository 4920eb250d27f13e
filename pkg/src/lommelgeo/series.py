"""Normalized Lommel, Struve and Bessel series of the first kind.

Every function handled here is a power series ``z + ...`` whose ``z**(k+1)``
coefficient is, up to sign, ``c_k = 1 / ((p)_k (q)_k)`` for a parameter pair
``(p, q)``::

    Bessel  j_nu        (1, nu + 1)
    Struve  h_nu        (3/2, nu + 3/2)
    Lommel  s_{mu,nu}   ((mu - nu + 3)/2, (mu + nu + 3)/2)

Hadamard convolution with ``z/(1+z)`` turns every coefficient positive
(s-type), convolution with ``z(2 - 1/(1+z))`` keeps the leading ``z`` and
makes the rest negative (t-type).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

DEFAULT_REL_TOL = 1e-13
TERM_CAP = 10_000
POLE_TOL = 1e-9


class DomainError(ValueError):
    """Parameters outside the domain of a series or a criterion."""


class PoleError(DomainError):
    """A Pochhammer factor hits zero."""


class ConvergenceError(RuntimeError):
    """The term cap was reached before the tail bound certified."""


def is_nonpositive_integer(a: float, tol: float = POLE_TOL) -> bool:
    return a < 0.5 and abs(a - round(a)) <= tol


def pochhammer(a: float, k: int) -> float:
    """Rising factorial ``a (a+1) ... (a+k-1)``; exactly 1.0 for ``k == 0``."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    out = 1.0
    for j in range(k):
        if abs(a + j) <= POLE_TOL:
            raise PoleError(f"({a})_{k} has a zero factor at j={j}")
        out *= a + j
    return out


@dataclass(frozen=True)
class ParamPair:
    p: float
    q: float

    def __post_init__(self):
        for name, v in (("p", self.p), ("q", self.q)):
            if not np.isfinite(v):
                raise DomainError(f"{name} must be finite, got {v}")
            if is_nonpositive_integer(v):
                raise PoleError(f"{name}={v} is (within {POLE_TOL:g} of) a non-positive integer")

    @property
    def positive(self) -> bool:
        return self.p > 0 and self.q > 0

    def shifted(self) -> ParamPair:
        """The pair of the index-bumped function, ``(p+1, q+1)``."""
        return ParamPair(self.p + 1.0, self.q + 1.0)


def coefficient(pair: ParamPair, k: int) -> float:
    """``1 / ((p)_k (q)_k)``, accumulated factor by factor to avoid overflow."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    c = 1.0
    for j in range(k):
        c /= (pair.p + j) * (pair.q + j)
    return c


def lommel_pair(mu: float, nu: float) -> ParamPair:
    p = (mu - nu + 3.0) / 2.0
    # q == (mu + nu + 3)/2; written as p + nu so the Bessel/Struve reductions
    # reproduce their pairs bit for bit
    q = p + nu
    if is_nonpositive_integer(p) or is_nonpositive_integer(q):
        raise DomainError(f"(mu +- nu + 1)/2 is a negative integer for mu={mu}, nu={nu}")
    return ParamPair(p, q)


def bessel_pair(nu: float) -> ParamPair:
    if is_nonpositive_integer(nu + 1.0):
        raise DomainError(f"nu={nu} is a negative integer")
    return ParamPair(1.0, nu + 1.0)


def struve_pair(nu: float) -> ParamPair:
    if is_nonpositive_integer(nu + 1.5):
        raise DomainError(f"nu + 1/2 = {nu + 0.5} is a negative integer")
    return ParamPair(1.5, nu + 1.5)


class Kernel(str, enum.Enum):
    NONE = "none"
    ALTERNATING = "s-type"  # convolution with z/(1+z)
    NEGATIVE_TAIL = "t-type"  # convolution with z(2 - 1/(1+z))

    def sign(self, k: int) -> float:
        if self is Kernel.NONE:
            return -1.0 if k % 2 else 1.0
        if self is Kernel.ALTERNATING:
            return 1.0
        return 1.0 if k == 0 else -1.0


@dataclass(frozen=True)
class NormalizedFunction:
    """A parameter pair, a convolution kernel and family metadata.

    ``family`` is one of ``"bessel"``, ``"struve"``, ``"lommel"``, ``"raw"``;
    ``mu``/``nu`` are kept only for labels and the printed-inequality
    diagnostic.
    """

    pair: ParamPair
    kernel: Kernel = Kernel.NONE
    family: str = "raw"
    mu: float | None = None
    nu: float | None = None

    @classmethod
    def bessel(cls, nu: float, kernel: Kernel = Kernel.NONE) -> NormalizedFunction:
        return cls(bessel_pair(nu), Kernel(kernel), "bessel", nu - 1.0, nu)

    @classmethod
    def struve(cls, nu: float, kernel: Kernel = Kernel.NONE) -> NormalizedFunction:
        return cls(struve_pair(nu), Kernel(kernel), "struve", nu, nu)

    @classmethod
    def lommel(cls, mu: float, nu: float, kernel: Kernel = Kernel.NONE) -> NormalizedFunction:
        return cls(lommel_pair(mu, nu), Kernel(kernel), "lommel", mu, nu)

    @classmethod
    def raw(cls, p: float, q: float, kernel: Kernel = Kernel.NONE) -> NormalizedFunction:
        return cls(ParamPair(p, q), Kernel(kernel))

    def with_kernel(self, kernel: Kernel) -> NormalizedFunction:
        return NormalizedFunction(self.pair, Kernel(kernel), self.family, self.mu, self.nu)

    def coefficient(self, k: int) -> float:
        """Signed coefficient of ``z**(k+1)``."""
        return self.kernel.sign(k) * coefficient(self.pair, k)

    @property
    def label(self) -> str:
        if self.family == "bessel":
            base = f"Bessel(nu={self.nu:g})"
        elif self.family == "struve":
            base = f"Struve(nu={self.nu:g})"
        elif self.family == "lommel":
            base = f"Lommel(mu={self.mu:g}, nu={self.nu:g})"
        else:
            base = f"Pair(p={self.pair.p:g}, q={self.pair.q:g})"
        return f"{base} [{self.kernel.value}]"


class EvalResult(NamedTuple):
    value: complex
    tail_bound: float
    terms_used: int


def _falling(n: int, d: int) -> float:
    out = 1.0
    for i in range(d):
        out *= n - i
    return out


def series_eval(
    fn: NormalizedFunction,
    z: complex,
    derivative_order: int = 0,
    rel_tol: float = DEFAULT_REL_TOL,
    *,
    term_cap: int = TERM_CAP,
    min_terms: int = 0,
) -> EvalResult:
    """Evaluate ``f``, ``f'`` or ``f''`` at ``|z| <= 1`` by term-wise summation.

    After term ``k`` the ratio of successive term moduli is bounded by
    ``rho_k = P(k+1)/P(k) * |z| / ((p+k)(q+k))`` with ``P`` the derivative
    weight.  Once ``p+k, q+k > 0`` that bound is non-increasing in ``k``, so
    for ``rho_k < 1/2`` the omitted tail is at most ``|T_k| rho_k/(1-rho_k)``.
    ``min_terms`` forces at least that many terms (used to audit the bound).
    """
    if derivative_order not in (0, 1, 2):
        raise ValueError(f"derivative_order must be 0, 1 or 2, got {derivative_order}")
    z = complex(z)
    zabs = abs(z)
    if zabs > 1.0 + 1e-15:
        raise DomainError(f"|z| = {zabs} lies outside the closed unit disk")
    if not rel_tol > 0:
        raise ValueError("rel_tol must be positive")
    d = derivative_order
    p, q = fn.pair.p, fn.pair.q

    total = 0j
    c = 1.0
    zpow = 1.0 + 0j  # z**(k+1-d) once k+1 >= d
    for k in range(term_cap):
        if k > 0:
            c /= (p + k - 1) * (q + k - 1)
        weight = _falling(k + 1, d)
        e = k + 1 - d
        if e == 0:
            zpow = 1.0 + 0j
        elif e > 0:
            zpow = zpow * z if e > 1 else z
        if weight == 0.0:
            continue
        total += fn.kernel.sign(k) * c * weight * zpow
        if p + k <= 0 or q + k <= 0:
            continue
        rho = _falling(k + 2, d) / weight * zabs / ((p + k) * (q + k))
        if rho >= 0.5 or k + 1 < min_terms:
            continue
        tail = abs(c) * weight * zabs**e * rho / (1.0 - rho)
        if tail <= rel_tol * max(1.0, abs(total) - tail):
            return EvalResult(total, tail, k + 1)
    raise ConvergenceError(
        f"{fn.label}: no certified tail after {term_cap} terms (order {d}, z={z})"
    )


class BoundarySums(NamedTuple):
    s0: float
    s1: float
    s2: float


def boundary_sums(pair: ParamPair, rel_tol: float = DEFAULT_REL_TOL) -> BoundarySums:
    """``sum c_k``, ``sum (k+1) c_k`` and ``sum k(k+1) c_k``.

    These are the value and the first two derivatives at ``z = 1`` of the
    s-type series of ``pair``.
    """
    if not pair.positive:
        raise DomainError(f"boundary sums need p, q > 0, got {pair}")
    fn = NormalizedFunction(pair, Kernel.ALTERNATING)
    return BoundarySums(*(series_eval(fn, 1.0, d, rel_tol).value.real for d in range(3)))


def certified_length(fn: NormalizedFunction, rel_tol: float = DEFAULT_REL_TOL) -> int:
    """Number of terms that certifies ``f``, ``f'``, ``f''`` on the whole closed disk.

    Term moduli grow with ``|z|``, so the tail bound at ``z = 1`` holds
    uniformly for ``|z| <= 1``.
    """
    return max(series_eval(fn, 1.0, d, rel_tol).terms_used for d in range(3))


def power_coefficients(fn: NormalizedFunction, n_terms: int) -> np.ndarray:
    """Coefficients of ``z**0 .. z**n_terms`` (ascending; the first is 0)."""
    out = np.zeros(n_terms + 1)
    c = 1.0
    for k in range(n_terms):
        if k > 0:
            c /= (fn.pair.p + k - 1) * (fn.pair.q + k - 1)
        out[k + 1] = fn.kernel.sign(k) * c
    return out
