"""Parameter sweeps and membership-boundary bisection along family lines."""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, TextIO

import numpy as np

from .criteria import (
    ClassId,
    OrderTypeParams,
    check_membership,
    kernel_for,
    lemma1_sum,
    lemma2_sum,
)
from .series import DEFAULT_REL_TOL, DomainError, Kernel, NormalizedFunction

CSV_HEADER = ("family", "mu", "nu", "alpha", "beta", "class", "sum_value", "threshold", "verdict")
FAMILIES = ("bessel", "struve", "lommel")


class NoSignChangeError(ValueError):
    """The bracket ends do not straddle the membership boundary."""


@dataclass(frozen=True)
class FamilyLine:
    """A one-parameter line in (mu, nu): Bessel mu = nu - 1, Struve mu = nu,
    Lommel mu = nu + offset."""

    family: str
    offset: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")

    def mu(self, nu: float) -> float:
        if self.family == "bessel":
            return nu - 1.0
        if self.family == "struve":
            return nu
        return nu + self.offset

    def function(self, nu: float, kernel: Kernel = Kernel.NONE) -> NormalizedFunction:
        if self.family == "bessel":
            return NormalizedFunction.bessel(nu, kernel)
        if self.family == "struve":
            return NormalizedFunction.struve(nu, kernel)
        return NormalizedFunction.lommel(nu + self.offset, nu, kernel)

    def describe(self) -> str:
        if self.family == "lommel":
            return f"lommel(mu = nu + {self.offset:g})"
        return self.family


@dataclass(frozen=True)
class ScanRow:
    family: str
    mu: float
    nu: float
    alpha: float
    beta: float
    class_id: ClassId
    sum_value: float
    threshold: float
    verdict: str

    def csv_fields(self) -> list[str]:
        def fmt(x: float) -> str:
            return format(x, ".17g")

        return [
            self.family,
            fmt(self.mu),
            fmt(self.nu),
            fmt(self.alpha),
            fmt(self.beta),
            self.class_id.value,
            fmt(self.sum_value),
            fmt(self.threshold),
            self.verdict,
        ]


def parse_range(text: str) -> list[float]:
    """``"lo:hi:step"`` (hi inclusive) or a single number."""
    parts = text.split(":")
    if len(parts) == 1:
        return [float(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"expected lo:hi:step, got {text!r}")
    lo, hi, step = map(float, parts)
    return frange(lo, hi, step)


def frange(lo: float, hi: float, step: float) -> list[float]:
    if step <= 0:
        raise ValueError("step must be positive")
    if hi < lo:
        return []
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(n)]


def _row(family: str, mu: float, nu: float, fn_factory, cls, params, rel_tol) -> ScanRow:
    try:
        fn = fn_factory()
        rep = check_membership(fn, cls, params, rel_tol)
        total, verdict = rep.sum_value, rep.verdict.value
    except DomainError:
        total, verdict = math.nan, "DomainError"
    return ScanRow(family, mu, nu, params.alpha, params.beta, cls, total, params.threshold, verdict)


def scan_grid(
    line: FamilyLine,
    nus: Iterable[float],
    params: OrderTypeParams,
    cls: ClassId,
    rel_tol: float = DEFAULT_REL_TOL,
) -> list[ScanRow]:
    cls = ClassId(cls)
    kernel = kernel_for(cls)
    rows = []
    for nu in sorted(nus):
        rows.append(
            _row(line.family, line.mu(nu), nu, lambda: line.function(nu, kernel), cls, params, rel_tol)
        )
    return rows


def scan_rect(
    mus: Iterable[float],
    nus: Iterable[float],
    params: OrderTypeParams,
    cls: ClassId,
    rel_tol: float = DEFAULT_REL_TOL,
) -> list[ScanRow]:
    """Full Lommel (mu, nu) grid; out-of-domain points become DomainError rows."""
    cls = ClassId(cls)
    kernel = kernel_for(cls)
    rows = []
    for nu in sorted(nus):
        for mu in sorted(mus):
            rows.append(
                _row("lommel", mu, nu, lambda: NormalizedFunction.lommel(mu, nu, kernel), cls, params, rel_tol)
            )
    return rows


def write_csv(rows: Iterable[ScanRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_fields())


def bisect_root(
    g: Callable[[float], float],
    lo: float,
    hi: float,
    abs_tol: float = 1e-10,
    trace: list | None = None,
) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` around a sign change of ``g`` below ``abs_tol``.

    Appends ``(lo, g(lo), hi, g(hi))`` to ``trace`` at every iteration.
    """
    g_lo, g_hi = g(lo), g(hi)
    if g_lo == 0.0:
        return lo, lo
    if g_hi == 0.0:
        return hi, hi
    if (g_lo > 0) == (g_hi > 0):
        raise NoSignChangeError(f"g({lo})={g_lo:.6g} and g({hi})={g_hi:.6g} share a sign")
    while hi - lo >= abs_tol:
        if trace is not None:
            trace.append((lo, g_lo, hi, g_hi))
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        g_mid = g(mid)
        if g_mid == 0.0:
            return mid, mid
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi, g_hi = mid, g_mid
    return lo, hi


@dataclass(frozen=True)
class ThresholdResult:
    line_description: str
    nu_star: float
    bracket: tuple[float, float]
    residual: float
    monotone_check: bool
    sign_changes: tuple[tuple[float, float], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "line_description": self.line_description,
            "nu_star": self.nu_star,
            "bracket": list(self.bracket),
            "residual": self.residual,
            "monotone_check": self.monotone_check,
            "sign_changes": [list(s) for s in self.sign_changes],
        }


def boundary_gap(
    line: FamilyLine, cls: ClassId, params: OrderTypeParams, rel_tol: float = DEFAULT_REL_TOL
) -> Callable[[float], float]:
    """``g(nu) = sum(nu) - 2 beta (1 - alpha)`` along ``line``."""
    cls = ClassId(cls)
    sum_fn = lemma2_sum if cls.convex else lemma1_sum

    def g(nu: float) -> float:
        fn = line.function(nu)
        if not fn.pair.positive:
            raise DomainError(f"{fn.label} is outside the criterion domain")
        return sum_fn(params, fn.pair, rel_tol) - params.threshold

    return g


def threshold_bisect(
    line: FamilyLine,
    cls: ClassId,
    params: OrderTypeParams,
    bracket: tuple[float, float],
    abs_tol: float = 1e-10,
    rel_tol: float = DEFAULT_REL_TOL,
) -> ThresholdResult:
    """Locate where the coefficient sum crosses the threshold along ``line``.

    Monotonicity of the gap on the bracket is sampled at 16 interior points,
    not assumed; every sampled sign change is reported.
    """
    lo, hi = sorted(bracket)
    g = boundary_gap(line, cls, params, rel_tol)
    a, b = bisect_root(g, lo, hi, abs_tol)
    nu_star = 0.5 * (a + b)

    xs = np.linspace(lo, hi, 18)
    gs = np.array([g(float(x)) for x in xs])
    diffs = np.diff(gs)
    monotone = bool(np.all(diffs <= 0) or np.all(diffs >= 0))
    flips = tuple(
        (float(xs[i]), float(xs[i + 1]))
        for i in range(len(xs) - 1)
        if (gs[i] > 0) != (gs[i + 1] > 0)
    )
    return ThresholdResult(
        line_description=f"{line.describe()} {ClassId(cls).symbol}(alpha={params.alpha:g}, beta={params.beta:g})",
        nu_star=nu_star,
        bracket=(a, b),
        residual=abs(g(nu_star)),
        monotone_check=monotone,
        sign_changes=flips,
    )
