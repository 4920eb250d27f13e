"""Sampling check of the analytic class definitions on a polar grid.

Starlike quotient: ``|(w - 1) / (w + 1 - 2 alpha)|`` with ``w = z f'(z) / f(z)``.
Convex quotient:   ``|u / (u + 2(1 - alpha))|``      with ``u = z f''(z) / f'(z)``.

A function is in the class of type ``beta`` when the quotient stays below
``beta`` on the open unit disk. A finite grid only gives a lower estimate of
the supremum, so these checks can refute but never prove membership.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as P

from .criteria import (
    ClassId,
    CriterionReport,
    OrderTypeParams,
    Verdict,
    check_membership,
)
from .series import DEFAULT_REL_TOL, NormalizedFunction, certified_length, power_coefficients

GUARD = 1e-12
MEMBER_SLACK = 1e-6
NOT_MEMBER_SLACK = 0.05
CHECK_R_MAX = 0.999


class EmptyGridError(RuntimeError):
    """Every grid point hit a denominator guard."""


@dataclass(frozen=True)
class DiskGrid:
    n_radii: int = 32
    n_angles: int = 256
    r_max: float = 0.995

    def __post_init__(self):
        if self.n_radii < 2:
            raise ValueError("n_radii must be at least 2")
        if self.n_angles < 8:
            raise ValueError("n_angles must be at least 8")
        if not 0.0 < self.r_max < 1.0:
            raise ValueError("r_max must lie in (0, 1)")

    def radii(self) -> np.ndarray:
        # distances to the unit circle shrink geometrically toward 1 - r_max
        r_min = self.r_max / 20
        return 1.0 - np.geomspace(1.0 - r_min, 1.0 - self.r_max, self.n_radii)

    def angles(self) -> np.ndarray:
        return 2 * np.pi * np.arange(self.n_angles) / self.n_angles

    def points(self) -> np.ndarray:
        """Shape ``(n_radii, n_angles)``, row-major in ``(r, theta)``."""
        return self.radii()[:, None] * np.exp(1j * self.angles())[None, :]


@dataclass(frozen=True)
class SupReport:
    sup_modulus: float
    argmax_point: complex
    min_abs_f: float
    skipped_points: int

    def to_dict(self) -> dict:
        z = self.argmax_point
        return {
            "sup_modulus": self.sup_modulus,
            "argmax_point": {"re": z.real, "im": z.imag},
            "min_abs_f": self.min_abs_f,
            "skipped_points": self.skipped_points,
        }


def _derivatives(fn: NormalizedFunction, z: np.ndarray, rel_tol: float):
    coef = power_coefficients(fn, certified_length(fn, rel_tol))
    d1 = P.polyder(coef)
    d2 = P.polyder(d1)
    return P.polyval(z, coef), P.polyval(z, d1), P.polyval(z, d2)


def _sup(z: np.ndarray, quotient: np.ndarray, valid: np.ndarray, min_abs_f: float) -> SupReport:
    if not valid.any():
        raise EmptyGridError("all grid points were skipped by the denominator guards")
    q = np.where(valid, quotient, -np.inf).ravel()
    # argmax returns the first maximiser: smallest (r, theta) on ties
    i = int(np.argmax(q))
    return SupReport(float(q[i]), complex(z.ravel()[i]), min_abs_f, int((~valid).sum()))


def starlike_sup(
    fn: NormalizedFunction,
    alpha: float,
    grid: DiskGrid = DiskGrid(),
    rel_tol: float = DEFAULT_REL_TOL,
) -> SupReport:
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    z = grid.points()
    f, f1, _ = _derivatives(fn, z, rel_tol)
    ok_f = np.abs(f) >= GUARD
    w = np.where(ok_f, z * f1 / np.where(ok_f, f, 1.0), 0.0)
    den = w + 1 - 2 * alpha
    valid = ok_f & (np.abs(den) >= GUARD)
    quotient = np.abs((w - 1) / np.where(valid, den, 1.0))
    return _sup(z, quotient, valid, float(np.abs(f).min()))


def convex_sup(
    fn: NormalizedFunction,
    alpha: float,
    grid: DiskGrid = DiskGrid(),
    rel_tol: float = DEFAULT_REL_TOL,
) -> SupReport:
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    z = grid.points()
    f, f1, f2 = _derivatives(fn, z, rel_tol)
    ok_f1 = np.abs(f1) >= GUARD
    u = np.where(ok_f1, z * f2 / np.where(ok_f1, f1, 1.0), 0.0)
    den = u + 2 * (1 - alpha)
    valid = ok_f1 & (np.abs(den) >= GUARD)
    quotient = np.abs(u / np.where(valid, den, 1.0))
    return _sup(z, quotient, valid, float(np.abs(f).min()))


@dataclass(frozen=True)
class ConsistencyReport:
    criterion: CriterionReport
    sampled: SupReport
    boundary_check: SupReport | None
    flagged: bool
    note: str

    def to_dict(self) -> dict:
        return {
            "criterion": self.criterion.to_dict(),
            "sampled": self.sampled.to_dict(),
            "boundary_check": None if self.boundary_check is None else self.boundary_check.to_dict(),
            "flagged": self.flagged,
            "note": self.note,
        }


def cross_validate(
    fn: NormalizedFunction,
    cls: ClassId,
    params: OrderTypeParams,
    grid: DiskGrid = DiskGrid(),
    rel_tol: float = DEFAULT_REL_TOL,
) -> ConsistencyReport:
    """Compare the coefficient verdict with the sampled quotient supremum.

    Member requires ``sup < beta + 1e-6`` on ``grid``. NotMember requires the
    supremum on the same grid pushed out to ``r_max = 0.999`` to exceed
    ``beta - 0.05``. Inconclusive verdicts are reported, never flagged.
    """
    cls = ClassId(cls)
    report = check_membership(fn, cls, params, rel_tol)
    sup_fn = convex_sup if cls.convex else starlike_sup
    sampled = sup_fn(fn, params.alpha, grid, rel_tol)
    beta = params.beta
    check = None
    if report.verdict is Verdict.MEMBER:
        flagged = sampled.sup_modulus >= beta + MEMBER_SLACK
        note = "member: sampled sup must stay below beta"
    elif report.verdict is Verdict.NOT_MEMBER:
        wide = DiskGrid(grid.n_radii, grid.n_angles, CHECK_R_MAX)
        check = sup_fn(fn, params.alpha, wide, rel_tol)
        flagged = check.sup_modulus <= beta - NOT_MEMBER_SLACK
        note = "not a member: sup near the boundary must approach beta"
    else:
        flagged = False
        note = "inconclusive: sufficient condition failed, sampling reported only"
    if flagged:
        note += " (FLAGGED for manual review)"
    return ConsistencyReport(report, sampled, check, flagged, note)
