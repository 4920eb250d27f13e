"""Coefficient criteria for starlikeness and convexity of order alpha, type beta.

For ``f(z) = z + sum_{k>=2} a_k z^k`` the classical coefficient sums are

    L = sum_{k>=2} [k - 1 + beta(k + 1 - 2 alpha)] |a_k|
    F = sum_{k>=2} k [k - 1 + beta(k + 1 - 2 alpha)] |a_k|

and ``L <= 2 beta (1 - alpha)`` (resp. ``F``) is sufficient for S*(alpha, beta)
(resp. K(alpha, beta)), and necessary and sufficient on the negative-coefficient
subclasses T*(alpha, beta) and C(alpha, beta).

For the normalized functions ``|a_k| = c_{k-1}`` and ``c_j = c'_{j-1}/(pq)``
where ``c'`` belongs to the shifted pair ``(p+1, q+1)``, which telescopes the
sums into boundary values of the shifted s-type function:

    L = [(1+b) S1 + 2b(1-a) S0] / (pq)
    F = [(1+b) S2 + 2(1+2b-ab) S1 + 2b(1-a) S0] / (pq)
"""
from __future__ import annotations

import enum
from dataclasses import asdict, dataclass
from typing import Callable

from .series import (
    DEFAULT_REL_TOL,
    TERM_CAP,
    ConvergenceError,
    DomainError,
    Kernel,
    NormalizedFunction,
    ParamPair,
    boundary_sums,
    bessel_pair,
    struve_pair,
)


class KernelMismatchError(ValueError):
    """The function's kernel does not fit the requested class."""


class ClassId(str, enum.Enum):
    STARLIKE = "s-star"  # S*(alpha, beta)
    CONVEX = "k"  # K(alpha, beta)
    STARLIKE_NEG = "t-star"  # T*(alpha, beta)
    CONVEX_NEG = "c"  # C(alpha, beta)

    @property
    def exact(self) -> bool:
        return self in (ClassId.STARLIKE_NEG, ClassId.CONVEX_NEG)

    @property
    def convex(self) -> bool:
        return self in (ClassId.CONVEX, ClassId.CONVEX_NEG)

    @property
    def symbol(self) -> str:
        return {"s-star": "S*", "k": "K", "t-star": "T*", "c": "C"}[self.value]


class Verdict(str, enum.Enum):
    MEMBER = "Member"
    NOT_MEMBER = "NotMember"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class OrderTypeParams:
    alpha: float = 0.0
    beta: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.alpha < 1.0:
            raise DomainError(f"alpha must lie in [0, 1), got {self.alpha}")
        if not 0.0 < self.beta <= 1.0:
            raise DomainError(f"beta must lie in (0, 1], got {self.beta}")

    @property
    def threshold(self) -> float:
        return 2.0 * self.beta * (1.0 - self.alpha)


def kernel_for(cls: ClassId) -> Kernel:
    return Kernel.NEGATIVE_TAIL if ClassId(cls).exact else Kernel.ALTERNATING


def _require_positive(pair: ParamPair) -> None:
    if not pair.positive:
        raise DomainError(f"criteria need p > 0 and q > 0, got p={pair.p}, q={pair.q}")


def _weighted_sum(
    pair: ParamPair, weight: Callable[[int], float], rel_tol: float
) -> float:
    # sum_{j>=1} weight(j) c_j; weight is a product of increasing positive
    # affine factors, so weight(j+1)/weight(j) is non-increasing
    _require_positive(pair)
    p, q = pair.p, pair.q
    total = 0.0
    c = 1.0
    for j in range(1, TERM_CAP + 1):
        c /= (p + j - 1) * (q + j - 1)
        w = weight(j)
        term = w * c
        total += term
        rho = weight(j + 1) / w / ((p + j) * (q + j))
        if rho < 0.5:
            tail = term * rho / (1.0 - rho)
            if tail <= rel_tol * max(1.0, total):
                return total
    raise ConvergenceError(f"coefficient sum for {pair} did not certify in {TERM_CAP} terms")


def lemma1_sum(
    params: OrderTypeParams, pair: ParamPair, rel_tol: float = DEFAULT_REL_TOL
) -> float:
    """Starlikeness sum ``sum_{k>=2} [k-1+b(k+1-2a)] c_{k-1}``, summed directly."""
    a, b = params.alpha, params.beta
    # j = k - 1
    return _weighted_sum(pair, lambda j: j + b * (j + 2 - 2 * a), rel_tol)


def lemma2_sum(
    params: OrderTypeParams, pair: ParamPair, rel_tol: float = DEFAULT_REL_TOL
) -> float:
    """Convexity sum: as :func:`lemma1_sum` with an extra factor ``k``."""
    a, b = params.alpha, params.beta
    return _weighted_sum(pair, lambda j: (j + 1) * (j + b * (j + 2 - 2 * a)), rel_tol)


def closed_form_lemma1(
    params: OrderTypeParams, pair: ParamPair, rel_tol: float = DEFAULT_REL_TOL
) -> float:
    _require_positive(pair)
    a, b = params.alpha, params.beta
    s = boundary_sums(pair.shifted(), rel_tol)
    return ((1 + b) * s.s1 + 2 * b * (1 - a) * s.s0) / (pair.p * pair.q)


def closed_form_lemma2(
    params: OrderTypeParams, pair: ParamPair, rel_tol: float = DEFAULT_REL_TOL
) -> float:
    _require_positive(pair)
    a, b = params.alpha, params.beta
    s = boundary_sums(pair.shifted(), rel_tol)
    bracket = (1 + b) * s.s2 + 2 * (1 + 2 * b - a * b) * s.s1 + 2 * b * (1 - a) * s.s0
    return bracket / (pair.p * pair.q)


@dataclass(frozen=True)
class PaperRhsComparison:
    """The printed boundary-value inequality evaluated verbatim.

    ``printed_*`` use the function, constants and right-hand side exactly as
    printed for the family. ``telescoped_*`` is the inequality that actually
    follows from the coefficient sum: the same kind of left side on the
    shifted pair ``(p+1, q+1)`` against ``2b(1-a) pq``.
    """

    form: str
    printed_pair: tuple[float, float]
    printed_lhs: float
    printed_rhs: float
    printed_holds: bool
    telescoped_lhs: float
    telescoped_rhs: float
    telescoped_holds: bool
    agrees_with_sum: bool


_FORMS = {
    ("lommel", False): "lommel starlike bound",
    ("lommel", True): "lommel convex bound",
    ("struve", False): "struve starlike bound",
    ("struve", True): "struve convex bound",
    ("bessel", False): "bessel starlike bound",
    ("bessel", True): "bessel convex bound",
}


def paper_inequality(
    fn: NormalizedFunction,
    cls: ClassId,
    params: OrderTypeParams,
    sum_member: bool,
    rel_tol: float = DEFAULT_REL_TOL,
) -> PaperRhsComparison:
    cls = ClassId(cls)
    pair = fn.pair
    _require_positive(pair)
    a, b = params.alpha, params.beta
    family = fn.family if fn.family in ("bessel", "struve") else "lommel"

    # shifted function as printed: s_{mu+2,nu}, h_{nu+2}, j_{nu+1}
    if family == "struve":
        printed_pair = struve_pair(fn.nu + 2.0)
        rhs = 8 * b * (1 - a) / (3 * (2 * fn.nu + 3))
    elif family == "bessel":
        printed_pair = bessel_pair(fn.nu + 1.0)
        rhs = 2 * b * (1 - a) / (fn.nu + 1)
    else:
        printed_pair = pair.shifted()
        rhs = 8 * b * (1 - a) / ((2 * pair.p) * (2 * pair.q))

    sp = boundary_sums(printed_pair, rel_tol)
    st = boundary_sums(pair.shifted(), rel_tol)
    if cls.convex:
        lhs = (1 + b) * sp.s2 + 2 * (1 + b) * sp.s1 + 2 * (1 - a) * (2 * b - 1) * sp.s0
        t_lhs = (1 + b) * st.s2 + 2 * (1 + 2 * b - a * b) * st.s1 + 2 * b * (1 - a) * st.s0
    else:
        lhs = (1 + b) * sp.s1 + 2 * b * (1 - a) * sp.s0
        t_lhs = (1 + b) * st.s1 + 2 * b * (1 - a) * st.s0
    t_rhs = params.threshold * pair.p * pair.q
    holds = lhs <= rhs
    return PaperRhsComparison(
        form=_FORMS[(family, cls.convex)],
        printed_pair=(printed_pair.p, printed_pair.q),
        printed_lhs=lhs,
        printed_rhs=rhs,
        printed_holds=holds,
        telescoped_lhs=t_lhs,
        telescoped_rhs=t_rhs,
        telescoped_holds=t_lhs <= t_rhs,
        agrees_with_sum=holds == sum_member,
    )


@dataclass(frozen=True)
class CriterionReport:
    function: str
    class_id: ClassId
    alpha: float
    beta: float
    sum_value: float
    threshold: float
    closed_form_value: float
    verdict: Verdict
    margin: float
    near_boundary: bool
    paper_rhs_comparison: PaperRhsComparison | None = None

    def to_dict(self) -> dict:
        out = asdict(self)
        out["class_id"] = self.class_id.value
        out["verdict"] = self.verdict.value
        return out


def _check_domain(fn: NormalizedFunction) -> None:
    if fn.pair.positive:
        return
    hint = {
        "bessel": "nu > -1",
        "struve": "nu > -3/2",
        "lommel": "mu > nu - 3 and mu + nu > -3",
    }.get(fn.family, "p > 0 and q > 0")
    raise DomainError(f"{fn.label}: the criteria require {hint}")


def check_membership(
    fn: NormalizedFunction,
    cls: ClassId,
    params: OrderTypeParams,
    rel_tol: float = DEFAULT_REL_TOL,
    *,
    compare_paper: bool = False,
) -> CriterionReport:
    """Decide membership of ``fn`` in ``cls`` from the coefficient sum.

    T* and C need the t-type kernel and the verdict is exact. S* and K take
    the s-type (or unconvolved) function; the sum is then only sufficient and
    a failure is reported as Inconclusive.
    """
    cls = ClassId(cls)
    if cls.exact and fn.kernel is not Kernel.NEGATIVE_TAIL:
        raise KernelMismatchError(f"{cls.symbol} needs a t-type function, got {fn.label}")
    if not cls.exact and fn.kernel is Kernel.NEGATIVE_TAIL:
        raise KernelMismatchError(f"{cls.symbol} needs an s-type function, got {fn.label}")
    _check_domain(fn)

    if cls.convex:
        total = lemma2_sum(params, fn.pair, rel_tol)
        closed = closed_form_lemma2(params, fn.pair, rel_tol)
    else:
        total = lemma1_sum(params, fn.pair, rel_tol)
        closed = closed_form_lemma1(params, fn.pair, rel_tol)
    threshold = params.threshold
    tol = 4 * rel_tol * max(1.0, total)
    margin = threshold - total
    if margin >= -tol:
        verdict = Verdict.MEMBER
    else:
        verdict = Verdict.NOT_MEMBER if cls.exact else Verdict.INCONCLUSIVE
    comparison = None
    if compare_paper:
        comparison = paper_inequality(fn, cls, params, verdict is Verdict.MEMBER, rel_tol)
    return CriterionReport(
        function=fn.label,
        class_id=cls,
        alpha=params.alpha,
        beta=params.beta,
        sum_value=total,
        threshold=threshold,
        closed_form_value=closed,
        verdict=verdict,
        margin=margin,
        near_boundary=abs(margin) <= tol,
        paper_rhs_comparison=comparison,
    )


def corollary_beta1(
    fn: NormalizedFunction,
    cls: ClassId,
    alpha: float,
    rel_tol: float = DEFAULT_REL_TOL,
    **kwargs,
) -> CriterionReport:
    """Starlike/convex of order ``alpha`` (type 1)."""
    return check_membership(fn, cls, OrderTypeParams(alpha, 1.0), rel_tol, **kwargs)
