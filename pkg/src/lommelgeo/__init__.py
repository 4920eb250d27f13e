"""Starlikeness and convexity of normalized Lommel, Struve and Bessel functions."""
from .criteria import (
    ClassId,
    CriterionReport,
    KernelMismatchError,
    OrderTypeParams,
    PaperRhsComparison,
    Verdict,
    check_membership,
    closed_form_lemma1,
    closed_form_lemma2,
    corollary_beta1,
    kernel_for,
    lemma1_sum,
    lemma2_sum,
)
from .oracle import ConsistencyReport, DiskGrid, SupReport, convex_sup, cross_validate, starlike_sup
from .scan import FamilyLine, ScanRow, ThresholdResult, scan_grid, scan_rect, threshold_bisect, write_csv
from .series import (
    BoundarySums,
    ConvergenceError,
    DomainError,
    EvalResult,
    Kernel,
    NormalizedFunction,
    ParamPair,
    PoleError,
    boundary_sums,
    coefficient,
    lommel_pair,
    pochhammer,
    series_eval,
)

__version__ = "0.1.0"
