"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that conftest.py prints in the terminal
summary; ``python tests/test_acceptance.py`` runs them standalone.
"""
import json
import math
import time
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from lommelgeo.cli import run
from lommelgeo.criteria import (
    ClassId,
    OrderTypeParams,
    Verdict,
    closed_form_lemma1,
    closed_form_lemma2,
    lemma1_sum,
    lemma2_sum,
)
from lommelgeo.oracle import DiskGrid, cross_validate
from lommelgeo.scan import FamilyLine, frange, scan_grid, threshold_bisect
from lommelgeo.series import Kernel, NormalizedFunction, ParamPair, boundary_sums, coefficient, lommel_pair

RESULTS: list[str] = []
T = Kernel.NEGATIVE_TAIL
README = Path(__file__).resolve().parents[1] / "README.md"

# Frozen by scripts/oracle_values.py (mpmath nsum, 60 digits); reproduced
# below by exact-rational partial sums before being compared to the library.
LEMMA1_0_1_PAIR_1_2 = 2.5591706046721345349
BOUNDARY_2_3 = (1.1812737092746581268, 1.3778968953974764081, 0.42547991847970531054)
I0_2 = 2.2795853023360672674
I1_2 = 1.5906368546373290634
NU_STAR_BESSEL_T_0_1 = 1.476799456425780676


def record(n, text, ok, detail=""):
    RESULTS.append(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {text}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {n} failed: {text} {detail}"


def rational_sum(term, n_terms=30):
    return sum((term(k) for k in range(n_terms)), Fraction(0))


def rational_c(p, q, k):
    p, q = Fraction(p), Fraction(q)
    out = Fraction(1)
    for j in range(k):
        out /= (p + j) * (q + j)
    return out


def test_criterion_1_reductions():
    t0 = time.perf_counter()
    worst = 0.0
    for nu in (-0.4, 0, 0.5, 1, 2, 5):
        for k in range(31):
            for a, b in (
                (coefficient(lommel_pair(nu - 1, nu), k), coefficient(ParamPair(1, nu + 1), k)),
                (coefficient(lommel_pair(nu, nu), k), coefficient(ParamPair(1.5, nu + 1.5), k)),
            ):
                worst = max(worst, abs(a - b) / abs(b))
    elapsed = time.perf_counter() - t0
    record(1, "Lommel(nu-1,nu)=Bessel(nu), Lommel(nu,nu)=Struve(nu) coefficients to 1e-15 in < 1 s",
           worst <= 1e-15 and elapsed < 1.0, f"max rel err {worst:.1e}, {elapsed:.3f} s")


def test_criterion_2_closed_form_equivalence():
    rng = np.random.default_rng(20261016)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(200):
        alpha = rng.uniform(0, 1)
        beta = 1 - rng.uniform(0, 1)  # (0, 1]
        p, q = 10 * (1 - rng.random(2))  # (0, 10]
        params, pair = OrderTypeParams(alpha, beta), ParamPair(p, q)
        for direct, closed in ((lemma1_sum, closed_form_lemma1), (lemma2_sum, closed_form_lemma2)):
            s = direct(params, pair)
            worst = max(worst, abs(closed(params, pair) - s) / max(1.0, s))
    elapsed = time.perf_counter() - t0
    record(2, "closed forms equal the direct coefficient sums to 1e-10*max(1,sum) on 200 random tuples in < 5 s",
           worst <= 1e-10 and elapsed < 5.0, f"max scaled err {worst:.1e}, {elapsed:.2f} s")


def test_criterion_3_frozen_regressions():
    # independent 30-term exact-rational reproduction of the frozen values
    # sum_{j>=1} (2j + 2) c_j at alpha=0, beta=1
    hand_l1 = float(rational_sum(lambda i: (2 * (i + 1) + 2) * rational_c(1, 2, i + 1)))
    hand_bs = [
        float(rational_sum(lambda k: w(k) * rational_c(2, 3, k)))
        for w in (lambda k: 1, lambda k: k + 1, lambda k: k * (k + 1))
    ]
    assert abs(hand_l1 - LEMMA1_0_1_PAIR_1_2) < 1e-14
    assert np.allclose(hand_bs, BOUNDARY_2_3, rtol=0, atol=1e-14)

    l1 = lemma1_sum(OrderTypeParams(0, 1), ParamPair(1, 2))
    bs = boundary_sums(ParamPair(2, 3))
    err = max(abs(l1 - LEMMA1_0_1_PAIR_1_2), *(abs(a - b) for a, b in zip(bs, BOUNDARY_2_3)))
    record(3, "lemma1_sum(0,1,(1,2)) and boundary_sums(2,3) reproduce frozen oracle values to 1e-9",
           err <= 1e-9, f"lemma1={l1:.10f}, S=({bs.s0:.10f}, {bs.s1:.10f}, {bs.s2:.10f}), max err {err:.1e}")


@pytest.mark.xfail(strict=True, reason="printed literals 2.5591738/1.1812764/1.3778939 are off by ~3e-6; "
                                       "exact summation gives 2.5591706/1.1812737/1.3778969")
def test_criterion_3_printed_literals():
    assert abs(lemma1_sum(OrderTypeParams(0, 1), ParamPair(1, 2)) - 2.5591738) <= 1e-7
    bs = boundary_sums(ParamPair(2, 3))
    assert abs(bs.s0 - 1.1812764) <= 1e-7 and abs(bs.s1 - 1.3778939) <= 1e-7


def test_criterion_4_modified_bessel_values():
    # I_n(2) = sum 1/(k! (k+n)!), summed independently with exact integers
    i0 = float(sum(Fraction(1, math.factorial(k) ** 2) for k in range(30)))
    i1 = float(sum(Fraction(1, math.factorial(k) * math.factorial(k + 1)) for k in range(30)))
    assert abs(i0 - I0_2) < 1e-15 and abs(i1 - I1_2) < 1e-15
    s0_11 = boundary_sums(ParamPair(1, 1)).s0
    s0_12 = boundary_sums(ParamPair(1, 2)).s0
    err = max(abs(s0_11 - i0), abs(s0_12 - i1))
    record(4, "S0(1,1)=I0(2) and S0(1,2)=I1(2) to 1e-9", err <= 1e-9,
           f"{s0_11:.12f}, {s0_12:.12f}, max err {err:.1e}")


CRITERION_5_POINTS = [
    # (family, mu, nu, alpha, beta)
    ("bessel", None, 0.5, 0.0, 1.0),
    ("bessel", None, 1.0, 0.0, 1.0),
    ("bessel", None, 1.0, 0.3, 0.7),
    ("bessel", None, 1.5, 0.0, 1.0),
    ("bessel", None, 1.5, 0.3, 0.7),
    ("bessel", None, 2.0, 0.0, 1.0),
    ("bessel", None, 2.0, 0.3, 0.7),
    ("bessel", None, 3.0, 0.3, 0.7),
    ("bessel", None, 8.0, 0.0, 1.0),
    ("bessel", None, 8.0, 0.3, 0.7),
    ("struve", None, -0.5, 0.5, 0.5),
    ("struve", None, 0.0, 0.0, 1.0),
    ("struve", None, 1.0, 0.0, 1.0),
    ("struve", None, 1.0, 0.5, 0.5),
    ("struve", None, 3.0, 0.5, 0.5),
    ("lommel", 0.0, 0.0, 0.2, 0.9),
    ("lommel", 1.0, 0.5, 0.2, 0.9),
    ("lommel", 2.0, -0.5, 0.2, 0.9),
    ("lommel", 4.0, 1.0, 0.2, 0.9),
    ("lommel", 3.0, 2.0, 0.6, 0.3),
]


def _fn(family, mu, nu):
    if family == "bessel":
        return NormalizedFunction.bessel(nu, T)
    if family == "struve":
        return NormalizedFunction.struve(nu, T)
    return NormalizedFunction.lommel(mu, nu, T)


def test_criterion_5_criterion_oracle_consistency():
    t0 = time.perf_counter()
    grid = DiskGrid(32, 256, 0.995)
    failures, counts = [], {Verdict.MEMBER: 0, Verdict.NOT_MEMBER: 0}
    for family, mu, nu, alpha, beta in CRITERION_5_POINTS:
        rep = cross_validate(_fn(family, mu, nu), ClassId.STARLIKE_NEG, OrderTypeParams(alpha, beta), grid)
        v = rep.criterion.verdict
        counts[v] += 1
        ok = not rep.flagged
        if v is Verdict.MEMBER:
            ok &= rep.sampled.sup_modulus < beta
        else:
            ok &= rep.boundary_check.sup_modulus > beta - 0.05
        if not ok:
            failures.append((family, mu, nu, alpha, beta))
    elapsed = time.perf_counter() - t0
    spans = counts[Verdict.MEMBER] > 0 and counts[Verdict.NOT_MEMBER] > 0
    record(5, "T* verdicts agree with disk sampling on 20 points in < 60 s",
           not failures and spans and len(CRITERION_5_POINTS) == 20 and elapsed < 60,
           f"{counts[Verdict.MEMBER]} Member / {counts[Verdict.NOT_MEMBER]} NotMember, "
           f"failures {failures}, {elapsed:.2f} s")


def test_criterion_6_monotonicity_and_ordering():
    rng = np.random.default_rng(6)
    ordered = True
    for _ in range(100):
        params = OrderTypeParams(rng.uniform(0, 1), 1 - rng.uniform(0, 1))
        pair = ParamPair(*(10 * (1 - rng.random(2))))
        ordered &= lemma2_sum(params, pair) >= 2 * lemma1_sum(params, pair)

    def flips(line):
        verdicts = [r.verdict for r in scan_grid(line, frange(0, 5, 0.05), OrderTypeParams(0, 1), ClassId.STARLIKE_NEG)]
        return sum(a != b for a, b in zip(verdicts, verdicts[1:])), verdicts

    n_bessel, verdicts = flips(FamilyLine("bessel"))
    monotone = n_bessel <= 1 and verdicts[-1] == "Member"
    extra = [flips(line)[0] for line in (FamilyLine("struve"), FamilyLine("lommel", 0.5))]
    record(6, "lemma2_sum >= 2*lemma1_sum on 100 inputs; verdict monotone along the Bessel line nu in [0,5]",
           ordered and monotone and all(n <= 1 for n in extra),
           f"Bessel flips {n_bessel}, Struve/Lommel(+0.5) flips {extra}")


def test_criterion_7_printed_bound_discrepancy():
    from io import StringIO

    out, err = StringIO(), StringIO()
    code = run(["check", "--family", "lommel", "--mu", "0", "--nu", "0", "--alpha", "0", "--beta", "1",
                "--class", "t-star", "--compare-paper-rhs", "--format", "json"], out, err)
    data = json.loads(out.getvalue())
    cmp = data["paper_rhs_comparison"]
    pq = 1.5 * 1.5
    # printed: bracket <= 2b(1-a)/(pq); from the sum: bracket <= 2b(1-a) pq
    thresholds_differ = (
        cmp["printed_rhs"] == pytest.approx(8 / 9)
        and cmp["telescoped_rhs"] == pytest.approx(4.5)
        and cmp["telescoped_rhs"] / cmp["printed_rhs"] == pytest.approx(pq**2)
    )
    sum_authoritative = (data["verdict"] == "Member") == (data["sum_value"] <= data["threshold"])
    readme = README.read_text(encoding="utf-8").lower()
    documented = "telescop" in readme and "(p q)^2" in readme
    record(7, "--compare-paper-rhs at (mu,nu,alpha,beta)=(0,0,0,1) exposes the printed threshold; README explains",
           code == 0 and thresholds_differ and sum_authoritative and documented,
           f"printed rhs {cmp['printed_rhs']:.6f} vs sum-derived {cmp['telescoped_rhs']:.6f}, verdict {data['verdict']}")


def test_criterion_8_bisection():
    res = threshold_bisect(FamilyLine("bessel"), ClassId.STARLIKE_NEG, OrderTypeParams(0, 1), (1, 3))
    err = abs(res.nu_star - NU_STAR_BESSEL_T_0_1)
    record(8, "Bessel/T*/alpha=0/beta=1 bisection: residual < 1e-9, monotone bracket, nu_star to 1e-8",
           res.residual < 1e-9 and res.monotone_check and err <= 1e-8,
           f"nu_star={res.nu_star:.12f}, residual {res.residual:.1e}, err {err:.1e}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
