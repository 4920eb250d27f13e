"""Command-line front end.

    lommelgeo eval   --family struve --nu 2 --z 0.5 --order 1
    lommelgeo check  --family bessel --nu 1 --class t-star [--compare-paper-rhs]
    lommelgeo verify --family bessel --nu 1 --class t-star
    lommelgeo scan   --family bessel --nu 0:5:1 --class t-star --format csv
    lommelgeo bisect --family bessel --class t-star --bracket 1:3

Exit status is 0 on success and 2 on parse, domain or output errors.
"""
from __future__ import annotations

import argparse
import io
import json
import sys

from .criteria import ClassId, KernelMismatchError, OrderTypeParams, check_membership, kernel_for
from .oracle import DiskGrid, cross_validate
from .scan import FamilyLine, NoSignChangeError, parse_range, scan_grid, scan_rect, threshold_bisect, write_csv
from .series import DEFAULT_REL_TOL, ConvergenceError, DomainError, Kernel, NormalizedFunction, series_eval

KERNELS = {"none": Kernel.NONE, "s-type": Kernel.ALTERNATING, "t-type": Kernel.NEGATIVE_TAIL}


class UsageError(Exception):
    pass


def _function(args, kernel: Kernel) -> NormalizedFunction:
    if args.nu is None:
        raise UsageError("--nu is required")
    if args.family == "lommel":
        if args.mu is None:
            raise UsageError("--family lommel requires both --mu and --nu")
        return NormalizedFunction.lommel(float(args.mu), float(args.nu), kernel)
    if args.family == "struve":
        return NormalizedFunction.struve(float(args.nu), kernel)
    return NormalizedFunction.bessel(float(args.nu), kernel)


def _kernel(args, cls: ClassId | None) -> Kernel:
    if args.kernel == "auto":
        return Kernel.NONE if cls is None else kernel_for(cls)
    return KERNELS[args.kernel]


def _human(d: dict, indent: int = 0) -> str:
    lines = []
    pad = " " * indent
    for key, value in d.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_human(value, indent + 2))
        else:
            lines.append(f"{pad}{key:<20} {value}")
    return "\n".join(lines)


def _emit(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2) + "\n"
    return _human(payload) + "\n"


def cmd_eval(args) -> str:
    fn = _function(args, _kernel(args, None))
    res = series_eval(fn, complex(args.z.replace(" ", "")), args.order, args.tol)
    payload = {
        "function": fn.label,
        "z": {"re": complex(args.z).real, "im": complex(args.z).imag},
        "order": args.order,
        "value": {"re": res.value.real, "im": res.value.imag},
        "tail_bound": res.tail_bound,
        "terms_used": res.terms_used,
    }
    if args.format == "human":
        v = res.value
        value = f"{v.real:.17g}" if v.imag == 0 else f"{v.real:.17g} {v.imag:+.17g}j"
        return f"{fn.label}, derivative {args.order} at z={args.z}: {value} (tail <= {res.tail_bound:.3g})\n"
    return _emit(payload, args.format)


def cmd_check(args) -> str:
    cls = ClassId(args.class_id)
    fn = _function(args, _kernel(args, cls))
    params = OrderTypeParams(args.alpha, args.beta)
    rep = check_membership(fn, cls, params, args.tol, compare_paper=args.compare_paper_rhs)
    if args.format == "json":
        return _emit(rep.to_dict(), "json")
    out = [
        f"function        {rep.function}",
        f"class           {cls.symbol}(alpha={rep.alpha:g}, beta={rep.beta:g})",
        f"sum             {rep.sum_value:.17g}",
        f"threshold       {rep.threshold:.17g}",
        f"closed form     {rep.closed_form_value:.17g}",
        f"margin          {rep.margin:.6g}" + ("  (near boundary)" if rep.near_boundary else ""),
        f"verdict         {rep.verdict.value}",
    ]
    cmp = rep.paper_rhs_comparison
    if cmp is not None:
        out += [
            f"printed inequality ({cmp.form})",
            f"  printed lhs     {cmp.printed_lhs:.17g}  (shifted pair {cmp.printed_pair[0]:g}, {cmp.printed_pair[1]:g})",
            f"  printed rhs     {cmp.printed_rhs:.17g}",
            f"  printed holds   {cmp.printed_holds}",
            f"  telescoped lhs  {cmp.telescoped_lhs:.17g}",
            f"  telescoped rhs  {cmp.telescoped_rhs:.17g}  (= 2 beta (1-alpha) p q)",
            f"  agrees with sum {cmp.agrees_with_sum}",
        ]
    return "\n".join(out) + "\n"


def cmd_verify(args) -> str:
    cls = ClassId(args.class_id)
    fn = _function(args, _kernel(args, cls))
    params = OrderTypeParams(args.alpha, args.beta)
    grid = DiskGrid(args.n_radii, args.n_angles, args.r_max)
    rep = cross_validate(fn, cls, params, grid, args.tol)
    if args.format == "json":
        return _emit(rep.to_dict(), "json")
    lines = [
        f"function        {rep.criterion.function}",
        f"class           {cls.symbol}(alpha={params.alpha:g}, beta={params.beta:g})",
        f"sum / threshold {rep.criterion.sum_value:.12g} / {rep.criterion.threshold:.12g}",
        f"verdict         {rep.criterion.verdict.value}",
        f"sampled sup     {rep.sampled.sup_modulus:.12g} at z={rep.sampled.argmax_point:.6g}"
        f" (skipped {rep.sampled.skipped_points})",
    ]
    if rep.boundary_check is not None:
        lines.append(f"sup at r=0.999  {rep.boundary_check.sup_modulus:.12g}")
    lines.append(f"consistent      {not rep.flagged}  ({rep.note})")
    return "\n".join(lines) + "\n"


def cmd_scan(args) -> str:
    cls = ClassId(args.class_id)
    params = OrderTypeParams(args.alpha, args.beta)
    if args.nu is None:
        raise UsageError("--nu is required")
    nus = parse_range(args.nu)
    if args.family == "lommel" and args.mu is not None:
        rows = scan_rect(parse_range(args.mu), nus, params, cls, args.tol)
    else:
        rows = scan_grid(FamilyLine(args.family, args.offset), nus, params, cls, args.tol)
    if args.format == "csv":
        buf = io.StringIO()
        write_csv(rows, buf)
        return buf.getvalue()
    if args.format == "json":
        return json.dumps(
            [dict(zip(("family", "mu", "nu", "alpha", "beta", "class", "sum_value", "threshold", "verdict"),
                      (r.family, r.mu, r.nu, r.alpha, r.beta, r.class_id.value, r.sum_value, r.threshold, r.verdict)))
             for r in rows],
            indent=2,
        ) + "\n"
    return "".join(
        f"{r.family:<7} mu={r.mu:<10.6g} nu={r.nu:<10.6g} sum={r.sum_value:<14.10g} "
        f"threshold={r.threshold:<8.6g} {r.verdict}\n"
        for r in rows
    )


def cmd_bisect(args) -> str:
    cls = ClassId(args.class_id)
    params = OrderTypeParams(args.alpha, args.beta)
    lo, hi = (float(x) for x in args.bracket.split(":"))
    res = threshold_bisect(FamilyLine(args.family, args.offset), cls, params, (lo, hi), args.abs_tol, args.tol)
    if args.format == "json":
        return _emit(res.to_dict(), "json")
    text = (
        f"line            {res.line_description}\n"
        f"nu_star         {res.nu_star:.17g}\n"
        f"bracket         [{res.bracket[0]:.17g}, {res.bracket[1]:.17g}]\n"
        f"residual        {res.residual:.3g}\n"
        f"monotone        {res.monotone_check}\n"
    )
    if not res.monotone_check:
        text += f"sign changes    {list(res.sign_changes)}\n"
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lommelgeo", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=("bessel", "struve", "lommel"), default="bessel")
    common.add_argument("--mu")
    common.add_argument("--nu")
    common.add_argument("--tol", type=float, default=DEFAULT_REL_TOL)
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    classed = argparse.ArgumentParser(add_help=False)
    classed.add_argument("--alpha", type=float, default=0.0)
    classed.add_argument("--beta", type=float, default=1.0)
    classed.add_argument("--class", dest="class_id", choices=[c.value for c in ClassId], default="t-star")

    kernel = argparse.ArgumentParser(add_help=False)
    kernel.add_argument("--kernel", choices=("auto", *KERNELS), default="auto")

    p = sub.add_parser("eval", parents=[common, kernel], help="evaluate a normalized function")
    p.add_argument("--z", default="1")
    p.add_argument("--order", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(run=cmd_eval)

    p = sub.add_parser("check", parents=[common, classed, kernel], help="coefficient criterion verdict")
    p.add_argument("--compare-paper-rhs", action="store_true")
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("verify", parents=[common, classed, kernel], help="criterion vs disk sampling")
    p.add_argument("--n-radii", type=int, default=32)
    p.add_argument("--n-angles", type=int, default=256)
    p.add_argument("--r-max", type=float, default=0.995)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("scan", parents=[common, classed], help="verdicts over a nu range")
    p.add_argument("--offset", type=float, default=0.0, help="mu - nu on the lommel line")
    p.add_argument("--format", choices=("human", "json", "csv"), default="csv")
    p.set_defaults(run=cmd_scan)

    p = sub.add_parser("bisect", parents=[common, classed], help="locate the membership boundary in nu")
    p.add_argument("--offset", type=float, default=0.0)
    p.add_argument("--bracket", required=True, help="lo:hi")
    p.add_argument("--abs-tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(run=cmd_bisect)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text = args.run(args)
    except (UsageError, DomainError, KernelMismatchError, NoSignChangeError, ConvergenceError, ValueError) as exc:
        print(f"lommelgeo {args.command}: error: {exc}", file=stderr)
        return 2
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"lommelgeo {args.command}: cannot write {args.output}: {exc}", file=stderr)
            return 2
    else:
        stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
