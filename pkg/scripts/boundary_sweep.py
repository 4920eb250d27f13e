"""Scan T* and C verdicts along the three family lines and bisect boundaries.

    python scripts/boundary_sweep.py [outdir]

Writes one CSV per (line, class) and prints nu_star for each (alpha, beta).
"""
import sys
from pathlib import Path

from lommelgeo import ClassId, FamilyLine, OrderTypeParams, scan_grid, threshold_bisect, write_csv
from lommelgeo.scan import NoSignChangeError, frange

LINES = [FamilyLine("bessel"), FamilyLine("struve"), FamilyLine("lommel", 0.5)]
PARAMS = [OrderTypeParams(0.0, 1.0), OrderTypeParams(0.5, 1.0), OrderTypeParams(0.0, 0.5), OrderTypeParams(0.3, 0.7)]


def main(outdir: Path) -> None:
    outdir.mkdir(parents=True, exist_ok=True)
    for line in LINES:
        for cls in (ClassId.STARLIKE_NEG, ClassId.CONVEX_NEG):
            rows = scan_grid(line, frange(-0.9, 12, 0.1), OrderTypeParams(0, 1), cls)
            path = outdir / f"{line.family}{'_%g' % line.offset if line.family == 'lommel' else ''}_{cls.value}.csv"
            with open(path, "w", encoding="utf-8", newline="") as fh:
                write_csv(rows, fh)
            for params in PARAMS:
                try:
                    res = threshold_bisect(line, cls, params, (-0.9, 60))
                except NoSignChangeError:
                    print(f"{line.describe():<24} {cls.symbol:<3} a={params.alpha:<4g} b={params.beta:<4g} no boundary in [-0.9, 60]")
                    continue
                print(f"{line.describe():<24} {cls.symbol:<3} a={params.alpha:<4g} b={params.beta:<4g} "
                      f"nu* = {res.nu_star:.10f} monotone={res.monotone_check}")


if __name__ == "__main__":
    main(Path(sys.argv[1] if len(sys.argv) > 1 else "sweep_out"))
