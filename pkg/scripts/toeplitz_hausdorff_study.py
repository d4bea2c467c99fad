"""Residuals and bisection depth of fill_segment across sizes and tolerances.

    python scripts/toeplitz_hausdorff_study.py --trials 200 --csv results/fill.csv
"""

import argparse
import csv
import time
from pathlib import Path

import numpy as np

from galnumrange.realclosed_approx import ConvergenceError, fill_segment, random_unit_vectors


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--sizes", type=int, nargs="+", default=[2, 3, 5, 8, 12])
    ap.add_argument("--tols", type=float, nargs="+", default=[1e-6, 1e-8, 1e-10, 1e-12])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv")
    args = ap.parse_args()

    rows = []
    print(f"{'n':>3} {'tol':>8} {'ok':>5} {'stall':>5} {'worst value':>12} {'worst unit':>11} {'mean it':>8} {'ms/fill':>8}")
    for n in args.sizes:
        for tol in args.tols:
            rng = np.random.default_rng(args.seed)
            ok = stall = 0
            worst = worst_unit = 0.0
            its = []
            t0 = time.perf_counter()
            for _ in range(args.trials):
                m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
                u, v = random_unit_vectors(n, 2, rng)
                s = float(rng.uniform(0.05, 0.95))
                try:
                    r = fill_segment(m, u, v, s, tol=tol)
                except ConvergenceError:
                    stall += 1
                    continue
                ok += 1
                worst = max(worst, r.value_residual)
                worst_unit = max(worst_unit, r.unit_residual)
                its.append(r.iterations)
            ms = 1000 * (time.perf_counter() - t0) / args.trials
            mean_it = float(np.mean(its)) if its else float("nan")
            rows.append(dict(n=n, tol=tol, ok=ok, stalled=stall, worst_value=worst, worst_unit=worst_unit, mean_iterations=mean_it, ms_per_fill=ms))
            print(f"{n:>3} {tol:>8.0e} {ok:>5} {stall:>5} {worst:>12.2e} {worst_unit:>11.2e} {mean_it:>8.1f} {ms:>8.2f}")

    if args.csv:
        path = Path(args.csv)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
