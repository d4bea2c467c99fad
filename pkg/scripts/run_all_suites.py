"""Run every verification suite and write one JSON report per suite.

    python scripts/run_all_suites.py --seed 0 --out results/suites.json
"""

import argparse
import json
from pathlib import Path

from galnumrange.verify import run_suites


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--selector", default="all")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="results/suites.json")
    args = ap.parse_args()

    reports = run_suites(args.selector, args.seed)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps([r.to_dict(timing=True) for r in reports], indent=2) + "\n")

    width = max(len(r.suite) for r in reports)
    for r in reports:
        print(f"{r.suite:<{width}}  {r.status:<15} {r.seconds:7.2f} s")
        for a in r.failures():
            print(f"{'':<{width}}    failed: {a.name}")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
