"""Delta-convex sets in small finite fields.

For q = 3 all 511 nonempty subsets of F_9 are scanned.  For every prime q it
also tabulates the hulls of pairs, which are the affine F_q-lines because
Delta meets 1 - Delta in all of K.
"""

import argparse
from collections import Counter

from galnumrange.field_core import finite_field
from galnumrange.geometry import convex_subsets, hull_pair, interval_codes


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    args = ap.parse_args()

    f9 = finite_field(3, 1)
    sizes = Counter(len(s) for s in convex_subsets(f9))
    print(f"F_9: {sum(sizes.values())} Delta-convex subsets, by size {dict(sorted(sizes.items()))}")

    for p in args.primes:
        ctx = finite_field(p, 1)
        els = list(ctx.l_elements())
        hulls = {hull_pair(a, b) for i, a in enumerate(els) for b in els[i + 1:]}
        hsizes = Counter(len(h) for h in hulls)
        print(
            f"q={p}: Delta & (1 - Delta) = {[ctx.k_format(t) for t in interval_codes(ctx)]}, "
            f"{len(hulls)} distinct pair hulls, sizes {dict(hsizes)}"
        )


if __name__ == "__main__":
    main()
