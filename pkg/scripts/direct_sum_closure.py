"""How often Num(A + B) (direct sum) differs from the Delta-convex closure of
Num(A) and Num(B), per field and block size.

Over F_4 the closure step is trivial (Delta meets 1 - Delta only in {0, 1}),
so any extra value of the direct sum shows up as a mismatch.
"""

import argparse

import numpy as np

from galnumrange.field_core import ext_tables, finite_field
from galnumrange.geometry import delta_convex_closure
from galnumrange.numrange import num_range_codes, sphere_codes
from galnumrange.verify import random_matrix_codes


def mismatch_rate(ctx, n, trials, rng):
    small, big = sphere_codes(ctx, n), sphere_codes(ctx, 2 * n)
    bad = 0
    for _ in range(trials):
        a = random_matrix_codes(ctx, n, rng)
        b = random_matrix_codes(ctx, n, rng)
        s = np.zeros((2 * n, 2 * n), dtype=np.int64)
        s[:n, :n], s[n:, n:] = a, b
        lhs = {int(c) for c in num_range_codes(ctx, s, big)}
        union = {ctx.from_code(int(c)) for c in np.concatenate([num_range_codes(ctx, a, small), num_range_codes(ctx, b, small)])}
        rhs = {z.code for z in delta_convex_closure(union, ctx)}
        bad += lhs != rhs
    return bad


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    for p, m in [(2, 1), (3, 1), (5, 1)]:
        ctx = finite_field(p, m)
        ext_tables(ctx)
        for n in (1, 2):
            if ctx.q == 5 and n == 2:
                continue  # the sphere in L^4 has about 10^5 points; slow in a loop
            bad = mismatch_rate(ctx, n, args.trials, np.random.default_rng(args.seed))
            print(f"{ctx.spec():<16} n={n}: {bad}/{args.trials} pairs with Num(A + B) != closure")


if __name__ == "__main__":
    main()
