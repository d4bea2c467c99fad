"""Acceptance suite: one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py`` or ``python tests/test_acceptance.py``.
Each criterion recomputes its claim through the library and, where cheap, through
an independent brute-force oracle built only from scalar arithmetic.
"""

import itertools
import sys
import time

import pytest

from galnumrange.field_core import finite_field, rational_field
from galnumrange.forms import delta_interval_sample
from galnumrange.geometry import convex_subsets
from galnumrange.verify import (
    verify_convex_f9,
    verify_decomposition,
    verify_delta_equals_k,
    verify_f4_sphere_example,
    verify_rational_gap,
    verify_ellipse_ranges,
    verify_hermitian_criterion,
    verify_direct_sum,
    verify_witnesses,
    verify_toeplitz_hausdorff,
)


# --------------------------------------------------------------------------
# scalar-level oracles


def brute_sphere(ctx, n):
    return [
        u for u in itertools.product(ctx.l_elements(), repeat=n)
        if sum_k(ctx, [x.norm() for x in u]) == ctx.k_one
    ]


def sum_k(ctx, xs):
    s = ctx.k_zero
    for x in xs:
        s = ctx.k_add(s, x)
    return s


def brute_nu(rows, u):
    n = len(u)
    return sum((u[i].conj() * rows[i][j] * u[j] for i in range(n) for j in range(n)), u[0].ctx.zero)


def failed_names(rep):
    return ", ".join(f"{a.name} (expected {a.expected!r}, got {_short(a.actual)})" for a in rep.failures())


def _short(x, limit=80):
    s = repr(x)
    return s if len(s) <= limit else s[:limit] + "..."


# --------------------------------------------------------------------------
# criteria: each returns (passed, detail)


def criterion_1():
    f4 = finite_field(2, 1)
    sphere = brute_sphere(f4, 2)
    diag_ok = zero = herm_zero = 0
    for flat in itertools.product(f4.l_elements(), repeat=4):
        rows = (flat[:2], flat[2:])
        num = {brute_nu(rows, u) for u in sphere}
        diag_ok += num == {rows[0][0], rows[1][1]}
        if num == {f4.zero}:
            zero += 1
            herm_zero += all(rows[i][j] == rows[j][i].conj() for i in range(2) for j in range(2))
    rep = verify_f4_sphere_example()
    oracle_sphere = sorted((str(a), str(b)) for a, b in sphere)
    agree = rep.evidence["sphere_size"] == len(sphere) and (diag_ok, zero, herm_zero) == (256, 16, 4)
    passed = rep.status == "pass" and oracle_sphere == [("0", "1"), ("1", "0")] and agree
    detail = (
        f"sphere C_2(1) has {len(sphere)} points {oracle_sphere}; expected 2. "
        f"diagonal ranges {diag_ok}/256, Num={{0}}: {zero}, Hermitian among them: {herm_zero}"
    )
    return passed, detail


def criterion_2():
    rep = verify_delta_equals_k()
    oracle_ok = True
    for p, m in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)]:
        ctx = finite_field(p, m)
        fibers = {}
        for z in ctx.l_elements():
            if not z.is_zero():
                fibers[z.norm()] = fibers.get(z.norm(), 0) + 1
        oracle_ok &= len(fibers) == ctx.q - 1 and set(fibers.values()) == {ctx.q + 1}
    return rep.status == "pass" and oracle_ok, "q in {2,3,4,5,7,8,9}: Delta = K and N is (q+1)-to-1 " + (
        "(suite and oracle agree)" if oracle_ok else "oracle disagrees"
    )


def criterion_3():
    f9 = finite_field(3, 1)
    els = list(f9.l_elements())
    norms = {z.norm() for z in els}
    ts = [f9.embed(t) for t in f9.k_elements() if t in norms and f9.k_sub(1, t) in norms]
    count = 0
    for mask in range(1, 1 << 9):
        s = {els[i] for i in range(9) if mask >> i & 1}
        count += all(t * a + (f9.one - t) * b in s for a in s for b in s for t in ts)
    rep = verify_convex_f9()
    lib = len(convex_subsets(f9))
    return rep.status == "pass" and count == lib == 22, f"oracle scan of 511 subsets: {count}; library: {lib}; expected 22"


def criterion_4():
    reports = [verify_ellipse_ranges(finite_field(3, 1)), verify_ellipse_ranges(finite_field(5, 1))]
    # oracle: value sets from the ellipse definitions over pairs (x, y) with N(x) + N(y) = 1
    oracle_ok = True
    for ctx in (finite_field(3, 1), finite_field(5, 1)):
        pairs = brute_sphere(ctx, 2)
        one_focus = {x.conj() * y for x, y in pairs}
        num0 = {brute_nu(((ctx.zero, ctx.one), (ctx.zero, ctx.zero)), u) for u in pairs}
        oracle_ok &= one_focus == num0
        for b in ctx.l_elements():
            if b.is_zero():
                continue
            two_foci = {b * y * x.conj() + y * y.conj() for x, y in pairs}
            num = {brute_nu(((ctx.zero, b), (ctx.zero, ctx.one)), u) for u in pairs}
            oracle_ok &= two_foci == num
    passed = all(r.status == "pass" for r in reports) and oracle_ok
    return passed, "; ".join(f"{r.suite}: {r.status}" for r in reports) + f"; definition oracle {'agrees' if oracle_ok else 'DISAGREES'}"


def criterion_5():
    reports = [verify_direct_sum(finite_field(2, 1), 100, 0), verify_direct_sum(finite_field(3, 1), 100, 0)]
    detail = "; ".join(f"{r.suite}: {r.evidence['failures']}/100 pairs differ" for r in reports)
    if reports[0].witnesses:
        detail += f"; e.g. {reports[0].witnesses[0]}"
    return all(r.status == "pass" for r in reports), detail


def criterion_6():
    rep = verify_witnesses(0)
    qi = rational_field(-1)
    ts = delta_interval_sample(qi, 20)
    ok = rep.status == "pass" and len(ts) == 20 and all(p.recheck() for p in ts)
    return ok, f"witness suite: {rep.status}" + (f" [{failed_names(rep)}]" if rep.failures() else "")


def criterion_7():
    rep = verify_rational_gap()
    return rep.status == "pass", f"rational gap suite: {rep.status}; " + " | ".join(rep.witnesses)


def criterion_8():
    rep = verify_decomposition(1000, 0)
    return rep.status == "pass", "; ".join(f"{a.name}: {a.actual} bad" for a in rep.assertions)


def criterion_9():
    k9 = verify_hermitian_criterion(finite_field(3, 2), 1000, 0)
    k25 = verify_hermitian_criterion(finite_field(5, 2), 1000, 0)
    f4 = verify_hermitian_criterion(finite_field(2, 1), 1000, 0)
    l9 = verify_hermitian_criterion(finite_field(3, 1), 1000, 0)
    l25 = verify_hermitian_criterion(finite_field(5, 1), 1000, 0)
    sampled = all(r.evidence["matrices"] >= 1000 for r in (k9, k25))
    pairs_found = all(r.hypotheses[-1]["holds"] for r in (k9, k25))
    passed = sampled and pairs_found and all(r.status == "pass" for r in (k9, k25, f4))
    f4_zero = next(a.actual for a in f4.assertions if a.name == "non-Hermitian M with Num(M) = {0}")
    detail = (
        f"K=F_9: {k9.evidence['violations']} violations in {k9.evidence['matrices']}; "
        f"K=F_25: {k25.evidence['violations']} in {k25.evidence['matrices']}; "
        f"F_4: {f4_zero} non-Hermitian with Num={{0}} ({f4.evidence['violations']} with Num inside K); "
        f"L=F_9, L=F_25 (no pair, {l9.status}): {l9.evidence['violations']} and {l25.evidence['violations']} violations"
    )
    return passed, detail


def criterion_10():
    rep = verify_toeplitz_hausdorff(100, 1e-8, 0)
    ev = rep.evidence
    succ = rep.assertions[0]
    return rep.status == "pass", (
        f"{succ.actual}/{succ.expected} fills; worst value residual {ev['worst_value_residual']:.2e}, "
        f"worst unit residual {ev['worst_unit_residual']:.2e}"
    )


CRITERIA = {
    1: (criterion_1, 1.0),
    2: (criterion_2, 1.0),
    3: (criterion_3, 5.0),
    4: (criterion_4, 30.0),
    5: (criterion_5, 60.0),
    6: (criterion_6, 5.0),
    7: (criterion_7, 1.0),
    8: (criterion_8, None),
    9: (criterion_9, None),
    10: (criterion_10, 10.0),
}


def run_criterion(k):
    fn, limit = CRITERIA[k]
    t0 = time.perf_counter()
    passed, detail = fn()
    dt = time.perf_counter() - t0
    in_time = limit is None or dt < limit
    ok = passed and in_time
    budget = f"< {limit:g} s" if limit else "no limit"
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'} ({dt:.2f} s, {budget}) {detail}"
    if not in_time:
        line += " [too slow]"
    return ok, line


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    ok, line = run_criterion(k)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
