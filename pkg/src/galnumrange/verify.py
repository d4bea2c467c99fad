"""Self-contained verification suites.

Every suite returns a Report: named assertions with expected and actual values,
the hypotheses that were checked, and witnesses.  Status is ``pass`` iff all
assertions hold; a suite whose hypotheses are absent reports
``not_applicable`` and records what it observed under ``evidence`` instead of
asserting it.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from .field_core import ExtScalar, FieldCtx, ext_tables, finite_field, rational_field
from .forms import (
    VectorL,
    basis_vector,
    delta_interval_sample,
    delta_membership,
    form,
    is_definite_up_to,
    norm_equation,
    orthogonalize,
    self_form,
    sphere_codes,
    unit_pairs,
    vector,
)
from .geometry import (
    EllipseSpec,
    convex_subsets,
    delta_convex_closure,
    ellipse_points,
)
from .numrange import (
    MatrixL,
    certify,
    compression_2x2,
    diag,
    direct_sum,
    ellipse_witnesses,
    eigenvalue_membership,
    herm_decompose,
    is_hermitian,
    matrix,
    nu_codes,
    num_range_codes,
    num_range_finite,
    segment_witnesses,
)
from . import realclosed_approx as rc
from .squares import is_square


# --------------------------------------------------------------------------
# reports


@dataclass
class Assertion:
    name: str
    expected: Any
    actual: Any
    passed: bool

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "pass": self.passed}


@dataclass
class Report:
    suite: str
    status: str = "pass"
    hypotheses: list[dict] = field(default_factory=list)
    assertions: list[Assertion] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    evidence: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def check(self, name: str, expected: Any, actual: Any) -> bool:
        ok = expected == actual
        self.assertions.append(Assertion(name, _jsonable(expected), _jsonable(actual), bool(ok)))
        return ok

    def hypothesis(self, name: str, holds: bool, detail: str = "") -> bool:
        self.hypotheses.append({"name": name, "holds": bool(holds), "detail": detail})
        return holds

    def finish(self, applicable: bool = True) -> "Report":
        if any(not a.passed for a in self.assertions):
            self.status = "fail"
        elif not applicable:
            self.status = "not_applicable"
        else:
            self.status = "pass"
        return self

    def failures(self) -> list[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "suite": self.suite,
            "status": self.status,
            "hypotheses": self.hypotheses,
            "assertions": [a.to_dict() for a in self.assertions],
            "witnesses": self.witnesses,
            "evidence": _jsonable(self.evidence),
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _jsonable(x: Any) -> Any:
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (np.floating,)):
        return float(x)
    if isinstance(x, (set, frozenset)):
        return sorted((_jsonable(v) for v in x), key=str)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


def _fmt_set(points) -> list[str]:
    return sorted(str(z) for z in points)


# --------------------------------------------------------------------------
# random matrices


def random_matrix_codes(ctx: FieldCtx, n: int, rng: np.random.Generator) -> np.ndarray:
    return rng.integers(0, ctx.q * ctx.q, size=(n, n))


def random_hermitian_codes(ctx: FieldCtx, n: int, rng: np.random.Generator) -> np.ndarray:
    T = ext_tables(ctx)
    m = rng.integers(0, T.order, size=(n, n))
    for i in range(n):
        m[i, i] = rng.integers(0, T.q) * T.q  # entries of K have zero im part
        for j in range(i):
            m[i, j] = T.conj[m[j, i]]
    return m


def hermitian_codes(ctx: FieldCtx, m: np.ndarray) -> bool:
    return bool(np.array_equal(ext_tables(ctx).conj[m.T], m))


def codes_to_matrix(ctx: FieldCtx, m: np.ndarray) -> MatrixL:
    return MatrixL(tuple(tuple(ctx.from_code(int(c)) for c in row) for row in m))


def random_rational_matrix(ctx: FieldCtx, n: int, rng: np.random.Generator, height: int = 5) -> MatrixL:
    def entry():
        c = int(rng.integers(1, height))
        return ctx(Fraction(int(rng.integers(-height, height + 1)), c), Fraction(int(rng.integers(-height, height + 1)), c))

    return MatrixL(tuple(tuple(entry() for _ in range(n)) for _ in range(n)))


# --------------------------------------------------------------------------
# suites


def verify_f4_sphere_example() -> Report:
    """F_2 inside F_4: sphere, diagonal ranges, the 16 scalar ranges and the 4 Hermitian ones."""
    r = Report("f4_example")
    ctx = finite_field(2, 1)
    T = ext_tables(ctx)
    sphere = sphere_codes(ctx, 2)
    pts = sorted(tuple(str(ctx.from_code(int(c))) for c in v) for v in sphere)
    r.check("unit sphere C_2(1)", [("0", "1"), ("1", "0")], pts)
    r.evidence["sphere_size"] = len(pts)
    diag_ok = 0
    zero = []
    for flat in itertools.product(range(T.order), repeat=4):
        m = np.array(flat).reshape(2, 2)
        num = set(int(c) for c in num_range_codes(ctx, m, sphere))
        if num == {int(m[0, 0]), int(m[1, 1])}:
            diag_ok += 1
        if num == {0}:
            zero.append(m)
    r.check("matrices with Num(M) = {m11, m22}", 256, diag_ok)
    r.check("matrices with Num(M) = {0}", 16, len(zero))
    herm = [m for m in zero if hermitian_codes(ctx, m)]
    r.check("Hermitian among Num(M) = {0}", 4, len(herm))
    r.witnesses += [str(codes_to_matrix(ctx, m)) for m in herm]
    return r.finish()


def hypothesis_pair(ctx: FieldCtx) -> tuple[ExtScalar, Any] | None:
    """First (w, delta): delta not in {0,1}, delta and 1 - delta nonzero squares of K,
    w in L minus K with N(w) = delta.  Exhaustive over finite K."""
    if ctx.char == 2:
        return None
    if ctx.is_finite:
        T = ext_tables(ctx)
        squares = {int(T.k_mul[x, x]) for x in range(1, T.q)}
        for d in range(2, T.q):
            if d in squares and int(T.k_add[1, ctx.k_neg(d)]) in squares:
                ws = np.nonzero((T.norm == d) & (np.arange(T.order) % T.q != 0))[0]
                if ws.size:
                    return ctx.from_code(int(ws[0])), d
        return None
    # bounded height over Q: delta = (a/c)^2 with 1 - delta a square
    for c in range(2, 50):
        for a in range(1, c):
            d = Fraction(a * a, c * c)
            rest = 1 - d
            if _is_rational_square(rest):
                for x, y in itertools.product(range(-c, c + 1), range(1, c + 1)):
                    w = ctx(Fraction(x, c), Fraction(y, c))
                    if w.norm() == d:
                        return w, d
    return None


def _is_rational_square(x: Fraction) -> bool:
    return x >= 0 and is_square(x.numerator) and is_square(x.denominator)


def verify_hermitian_criterion(ctx: FieldCtx, sample_size: int = 1000, seed: int = 0, n: int = 2) -> Report:
    """Hermitian iff Num(M) inside K, on sampled (or exhausted) n x n matrices.

    Over F_4 the equivalence fails; that suite asserts the exact failure counts.
    """
    r = Report(f"hermitian:{ctx.spec()}")
    T = ext_tables(ctx)
    sphere = sphere_codes(ctx, n)
    exhaustive = T.order ** (n * n) <= max(sample_size, 256)

    def stats(mats):
        herm_bad = 0
        viol = []
        for m in mats:
            vals = nu_codes(ctx, m, sphere)
            in_k = bool(np.all(vals % T.q == 0))
            h = hermitian_codes(ctx, m)
            if h and not in_k:
                herm_bad += 1
            if in_k and not h:
                viol.append(m)
        return herm_bad, viol

    if exhaustive:
        mats = [np.array(f).reshape(n, n) for f in itertools.product(range(T.order), repeat=n * n)]
    else:
        rng = np.random.default_rng(seed)
        mats = [random_matrix_codes(ctx, n, rng) for _ in range(sample_size)]
        mats += [random_hermitian_codes(ctx, n, rng) for _ in range(sample_size)]
    herm_bad, viol = stats(mats)
    r.evidence.update(
        matrices=len(mats),
        exhaustive=exhaustive,
        hermitian=sum(hermitian_codes(ctx, m) for m in mats),
        violations=len(viol),
    )
    # Hermitian matrices always have Num inside K
    r.check("Hermitian M with Num(M) not inside K", 0, herm_bad)
    if ctx.is_finite and ctx.q == 2 and n == 2:
        zeros = [m for m in viol if set(int(c) for c in num_range_codes(ctx, m, sphere)) == {0}]
        r.hypothesis("char(K) != 2", False, "F_2: the equivalence is expected to fail")
        r.check("non-Hermitian M with Num(M) = {0}", 12, len(zeros))
        # diagonal in F_2 (4 choices) times any off-diagonal (16), minus 16 Hermitian
        r.check("non-Hermitian M with Num(M) inside K", 48, len(viol))
        r.witnesses += [str(codes_to_matrix(ctx, m)) for m in zeros[:3]]
        return r.finish()
    pair = hypothesis_pair(ctx)
    ok = r.hypothesis("char(K) != 2", ctx.char != 2)
    ok = r.hypothesis(
        "pair (w, delta)",
        pair is not None,
        f"w = {pair[0]}, delta = {ctx.k_format(pair[1])}" if pair else "no delta with delta, 1 - delta nonzero squares in K",
    ) and ok
    if not ok:
        return r.finish(applicable=False)
    r.check("non-Hermitian M with Num(M) inside K", 0, len(viol))
    return r.finish()


def verify_witnesses(seed: int = 0) -> Report:
    """Segment and ellipse witnesses over Q(i) and F_9."""
    r = Report("witnesses")
    Q = rational_field(-1)
    r.hypothesis("Q(i) definite up to 2", is_definite_up_to(Q, 2).status == "definite")
    # segment: diag(0, 1), u = e1, v = e2
    m = diag(Q, [0, 1])
    ts = delta_interval_sample(Q, 20, seed=None)
    ws = segment_witnesses(m, basis_vector(Q, 2, 0), basis_vector(Q, 2, 1), Q.zero, Q.one, ts)
    expected = [Q.embed(pt.t) * Q.zero + (Q.one - Q.embed(pt.t)) * Q.one for pt in ts]
    r.check("Q(i) segment witnesses", 20, sum(w.recheck(m) for w in ws))
    r.check("Q(i) segment values t a + (1-t) b", [str(z) for z in expected], [str(w.value) for w in ws])
    r.witnesses += [f"{w.u} -> {w.value}" for w in ws[:3]]
    # ellipse: [[0,1],[0,1]], eigenvectors (1,0) for 0 and (1,1) for 1, not orthogonal
    m2 = matrix(Q, [[0, 1], [0, 1]])
    ew = ellipse_witnesses(m2, vector(Q, [1, 0]), vector(Q, [1, 1]), Q.zero, Q.one, 10)
    r.check("Q(i) ellipse witnesses certified", True, len(ew) >= 10 and all(w.recheck(m2) for w in ew))
    r.check("Q(i) ellipse values distinct", len(ew), len({w.value for w in ew}))
    r.witnesses += [f"{w.u} -> {w.value}" for w in ew[:3]]
    # F_9
    F = finite_field(3, 1)
    r.hypothesis("F_9 definite up to 2", is_definite_up_to(F, 2).status == "definite", "constructions only need unit eigenvectors")
    mf = diag(F, [0, 1])
    seg = segment_witnesses(mf, basis_vector(F, 2, 0), basis_vector(F, 2, 1), F.zero, F.one, delta_interval_sample(F))
    num = num_range_finite(mf).as_set()
    r.check("F_9 segment values", ["0", "1", "2"], _fmt_set({w.value for w in seg}))
    r.check("F_9 segment inside Num", True, all(w.recheck(mf) and w.value in num for w in seg))
    mf2 = matrix(F, [[0, 1], [0, 1]])
    ef = ellipse_witnesses(mf2, vector(F, [1, 0]), vector(F, [1, 1]), F.zero, F.one, 81)
    num2 = num_range_finite(mf2).as_set()
    r.check("F_9 ellipse witnesses inside Num", True, all(w.recheck(mf2) and w.value in num2 for w in ef))
    r.evidence["f9_ellipse_values"] = _fmt_set({w.value for w in ef})
    return r.finish()


def gap_instance() -> tuple[MatrixL, VectorL, VectorL]:
    """M is the projection onto m = (-1, 1 - i), with M u = 0 for u = (1 + i, 1)."""
    Q = rational_field(-1)
    u = vector(Q, ["1+b", 1])
    mvec = vector(Q, [-1, "1-b"])
    third = Q(Fraction(1, 3))
    M = MatrixL(tuple(tuple(third * mvec[i] * mvec[j].conj() for j in range(2)) for i in range(2)))
    return M, u, mvec


def verify_rational_gap() -> Report:
    r = Report("rational_gap")
    Q = rational_field(-1)
    M, u, mvec = gap_instance()
    d1 = delta_membership(Q, 3, 1)
    d2 = delta_membership(Q, 3, 2)
    r.check("3 in Delta", "non_member", d1.status)
    r.check("3 in Delta_2", True, d2.member and d2.recheck(3))
    r.witnesses.append("3 = " + " + ".join(f"N({w})" for w in d2.witness))
    r.check("<u,u>", "3", Q.k_format(self_form(u)))
    r.check("<u,m>", "0", str(form(u, mvec)))
    r.check("M Hermitian", True, is_hermitian(M))
    r.check("M u", ["0", "0"], [str(x) for x in M @ u])
    r.check("M m = m", True, M @ mvec == mvec)
    r.check("N(t) = 1/3 solvable", "no_solution", norm_equation(Q, Fraction(1, 3)).status)
    for a, vec in ((Q.zero, u), (Q.one, mvec)):
        mem = eigenvalue_membership(M, a, vec)
        r.check(f"{a} in Num(M)", "no", mem.status)
        r.witnesses.append(f"{a}: {mem.reason}")
    return r.finish()


def verify_direct_sum(ctx: FieldCtx, trials: int = 100, seed: int = 0, n: int = 2) -> Report:
    """Num(A + B) equals the Delta-convex closure of Num(A) and Num(B)."""
    r = Report(f"direct_sum:{ctx.spec()}")
    rng = np.random.default_rng(seed)
    s_small = sphere_codes(ctx, n)
    s_big = sphere_codes(ctx, 2 * n)
    T = ext_tables(ctx)
    bad = 0
    for _ in range(trials):
        a = random_matrix_codes(ctx, n, rng)
        b = random_matrix_codes(ctx, n, rng)
        s = np.zeros((2 * n, 2 * n), dtype=np.int64)
        s[:n, :n] = a
        s[n:, n:] = b
        lhs = frozenset(ctx.from_code(int(c)) for c in num_range_codes(ctx, s, s_big))
        union = {ctx.from_code(int(c)) for c in np.concatenate([num_range_codes(ctx, a, s_small), num_range_codes(ctx, b, s_small)])}
        rhs = delta_convex_closure(union, ctx)
        if lhs != rhs:
            bad += 1
            if len(r.witnesses) < 3:
                r.witnesses.append(
                    f"A={codes_to_matrix(ctx, a)} B={codes_to_matrix(ctx, b)}: "
                    f"Num(A+B)={_fmt_set(lhs)} closure={_fmt_set(rhs)}"
                )
    r.check("pairs with Num(A + B) != closure", 0, bad)
    c = ctx.from_code(int(rng.integers(0, T.order)))
    ci = diag(ctx, [c] * n)
    r.check("A = B = cI", [str(c)], _fmt_set(num_range_finite(direct_sum(ci, ci))))
    r.evidence.update(trials=trials, failures=bad)
    return r.finish()


def verify_ellipse_ranges(ctx: FieldCtx) -> Report:
    """Num([[0,b],[0,1]]) is the two-foci ellipse for every b != 0; the nilpotent
    matrix gives the one-focus ellipse."""
    r = Report(f"ellipse:{ctx.spec()}")
    bad = []
    for b in ctx.l_elements():
        if b.is_zero():
            continue
        m = matrix(ctx, [[0, b], [0, 1]])
        e = EllipseSpec("two_foci", ctx.k_one, ctx.k_one, ctx, d1=b, d2=ctx.one)
        if num_range_finite(m).as_set() != ellipse_points(e):
            bad.append(str(b))
    r.check("b in L* with Num != two-foci ellipse", [], bad)
    m0 = matrix(ctx, [[0, 1], [0, 0]])
    e0 = EllipseSpec("one_focus", ctx.k_one, ctx.k_one, ctx)
    num0 = num_range_finite(m0).as_set()
    r.check("nilpotent: Num = one-focus ellipse", True, num0 == ellipse_points(e0))
    r.evidence.update(nilpotent_range_size=len(num0), unit_sphere_size=len(sphere_codes(ctx, 2)))
    return r.finish()


def compression_instances() -> list[tuple[str, MatrixL, VectorL, str]]:
    """(name, M, eigenvector u for eigenvalue 0, expected shape)."""
    Q = rational_field(-1)
    return [
        ("nilpotent", matrix(Q, [[0, 1], [0, 0]]), vector(Q, [1, 0]), "one_focus"),
        ("nilpotent, tilted", matrix(Q, [[1, 1], [-1, -1]]), vector(Q, [1, -1]), "one_focus"),
        ("orthogonal eigenvectors", diag(Q, [0, 1]), vector(Q, [1, 0]), "hull"),
        ("non-normal", matrix(Q, [[1, -1], [0, 0]]), vector(Q, [1, 1]), "two_foci"),
    ]


def verify_compressions(samples: int = 12, seed: int | None = None) -> Report:
    """Frame change to an orthonormal basis starting at a unit eigenvector for 0,
    then the resulting shape and certified ellipse points."""
    r = Report("compressions")
    Q = rational_field(-1)
    for name, m, u, shape in compression_instances():
        assert m @ u == VectorL((Q.zero, Q.zero))
        fs, normalized = orthogonalize([u], complete=True)
        r.check(f"{name}: orthonormal frame", True, normalized)
        comp = compression_2x2(m, fs[0], fs[1])
        a = comp.matrix
        r.check(f"{name}: a11 = a21 = 0", ["0", "0"], [str(a[0, 0]), str(a[1, 0])])
        if shape == "one_focus":
            r.check(f"{name}: a22 = 0", "0", str(a[1, 1]))
            e = EllipseSpec("one_focus", Q.k_one, Q.k_one, Q, frame_b=a[0, 1])
        elif shape == "hull":
            r.check(f"{name}: a12 = 0", "0", str(a[0, 1]))
            e = None
        else:
            r.check(f"{name}: a12, a22 nonzero", True, bool(a[0, 1]) and bool(a[1, 1]))
            e = EllipseSpec("two_foci", Q.k_one, Q.k_one, Q, d1=a[0, 1], d2=a[1, 1])
        ok = 0
        pairs = list(itertools.islice(unit_pairs(Q, seed), samples))
        for x, y in pairs:
            w = comp.lift(VectorL((x, y)))
            wp = certify(m, w)
            if e is not None:
                good = wp.value == e.value(x, y)
            else:
                t = Q.embed(x.norm())
                good = wp.value == t * Q.zero + (Q.one - t) * a[1, 1]
            ok += good
        r.check(f"{name}: certified points on the predicted set", len(pairs), ok)
        r.witnesses.append(f"{name}: frame {fs[0]}, {fs[1]}; compression {a}")
    return r.finish()


def verify_toeplitz_hausdorff(trials: int = 100, tol: float = 1e-8, seed: int = 0) -> Report:
    """Segment filling in binary64 and the 2x2 shape trichotomy."""
    r = Report("toeplitz_hausdorff")
    rng = np.random.default_rng(seed)
    s_values = np.round(np.arange(1, 10) / 10, 1)
    ok = 0
    worst = 0.0
    worst_unit = 0.0
    iters = 0
    for _ in range(trials):
        n = int(rng.integers(2, 6))
        m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        u, v = rc.random_unit_vectors(n, 2, rng)
        for s in s_values:
            try:
                res = rc.fill_segment(m, u, v, float(s), tol=tol)
            except rc.ConvergenceError:
                continue
            worst = max(worst, res.value_residual)
            worst_unit = max(worst_unit, res.unit_residual)
            iters = max(iters, res.iterations)
            ok += res.value_residual <= tol and res.unit_residual <= 1e-10
    r.check("fill_segment successes", trials * len(s_values), ok)
    r.evidence.update(worst_value_residual=worst, worst_unit_residual=worst_unit, max_iterations=iters)
    designed = [
        ("cI", 2.5 * np.eye(2), "point"),
        ("symmetric, distinct eigenvalues", np.array([[1.0, 2.0], [2.0, -3.0]]), "segment"),
        ("nilpotent", np.array([[0.0, 1.0], [0.0, 0.0]]), "one_focus"),
        ("non-normal", np.array([[0.0, 1.0], [0.0, 1.0]]), "two_foci"),
    ]
    for name, m, shape in designed:
        r.check(f"{name}: algebraic class", shape, rc.classify_2x2_algebraic(m))
        r.check(f"{name}: geometric class", shape, rc.classify_2x2_geometric(m))
    agree = 0
    real_trials = 40
    for _ in range(real_trials):
        m = rng.standard_normal((2, 2))
        agree += rc.classify_2x2_algebraic(m) == rc.classify_2x2_geometric(m)
    r.check("random real 2x2: algebraic and geometric classes agree", real_trials, agree)
    return r.finish()


def verify_delta_equals_k(qs: tuple[int, ...] = (2, 3, 4, 5, 7, 8, 9)) -> Report:
    """Every element of K is a norm and N is (q+1)-to-1 on L*."""
    r = Report("delta")
    for q in qs:
        p = next(p for p in (2, 3, 5, 7) if q % p == 0)
        m = round(np.log(q) / np.log(p))
        ctx = finite_field(p, m)
        T = ext_tables(ctx)
        counts = np.bincount(T.norm[1:], minlength=q)
        r.check(f"q={q}: Delta = K", q, int(np.count_nonzero(np.bincount(T.norm, minlength=q))))
        r.check(f"q={q}: fibers of N on L*", [0] + [q + 1] * (q - 1), counts.tolist())
    return r.finish()


def verify_convex_f9() -> Report:
    r = Report("convex_f9")
    ctx = finite_field(3, 1)
    subsets = convex_subsets(ctx)
    sizes = sorted(len(s) for s in subsets)
    r.check("Delta-convex subsets", 22, len(subsets))
    r.check("sizes", [1] * 9 + [3] * 12 + [9], sizes)
    lines = [s for s in subsets if len(s) == 3]
    affine = 0
    for s in lines:
        a, b, c = sorted(s)
        # a line is {a + t (b - a) : t in F_3}
        affine += set(s) == {a + ctx(t) * (b - a) for t in range(3)}
    r.check("3-point sets are affine F_3-lines", 12, affine)
    return r.finish()


def verify_decomposition(samples: int = 1000, seed: int = 0) -> Report:
    """M = M_plus + beta M_minus with Hermitian parts."""
    r = Report("decomp")
    F4 = finite_field(2, 1)
    bad = 0
    for flat in itertools.product(F4.l_elements(), repeat=4):
        m = MatrixL((tuple(flat[:2]), tuple(flat[2:])))
        d = herm_decompose(m)
        bad += not (d.recompose() == m and is_hermitian(d.m_plus) and is_hermitian(d.m_minus))
    r.check("F_4: all 256 matrices", 0, bad)
    rng = np.random.default_rng(seed)
    for ctx in (finite_field(3, 1), rational_field(-1)):
        bad = 0
        for _ in range(samples):
            if ctx.is_finite:
                m = codes_to_matrix(ctx, random_matrix_codes(ctx, 2, rng))
            else:
                m = random_rational_matrix(ctx, 2, rng)
            d = herm_decompose(m)
            bad += not (d.recompose() == m and is_hermitian(d.m_plus) and is_hermitian(d.m_minus))
        r.check(f"{ctx.spec()}: {samples} random matrices", 0, bad)
    return r.finish()


# --------------------------------------------------------------------------
# registry

SUITES: dict[str, Callable[[int], Report]] = {
    "f4_example": lambda seed: verify_f4_sphere_example(),
    "hermitian:f4": lambda seed: verify_hermitian_criterion(finite_field(2, 1), 1000, seed),
    "hermitian:k9": lambda seed: verify_hermitian_criterion(finite_field(3, 2), 1000, seed),
    "hermitian:k25": lambda seed: verify_hermitian_criterion(finite_field(5, 2), 1000, seed),
    "hermitian:f9": lambda seed: verify_hermitian_criterion(finite_field(3, 1), 1000, seed),
    "hermitian:f25": lambda seed: verify_hermitian_criterion(finite_field(5, 1), 1000, seed),
    "witnesses": lambda seed: verify_witnesses(seed),
    "rational_gap": lambda seed: verify_rational_gap(),
    "direct_sum:f4": lambda seed: verify_direct_sum(finite_field(2, 1), 100, seed),
    "direct_sum:f9": lambda seed: verify_direct_sum(finite_field(3, 1), 100, seed),
    "ellipse:f4": lambda seed: verify_ellipse_ranges(finite_field(2, 1)),
    "ellipse:f9": lambda seed: verify_ellipse_ranges(finite_field(3, 1)),
    "ellipse:f25": lambda seed: verify_ellipse_ranges(finite_field(5, 1)),
    "compressions": lambda seed: verify_compressions(),
    "toeplitz_hausdorff": lambda seed: verify_toeplitz_hausdorff(100, 1e-8, seed),
    "delta": lambda seed: verify_delta_equals_k(),
    "convex_f9": lambda seed: verify_convex_f9(),
    "decomp": lambda seed: verify_decomposition(1000, seed),
}


def select_suites(selector: str) -> list[str]:
    """``all``, an exact suite name, or a prefix before ``:`` (``hermitian`` runs every hermitian suite)."""
    if selector == "all":
        return list(SUITES)
    if selector in SUITES:
        return [selector]
    names = [k for k in SUITES if k.split(":")[0] == selector]
    if not names:
        raise KeyError(f"unknown suite {selector!r}; choose from {', '.join(['all', *SUITES])}")
    return names


def run_suites(selector: str, seed: int = 0) -> list[Report]:
    out = []
    for name in select_suites(selector):
        t0 = time.perf_counter()
        rep = SUITES[name](seed)
        rep.seconds = time.perf_counter() - t0
        out.append(rep)
    return out
