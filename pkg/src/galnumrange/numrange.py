"""Matrices over L, the numerical map and numerical ranges.

Over finite fields ranges are enumerated exhaustively with table kernels.  Over
infinite fields only certified witnesses are produced: each WitnessPoint
carries a unit vector whose value has been recomputed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Any, Iterable, Sequence

import numpy as np
from sympy import divisors

from .field_core import ExtScalar, FieldCtx, FieldError, ext_tables
from .forms import (
    DEFAULT_BUDGET,
    DeltaVerdict,
    IntervalPoint,
    VectorL,
    delta_interval_sample,
    delta_membership,
    form,
    norm_equation,
    orthogonalize,
    rescale_to_unit,
    self_form,
    sphere_codes,
    unit_pairs,
)
from .linalg import nullspace, rank


class HypothesisError(ValueError):
    """The data passed to a construction violates one of its hypotheses."""


# --------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class MatrixL:
    rows: tuple[tuple[ExtScalar, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0 or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square and nonempty")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def ctx(self) -> FieldCtx:
        return self.rows[0][0].ctx

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other: "MatrixL") -> "MatrixL":
        return MatrixL(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other: "MatrixL") -> "MatrixL":
        return MatrixL(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __rmul__(self, c) -> "MatrixL":
        return MatrixL(tuple(tuple(c * a for a in r) for r in self.rows))

    def __matmul__(self, other):
        if isinstance(other, VectorL):
            return VectorL(tuple(_dot(r, other.entries) for r in self.rows))
        cols = list(zip(*other.rows))
        return MatrixL(tuple(tuple(_dot(r, c) for c in cols) for r in self.rows))

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"


def _dot(r: Sequence[ExtScalar], c: Sequence[ExtScalar]) -> ExtScalar:
    acc = r[0] * c[0]
    for a, b in zip(r[1:], c[1:]):
        acc = acc + a * b
    return acc


def matrix(ctx: FieldCtx, rows: Iterable[Iterable[Any]]) -> MatrixL:
    """Build a matrix from ExtScalars, ints or scalar strings."""

    def conv(v):
        if isinstance(v, ExtScalar):
            return v
        if isinstance(v, str):
            return ctx.parse(v)
        return ctx(v)

    return MatrixL(tuple(tuple(conv(v) for v in r) for r in rows))


def identity(ctx: FieldCtx, n: int) -> MatrixL:
    return MatrixL(tuple(tuple(ctx.one if i == j else ctx.zero for j in range(n)) for i in range(n)))


def diag(ctx: FieldCtx, values: Sequence[Any]) -> MatrixL:
    n = len(values)
    return matrix(ctx, [[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def direct_sum(a: MatrixL, b: MatrixL) -> MatrixL:
    ctx = a.ctx
    n, m = a.n, b.n
    rows = [list(r) + [ctx.zero] * m for r in a.rows]
    rows += [[ctx.zero] * n + list(r) for r in b.rows]
    return MatrixL(tuple(tuple(r) for r in rows))


def dagger(m: MatrixL) -> MatrixL:
    """Conjugate transpose: (M^dagger)_ij = sigma(M_ji)."""
    return MatrixL(tuple(tuple(m.rows[j][i].conj() for j in range(m.n)) for i in range(m.n)))


def is_hermitian(m: MatrixL) -> bool:
    return dagger(m) == m


@dataclass(frozen=True)
class HermDecomp:
    m_plus: MatrixL
    m_minus: MatrixL

    def recompose(self) -> MatrixL:
        ctx = self.m_plus.ctx
        return self.m_plus + ctx.beta * self.m_minus


def herm_decompose(m: MatrixL) -> HermDecomp:
    """Hermitian M_plus, M_minus with M = M_plus + beta * M_minus."""
    ctx = m.ctx
    md = dagger(m)
    b = ctx.beta
    if ctx.char == 2:
        plus = (b + 1) * m + b * md
        minus = m + md
    else:
        two = ctx(2)
        plus = two.inverse() * (m + md)
        minus = (two * b).inverse() * (m - md)
    return HermDecomp(plus, minus)


def nu(m: MatrixL, u: VectorL) -> ExtScalar:
    """The numerical map u -> <u, M u>."""
    if len(u) != m.n:
        raise ValueError(f"dimension mismatch: {len(u)} vs {m.n}")
    return form(u, m @ u)


# --------------------------------------------------------------------------
# finite enumeration


@dataclass(frozen=True)
class NumRangeSet:
    points: tuple[ExtScalar, ...]
    complete: bool

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, z):
        return z in set(self.points)

    def as_set(self) -> frozenset:
        return frozenset(self.points)


def matrix_codes(m: MatrixL) -> np.ndarray:
    T = ext_tables(m.ctx)
    return np.array([[T.code(x) for x in r] for r in m.rows], dtype=np.int64)


def nu_codes(ctx: FieldCtx, mcodes: np.ndarray, vecs: np.ndarray) -> np.ndarray:
    """Vectorized numerical map on an (N, n) array of vector codes."""
    T = ext_tables(ctx)
    n = mcodes.shape[0]
    acc = np.zeros(vecs.shape[0], dtype=np.int64)
    for i in range(n):
        row = np.zeros(vecs.shape[0], dtype=np.int64)
        for j in range(n):
            if mcodes[i, j]:
                row = T.add[row, T.mul[mcodes[i, j], vecs[:, j]]]
        acc = T.add[acc, T.mul[T.conj[vecs[:, i]], row]]
    return acc


def num_range_codes(ctx: FieldCtx, mcodes: np.ndarray, sphere: np.ndarray | None = None, budget: int = DEFAULT_BUDGET) -> np.ndarray:
    if sphere is None:
        sphere = sphere_codes(ctx, mcodes.shape[0], budget)
    return np.unique(nu_codes(ctx, mcodes, sphere))


def num_range_finite(m: MatrixL, budget: int = DEFAULT_BUDGET) -> NumRangeSet:
    """Num(M) over a finite field by exhaustive enumeration of C_n(1)."""
    ctx = m.ctx
    if not ctx.is_finite:
        raise FieldError("exhaustive numerical ranges exist only over finite fields")
    codes = num_range_codes(ctx, matrix_codes(m), budget=budget)
    return NumRangeSet(tuple(ctx.from_code(c) for c in codes), complete=True)


def joint_num_range_finite(ms: Sequence[MatrixL], budget: int = DEFAULT_BUDGET) -> list[tuple[ExtScalar, ...]]:
    """Sorted distinct tuples (nu_{M_1}(u), ..., nu_{M_k}(u)) over unit u."""
    ctx = ms[0].ctx
    n = ms[0].n
    if any(m.n != n for m in ms):
        raise ValueError("joint ranges need matrices of one size")
    if any(m.ctx != ctx for m in ms):
        raise FieldError("joint ranges need matrices over one field")
    sphere = sphere_codes(ctx, n, budget)
    cols = np.stack([nu_codes(ctx, matrix_codes(m), sphere) for m in ms], axis=1)
    uniq = np.unique(cols, axis=0)
    return [tuple(ctx.from_code(c) for c in row) for row in uniq]


# --------------------------------------------------------------------------
# witnesses over arbitrary fields


@dataclass(frozen=True)
class WitnessPoint:
    u: VectorL
    value: ExtScalar
    unit_checked: bool

    def recheck(self, m: MatrixL) -> bool:
        return self_form(self.u) == self.u.ctx.k_one and nu(m, self.u) == self.value


def certify(m: MatrixL, u: VectorL, expected: ExtScalar | None = None) -> WitnessPoint:
    """Recompute <u,u> and nu_M(u) exactly; raise if a claimed value is off."""
    value = nu(m, u)
    unit = self_form(u) == u.ctx.k_one
    if expected is not None and value != expected:
        raise AssertionError(f"witness value {value} differs from claimed {expected}")
    if not unit:
        raise AssertionError(f"witness {u} is not a unit vector")
    return WitnessPoint(u, value, unit)


def _require_eigen(m: MatrixL, u: VectorL, a: ExtScalar, label: str) -> None:
    if u.is_zero():
        raise HypothesisError(f"{label}: zero vector")
    if m @ u != VectorL(tuple(a * x for x in u)):
        raise HypothesisError(f"{label}: M u != {a} u")


def _unit_eigvec(u: VectorL, label: str) -> VectorL:
    s = self_form(u)
    if s == u.ctx.k_zero:
        raise HypothesisError(f"{label}: <u,u> = 0")
    r = rescale_to_unit(u)
    if r is None:
        raise HypothesisError(f"{label}: <u,u> = {u.ctx.k_format(s)} is not in Delta")
    return r


def segment_witnesses(
    m: MatrixL, u: VectorL, v: VectorL, a: ExtScalar, b: ExtScalar, ts: Sequence[Any]
) -> list[WitnessPoint]:
    """Unit witnesses for t*a + (1-t)*b, t in Delta meet (1 - Delta).

    Requires M u = a u, M v = b v, <u,v> = 0 and <u,u>, <v,v> in Delta minus 0.
    ``ts`` holds IntervalPoints or bare K-values (witnesses are then solved for).
    """
    ctx = m.ctx
    if a == b:
        raise HypothesisError("eigenvalues must differ")
    _require_eigen(m, u, a, "u")
    _require_eigen(m, v, b, "v")
    if form(u, v) != ctx.zero:
        raise HypothesisError("<u,v> != 0; use ellipse_witnesses")
    u1 = _unit_eigvec(u, "u")
    v1 = _unit_eigvec(v, "v")
    out = []
    for item in ts:
        if isinstance(item, IntervalPoint):
            pt = item
        else:
            t = item
            ra = delta_membership(ctx, t, 1)
            rb = delta_membership(ctx, ctx.k_sub(ctx.k_one, t), 1)
            if not (ra.member and rb.member):
                raise HypothesisError(f"t = {ctx.k_format(t)} is not certified in Delta meet (1 - Delta)")
            pt = IntervalPoint(t, ra.witness[0], rb.witness[0])
        assert pt.recheck()
        # N(x) = t weights a, N(y) = 1 - t weights b
        w = pt.a * u1 + pt.b * v1
        tt = ctx.embed(pt.t)
        out.append(certify(m, w, tt * a + (ctx.one - tt) * b))
    return out


@dataclass(frozen=True)
class EllipseFrame:
    """Normalized data of the two-eigenvector construction.

    In the frame where a = 0 and b = 1: u unit with M'u = 0, w = v - <u,v> u,
    c = <w, w>, d = <u, v>; nu_{M'}(x u + y w) = d sigma(x) y + c sigma(y) y.
    """

    u: VectorL
    v: VectorL
    w: VectorL
    d: ExtScalar
    c: Any
    c_verdict: DeltaVerdict
    a: ExtScalar
    b: ExtScalar


def ellipse_frame(m: MatrixL, u: VectorL, v: VectorL, a: ExtScalar, b: ExtScalar) -> EllipseFrame:
    ctx = m.ctx
    if a == b:
        raise HypothesisError("eigenvalues must differ")
    _require_eigen(m, u, a, "u")
    _require_eigen(m, v, b, "v")
    u1 = _unit_eigvec(u, "u")
    v1 = _unit_eigvec(v, "v")
    d = form(u1, v1)
    if d == ctx.zero:
        raise HypothesisError("<u,v> = 0; use segment_witnesses")
    w = v1 - d * u1
    c = self_form(w)
    if c == ctx.k_zero:
        raise HypothesisError("isotropic w: the form is not definite on span(u, v)")
    verdict = delta_membership(ctx, c, 1)
    if verdict.status != "member":
        verdict = delta_membership(ctx, c, m.n)
    return EllipseFrame(u1, v1, w, d, c, verdict, a, b)


def ellipse_pairs(frame: EllipseFrame, count: int, seed: int | None = None) -> list[tuple[ExtScalar, ExtScalar]]:
    """Pairs (x, y) with N(x) + c N(y) = 1, deterministic order."""
    ctx = frame.u.ctx
    c = frame.c
    out: list[tuple[ExtScalar, ExtScalar]] = []
    if ctx.is_finite:
        T = ext_tables(ctx)
        cn = T.k_mul[c, T.norm]
        for x in range(T.order):
            for y in np.nonzero(T.k_add[T.norm[x], cn] == 1)[0]:
                out.append((ctx.from_code(x), ctx.from_code(int(y))))
                if len(out) >= count:
                    return out
        return out
    # endpoints: y = 0 gives value a; x = 0 when 1/c is a norm gives c N(y) = 1
    out.append((ctx.one, ctx.zero))
    sol = norm_equation(ctx, ctx.k_div(ctx.k_one, c))
    if sol.solved:
        out.append((ctx.zero, sol.t))
    seen = set(out)
    if ctx.alpha == -1:
        # y = y0 * s with N(s) = 1 - N(x); c N(y0) = 1 via the S^3 parametrization
        for x, s in unit_pairs(ctx, seed):
            if len(out) >= count:
                break
            if sol.solved:
                pair = (x, s * sol.t)
            else:
                r = norm_equation(ctx, ctx.k_div(ctx.k_sub(ctx.k_one, x.norm()), c))
                if not r.solved:
                    continue
                pair = (x, r.t)
            if pair not in seen:
                seen.add(pair)
                out.append(pair)
        return out[:count]
    for pt in delta_interval_sample(ctx, 4 * count):
        if len(out) >= count:
            break
        r = norm_equation(ctx, ctx.k_div(ctx.k_sub(ctx.k_one, pt.t), c))
        if r.solved and (pt.a, r.t) not in seen:
            seen.add((pt.a, r.t))
            out.append((pt.a, r.t))
    return out[:count]


def ellipse_witnesses(
    m: MatrixL, u: VectorL, v: VectorL, a: ExtScalar, b: ExtScalar, samples: int | Sequence[tuple[ExtScalar, ExtScalar]] = 10
) -> list[WitnessPoint]:
    """Certified points of the ellipse through a and b inside Num(M).

    Applies when M u = a u, M v = b v with <u,u>, <v,v> in Delta minus 0 and
    <u,v> != 0.  ``samples`` is a count or explicit pairs (x, y) with
    N(x) + c N(y) = 1 in the normalized frame.
    """
    frame = ellipse_frame(m, u, v, a, b)
    ctx = m.ctx
    count = samples if isinstance(samples, int) else None
    # distinct pairs can share a value; oversample and keep distinct values
    pairs = ellipse_pairs(frame, 8 * count) if count is not None else list(samples)
    out = []
    seen = set()
    for x, y in pairs:
        if ctx.k_add(x.norm(), ctx.k_mul(frame.c, y.norm())) != ctx.k_one:
            raise HypothesisError(f"pair ({x}, {y}) violates N(x) + c N(y) = 1")
        normalized = frame.d * x.conj() * y + ctx.embed(frame.c) * y.conj() * y
        value = a + (b - a) * normalized
        if count is not None:
            if value in seen:
                continue
            seen.add(value)
        out.append(certify(m, x * frame.u + y * frame.w, value))
        if count is not None and len(out) >= count:
            break
    return out


# --------------------------------------------------------------------------
# eigen-data


def char_poly(m: MatrixL) -> list[ExtScalar]:
    """Coefficients c_0..c_n of det(tI - M) by Faddeev-LeVerrier (characteristic 0)."""
    ctx = m.ctx
    if ctx.is_finite:
        raise FieldError("char_poly uses division by k; finite fields scan roots instead")
    n = m.n
    coeffs = [ctx.zero] * (n + 1)
    coeffs[n] = ctx.one
    ident = identity(ctx, n)
    mk = ident
    for k in range(1, n + 1):
        am = m @ mk
        tr = am.rows[0][0]
        for i in range(1, n):
            tr = tr + am.rows[i][i]
        ck = -tr / ctx(k)
        coeffs[n - k] = ck
        mk = am + ck * ident
    return coeffs


def sqrt_l(z: ExtScalar) -> ExtScalar | None:
    """Some w in L with w^2 = z, or None."""
    ctx = z.ctx
    if z.is_zero():
        return ctx.zero
    if ctx.is_finite:
        T = ext_tables(ctx)
        hits = np.nonzero(T.mul[np.arange(T.order), np.arange(T.order)] == T.code(z))[0]
        return ctx.from_code(int(hits[0])) if hits.size else None
    def qsqrt(r: Fraction):
        if r < 0:
            return None
        p, q = r.numerator, r.denominator
        sp, sq = isqrt(p), isqrt(q)
        return Fraction(sp, sq) if sp * sp == p and sq * sq == q else None

    x, y = z.re, z.im
    alpha = ctx.alpha
    nz = qsqrt(z.norm()) if z.norm() >= 0 else None
    for nw in ([nz, -nz] if nz is not None else []):
        # a^2 + alpha b^2 = x, a^2 - alpha b^2 = N(w)
        a = qsqrt((x + nw) / 2)
        if a is None:
            continue
        if a != 0:
            w = ExtScalar(a, y / (2 * a), ctx)
        else:
            b = qsqrt((x - nw) / (2 * alpha))
            if b is None:
                continue
            w = ExtScalar(Fraction(0), b, ctx)
        if w * w == z:
            return w
        if (-w) * (-w) == z:
            return -w
    return None


def _poly_eval(coeffs: Sequence[ExtScalar], t: ExtScalar) -> ExtScalar:
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * t + c
    return acc


def _deflate(coeffs: list[ExtScalar], r: ExtScalar) -> list[ExtScalar]:
    n = len(coeffs) - 1
    out = [coeffs[n]]
    for k in range(n - 1, 0, -1):
        out.append(coeffs[k] + r * out[-1])
    return list(reversed(out))


def eigenvalues(m: MatrixL) -> list[ExtScalar]:
    """Distinct eigenvalues lying in L, found exactly.

    Finite fields: root scan over L.  Over Q(sqrt(alpha)): rational roots of a
    rational characteristic polynomial, then the quadratic formula on a
    remaining quadratic factor (degree <= 4 is handled completely this way
    only when enough roots are rational).
    """
    ctx = m.ctx
    if ctx.is_finite:
        ident = identity(ctx, m.n)
        return [z for z in ctx.l_elements() if rank([list(r) for r in (m - z * ident).rows]) < m.n]
    coeffs = char_poly(m)
    roots: list[ExtScalar] = []
    work = list(coeffs)
    if all(c.in_base for c in work):
        for r in _rational_roots([c.re for c in work]):
            z = ctx.embed(r)
            while len(work) > 1 and _poly_eval(work, z).is_zero():
                work = _deflate(work, z)
                if z not in roots:
                    roots.append(z)
    if len(work) == 3:
        c0, c1, _ = work
        disc = c1 * c1 - ctx(4) * c0
        s = sqrt_l(disc)
        if s is not None:
            for z in ((-c1 + s) / ctx(2), (-c1 - s) / ctx(2)):
                if z not in roots:
                    roots.append(z)
    elif len(work) == 2:
        z = -work[0]
        if z not in roots:
            roots.append(z)
    return sorted(roots)


def _rational_roots(coeffs) -> list:
    den = lcm(*[c.denominator for c in coeffs])
    ints = [int(c * den) for c in coeffs]
    while ints and ints[0] == 0:
        ints = ints[1:]
    roots = [Fraction(0)] if len(ints) < len(coeffs) else []
    if len(ints) <= 1:
        return roots
    lead, const = abs(ints[-1]), abs(ints[0])
    for p in divisors(const):
        for q in divisors(lead):
            for r in (Fraction(p, q), Fraction(-p, q)):
                val = sum(c * r**k for k, c in enumerate(ints))
                if val == 0 and r not in roots:
                    roots.append(r)
    return roots


def eigenvectors(m: MatrixL, c: ExtScalar) -> list[VectorL]:
    """Basis of the eigenspace of c (empty when c is not an eigenvalue)."""
    ctx = m.ctx
    shifted = m - c * identity(ctx, m.n)
    return [VectorL(tuple(x)) for x in nullspace([list(r) for r in shifted.rows], ctx)]


# --------------------------------------------------------------------------
# eigenvalue membership


@dataclass(frozen=True)
class Membership:
    status: str  # "yes" | "no" | "unknown"
    witness: WitnessPoint | None = None
    reason: str = ""


def eigenvalue_membership(m: MatrixL, a: ExtScalar, u: VectorL) -> Membership:
    """Is the eigenvalue a (with eigenvector u) in Num(M)?

    ``no`` is only returned for 2x2 matrices whose other eigenvector is the
    orthogonal complement of u: then nu(x m + y u) = a forces x = 0 and a lies
    in Num(M) exactly when <u,u> is in Delta.
    """
    ctx = m.ctx
    if m @ u != VectorL(tuple(a * x for x in u)) or u.is_zero():
        raise HypothesisError("u is not an eigenvector for a")
    s = self_form(u)
    if s == ctx.k_zero:
        return Membership("unknown", reason="<u,u> = 0")
    r = rescale_to_unit(u)
    if r is not None:
        return Membership("yes", certify(m, r, a), reason="1/<u,u> is a norm")
    if m.n == 2:
        comp = VectorL((-u[1].conj(), u[0].conj()))
        mc = m @ comp
        idx = next(i for i in range(2) if comp[i])
        bval = mc[idx] / comp[idx]
        if mc == VectorL(tuple(bval * x for x in comp)) and bval != a:
            verdict = delta_membership(ctx, s, 1)
            if verdict.status == "non_member":
                return Membership(
                    "no",
                    reason=f"orthogonal eigenvector for {bval}; <u,u> = {ctx.k_format(s)} is not in Delta",
                )
    return Membership("unknown", reason="no decision procedure applies")


# --------------------------------------------------------------------------
# compression


@dataclass(frozen=True)
class Compression:
    matrix: MatrixL
    f1: VectorL
    f2: VectorL

    def lift(self, w: VectorL) -> VectorL:
        """The vector w_1 f_1 + w_2 f_2 of L^n; unit and nu-preserving."""
        return w[0] * self.f1 + w[1] * self.f2


def compression_2x2(m: MatrixL, u: VectorL, v: VectorL) -> Compression:
    """The 2x2 matrix <f_i, M f_j> in an orthonormal frame of span(u, v)."""
    fs, normalized = orthogonalize([u, v])
    if not normalized:
        raise HypothesisError("span(u, v) admits no orthonormal frame")
    f1, f2 = fs
    rows = tuple(tuple(form(fi, m @ fj) for fj in (f1, f2)) for fi in (f1, f2))
    return Compression(MatrixL(rows), f1, f2)
