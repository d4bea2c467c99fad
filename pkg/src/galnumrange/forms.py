"""The sesquilinear form <u, v> = sum sigma(u_i) v_i and what it induces.

Unit spheres, definiteness, membership in Delta_n (sums of n norms), the set
Delta meet (1 - Delta), norm equations and Gram-Schmidt orthogonalization.
"""

from __future__ import annotations

import itertools
import random
from math import isqrt
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator, Sequence

import numpy as np

from . import squares
from .field_core import ExtScalar, FieldCtx, FieldError, ext_tables
from .linalg import rank

DEFAULT_BUDGET = 10**7
SEARCH_HEIGHT = 8


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


class IsotropicError(ArithmeticError):
    """A nonzero vector with <v, v> = 0 was met where definiteness was assumed."""


class DependentError(ValueError):
    """Input vectors are linearly dependent."""


# --------------------------------------------------------------------------
# vectors


@dataclass(frozen=True)
class VectorL:
    entries: tuple[ExtScalar, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("vectors need at least one entry")
        ctx = self.entries[0].ctx
        if any(e.ctx != ctx for e in self.entries):
            raise FieldError("entries live in different fields")

    @property
    def ctx(self) -> FieldCtx:
        return self.entries[0].ctx

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[ExtScalar]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __add__(self, other: "VectorL") -> "VectorL":
        _check_dims(self, other)
        return VectorL(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "VectorL") -> "VectorL":
        _check_dims(self, other)
        return VectorL(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "VectorL":
        return VectorL(tuple(-a for a in self))

    def __rmul__(self, c) -> "VectorL":
        return VectorL(tuple(c * a for a in self))

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self)

    def sort_key(self):
        return tuple(e.sort_key() for e in self)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self) + ")"


def vector(ctx: FieldCtx, values: Iterable[Any]) -> VectorL:
    """Build a vector from ExtScalars, ints or scalar strings."""
    out = []
    for v in values:
        if isinstance(v, ExtScalar):
            out.append(v)
        elif isinstance(v, str):
            out.append(ctx.parse(v))
        else:
            out.append(ctx(v))
    return VectorL(tuple(out))


def basis_vector(ctx: FieldCtx, n: int, i: int) -> VectorL:
    return VectorL(tuple(ctx.one if j == i else ctx.zero for j in range(n)))


def _check_dims(u: VectorL, v: VectorL) -> None:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")


def form(u: VectorL, v: VectorL) -> ExtScalar:
    """<u, v>; sigma-linear in u, linear in v."""
    _check_dims(u, v)
    acc = u.ctx.zero
    for a, b in zip(u, v):
        acc = acc + a.conj() * b
    return acc


def self_form(u: VectorL) -> Any:
    """<u, u> as a K-value."""
    s = form(u, u)
    assert s.in_base
    return s.re


# --------------------------------------------------------------------------
# finite enumeration


def _check_budget(count: int, budget: int) -> None:
    if count > budget:
        raise BudgetExceeded(f"enumeration of {count} vectors exceeds budget {budget}")


def enumerate_codes(Q: int, n: int, chunk: int = 1 << 18) -> Iterator[np.ndarray]:
    """All of (Z/Q)^n in lexicographic order, as (N, n) code arrays in chunks."""
    total = Q**n
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        cols = []
        for _ in range(n):
            idx, r = np.divmod(idx, Q)
            cols.append(r)
        yield np.stack(cols[::-1], axis=1)


def sphere_codes(ctx: FieldCtx, n: int, budget: int = DEFAULT_BUDGET, value: int | None = None) -> np.ndarray:
    """Codes of all u in L^n with <u,u> = value (default 1), canonically sorted."""
    T = ext_tables(ctx)
    _check_budget(T.order**n, budget)
    target = ctx.k_one if value is None else value
    parts = [c[T.k_sum(T.norm[c]) == target] for c in enumerate_codes(T.order, n)]
    return np.concatenate(parts, axis=0)


@dataclass(frozen=True)
class UnitSphere:
    n: int
    points: tuple[VectorL, ...]

    def __len__(self):
        return len(self.points)


def unit_sphere(ctx: FieldCtx, n: int, budget: int = DEFAULT_BUDGET) -> UnitSphere:
    """C_n(1) over a finite field, complete and sorted."""
    if not ctx.is_finite:
        raise FieldError("unit spheres are enumerated only over finite fields")
    codes = sphere_codes(ctx, n, budget)
    pts = tuple(VectorL(tuple(ctx.from_code(c) for c in row)) for row in codes)
    return UnitSphere(n, pts)


# --------------------------------------------------------------------------
# definiteness


@dataclass(frozen=True)
class Definiteness:
    status: str  # "definite" | "isotropic" | "unknown"
    witness: VectorL | None = None

    @property
    def definite(self) -> bool:
        return self.status == "definite"


def is_definite_up_to(ctx: FieldCtx, n: int, budget: int = DEFAULT_BUDGET) -> Definiteness:
    """Decide whether <u,u> != 0 for every nonzero u in L^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if ctx.is_finite:
        T = ext_tables(ctx)
        _check_budget(T.order**n, budget)
        for chunk in enumerate_codes(T.order, n):
            hit = np.nonzero((T.k_sum(T.norm[chunk]) == 0) & chunk.any(axis=1))[0]
            if hit.size:
                return Definiteness("isotropic", VectorL(tuple(ctx.from_code(c) for c in chunk[hit[0]])))
        return Definiteness("definite")
    if ctx.alpha < 0 or n == 1:
        # x^2 - alpha*y^2 is positive definite for alpha < 0; at n = 1 it vanishes
        # only at 0 because alpha is not a square
        return Definiteness("definite")
    # <(a, 1), (a, 1)> = N(a) + 1 vanishes iff N(a) = -1
    sol = _search_norm(ctx, Fraction(-1))
    if sol is not None:
        entries = (sol, ctx.one) + (ctx.zero,) * (n - 2)
        return Definiteness("isotropic", VectorL(entries))
    return Definiteness("unknown")


# --------------------------------------------------------------------------
# Delta membership


@dataclass(frozen=True)
class DeltaVerdict:
    status: str  # "member" | "non_member" | "unknown"
    witness: tuple[ExtScalar, ...] | None
    level: int

    @property
    def member(self) -> bool:
        return self.status == "member"

    def recheck(self, d) -> bool:
        if self.witness is None:
            return False
        ctx = self.witness[0].ctx
        total = ctx.k_zero
        for a in self.witness:
            total = ctx.k_add(total, a.norm())
        return total == d


def _finite_norm_preimage(ctx: FieldCtx, d: int) -> ExtScalar:
    T = ext_tables(ctx)
    # prefer square roots inside K so that d = 1 yields 1
    in_k = np.arange(0, T.order, T.q)
    hits = in_k[T.norm[in_k] == d]
    if hits.size == 0:
        hits = np.nonzero(T.norm == d)[0]
    return ctx.from_code(int(hits[0]))


def _gauss(ctx: FieldCtx, x: Fraction, y: Fraction) -> ExtScalar:
    return ExtScalar(Fraction(x), Fraction(y), ctx)


def _search_norm(ctx: FieldCtx, d: Fraction, height: int = SEARCH_HEIGHT) -> ExtScalar | None:
    """Bounded search for z = (s + t*beta)/c with N(z) = d, over Q(sqrt(alpha))."""
    d = Fraction(d)
    if d == 0:
        return ctx.zero
    a, b = d.numerator, d.denominator
    alpha = ctx.alpha
    for c in range(1, height * height + 1):
        if (c * c * a) % b:
            continue
        target = c * c * a // b
        # s^2 - alpha t^2 = target
        for t in range(0, height * height + 1):
            s2 = target + alpha * t * t
            if s2 < 0:
                if alpha < 0:
                    break
                continue
            if squares.is_square(s2):
                return _gauss(ctx, Fraction(isqrt(s2), c), Fraction(t, c))
    return None


def delta_membership(ctx: FieldCtx, d, level: int = 1) -> DeltaVerdict:
    """Is ``d`` a sum of ``level`` norms from L?  Members carry a witness."""
    if level < 1:
        raise ValueError("level must be >= 1")
    pad = (ctx.zero,) * (level - 1)
    if ctx.is_finite:
        # every element of a finite field is a norm
        return DeltaVerdict("member", (_finite_norm_preimage(ctx, d),) + pad, level)
    d = Fraction(d)
    if d == 0:
        return DeltaVerdict("member", (ctx.zero,) + pad, level)
    if ctx.alpha < 0 and d < 0:
        return DeltaVerdict("non_member", None, level)
    if ctx.alpha == -1:
        xy = squares.rational_two_squares(d)
        if xy is not None:
            return DeltaVerdict("member", (_gauss(ctx, *xy),) + pad, level)
        if level == 1:
            return DeltaVerdict("non_member", None, level)
        s = squares.rational_four_squares(d)
        wit = (_gauss(ctx, s[0], s[1]), _gauss(ctx, s[2], s[3])) + (ctx.zero,) * (level - 2)
        return DeltaVerdict("member", wit, level)
    z = _search_norm(ctx, d)
    if z is not None:
        return DeltaVerdict("member", (z,) + pad, level)
    if level >= 2:
        for x, y in itertools.product(range(-3, 4), repeat=2):
            head = _gauss(ctx, x, y)
            rest = delta_membership(ctx, d - head.norm(), level - 1)
            if rest.member:
                return DeltaVerdict("member", (head,) + rest.witness, level)
    return DeltaVerdict("unknown", None, level)


# --------------------------------------------------------------------------
# Delta meet (1 - Delta)


@dataclass(frozen=True)
class IntervalPoint:
    """t with witnesses: N(a) = t and N(b) = 1 - t."""

    t: Any
    a: ExtScalar
    b: ExtScalar

    def recheck(self) -> bool:
        ctx = self.a.ctx
        return self.a.norm() == self.t and self.b.norm() == ctx.k_sub(ctx.k_one, self.t)


def sphere3_point(p1: Fraction, p2: Fraction, p3: Fraction) -> tuple[Fraction, ...]:
    """Inverse stereographic projection onto x1^2 + x2^2 + x3^2 + x4^2 = 1."""
    s = p1 * p1 + p2 * p2 + p3 * p3
    den = s + 1
    return (2 * p1 / den, 2 * p2 / den, 2 * p3 / den, (s - 1) / den)


def _sphere3_params(seed: int | None) -> Iterator[tuple[Fraction, Fraction, Fraction]]:
    if seed is None:
        c = 1
        while True:
            for i, j, k in itertools.product(range(c + 1), repeat=3):
                yield Fraction(i, c), Fraction(j, c), Fraction(k, c)
            c += 1
    rng = random.Random(seed)
    while True:
        c = rng.randint(1, 12)
        yield tuple(Fraction(rng.randint(-2 * c, 2 * c), c) for _ in range(3))  # type: ignore[misc]


def unit_pairs(ctx: FieldCtx, seed: int | None = None) -> Iterator[tuple[ExtScalar, ExtScalar]]:
    """Rational points (x, y) in Q(i)^2 with N(x) + N(y) = 1, deterministic order."""
    if ctx.is_finite or ctx.alpha != -1:
        raise FieldError("the S^3 parametrization is implemented for Q(i) only")
    for p in _sphere3_params(seed):
        x1, x2, x3, x4 = sphere3_point(*p)
        yield _gauss(ctx, x1, x2), _gauss(ctx, x3, x4)


def delta_interval_sample(ctx: FieldCtx, count: int | None = None, seed: int | None = None) -> list[IntervalPoint]:
    """Certified elements t of Delta meet (1 - Delta).

    Finite fields return the whole set (all of K).  Over Q(i) the first ``count``
    distinct values from the S^3 parametrization t = x1^2 + x2^2 are returned.
    """
    if ctx.is_finite:
        return [
            IntervalPoint(t, _finite_norm_preimage(ctx, t), _finite_norm_preimage(ctx, ctx.k_sub(1, t)))
            for t in ctx.k_elements()
        ]
    count = 10 if count is None else count
    out: list[IntervalPoint] = []
    seen: set = set()
    if ctx.alpha == -1:
        for a, b in unit_pairs(ctx, seed):
            t = a.norm()
            if t not in seen:
                seen.add(t)
                out.append(IntervalPoint(t, a, b))
                if len(out) >= count:
                    break
        return out
    for x, y, c in itertools.product(range(0, 6), range(0, 6), range(1, 6)):
        a = _gauss(ctx, Fraction(x, c), Fraction(y, c))
        t = a.norm()
        if t in seen:
            continue
        rest = delta_membership(ctx, 1 - t, 1)
        if rest.member:
            seen.add(t)
            out.append(IntervalPoint(t, a, rest.witness[0]))
            if len(out) >= count:
                break
    return out


# --------------------------------------------------------------------------
# norm equations


@dataclass(frozen=True)
class NormSolution:
    status: str  # "solved" | "no_solution" | "unknown"
    t: ExtScalar | None = None

    @property
    def solved(self) -> bool:
        return self.status == "solved"


def norm_equation(ctx: FieldCtx, d, nonzero: bool = False) -> NormSolution:
    """Solve t * sigma(t) = d."""
    if d == ctx.k_zero:
        if nonzero:
            raise FieldError("t * sigma(t) = 0 has no nonzero solution")
        return NormSolution("solved", ctx.zero)
    v = delta_membership(ctx, d, 1)
    if v.member:
        t = v.witness[0]
        assert t.norm() == d
        return NormSolution("solved", t)
    return NormSolution("no_solution" if v.status == "non_member" else "unknown")


def rescale_to_unit(u: VectorL) -> VectorL | None:
    """A multiple t*u with <tu, tu> = 1, or None when 1/<u,u> is not a norm."""
    ctx = u.ctx
    d = self_form(u)
    if d == ctx.k_zero:
        return None
    if d == ctx.k_one:
        return u
    sol = norm_equation(ctx, ctx.k_div(ctx.k_one, d))
    if not sol.solved:
        return None
    return sol.t * u


# --------------------------------------------------------------------------
# Gram-Schmidt


def orthogonalize(ws: Sequence[VectorL], complete: bool = False) -> tuple[list[VectorL], bool]:
    """Mutually orthogonal f_1..f_m spanning the same flags as w_1..w_m.

    With ``complete`` the family is extended to a basis of L^n using standard
    basis vectors.  Vectors come back normalized (<f, f> = 1) when every
    1/<v, v> is a norm; otherwise the raw orthogonal family is returned.
    """
    if not ws:
        return [], True
    ctx = ws[0].ctx
    n = len(ws[0])
    if rank([list(w) for w in ws]) < len(ws):
        raise DependentError("input vectors are linearly dependent")
    seq = list(ws)
    if complete:
        for i in range(n):
            e = basis_vector(ctx, n, i)
            if rank([list(w) for w in seq] + [list(e)]) > len(seq):
                seq.append(e)
    raw: list[VectorL] = []
    norms = []
    for w in seq:
        v = w
        for f, nf in zip(raw, norms):
            coef = form(f, w) / ctx.embed(nf)
            v = v - coef * f
        nv = self_form(v)
        if nv == ctx.k_zero:
            raise IsotropicError(f"isotropic vector {v} met during orthogonalization")
        raw.append(v)
        norms.append(nv)
    scaled = [rescale_to_unit(v) for v in raw]
    if all(s is not None for s in scaled):
        return scaled, True  # type: ignore[return-value]
    return raw, False
