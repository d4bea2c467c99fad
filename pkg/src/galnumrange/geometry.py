"""Delta-convexity: hulls of pairs, convexity tests, closures and Delta_n-ellipses.

Finite subsets of L are handled as frozensets of ExtScalar; internally the
scans run on integer codes with bitmask sets.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Any, Iterable

import numpy as np

from .field_core import ExtScalar, FieldCtx, FieldError, ext_tables
from .forms import DeltaVerdict, delta_interval_sample, delta_membership, norm_equation, unit_pairs


# --------------------------------------------------------------------------
# Delta and Delta meet (1 - Delta) over finite fields


@functools.lru_cache(maxsize=32)
def delta_set_codes(ctx: FieldCtx) -> np.ndarray:
    """K-codes of Delta, the image of the norm map."""
    return np.unique(ext_tables(ctx).norm)


@functools.lru_cache(maxsize=32)
def interval_codes(ctx: FieldCtx) -> tuple[int, ...]:
    """K-codes t with t in Delta and 1 - t in Delta."""
    delta = set(int(t) for t in delta_set_codes(ctx))
    return tuple(t for t in sorted(delta) if ctx.k_sub(ctx.k_one, t) in delta)


def _hull_codes(ctx: FieldCtx, a: int, b: int) -> np.ndarray:
    T = ext_tables(ctx)
    ts = np.array(interval_codes(ctx)) * T.q  # embed K into L
    diff = T.add[a, T.neg[b]]
    return T.add[b, T.mul[ts, diff]]


@functools.lru_cache(maxsize=None)
def _hull_mask(ctx: FieldCtx, a: int, b: int) -> int:
    mask = 0
    for c in _hull_codes(ctx, a, b):
        mask |= 1 << int(c)
    return mask


def _mask(codes: Iterable[int]) -> int:
    m = 0
    for c in codes:
        m |= 1 << int(c)
    return m


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _codes_of(S: Iterable[ExtScalar]) -> list[int]:
    return sorted({z.code for z in S})


# --------------------------------------------------------------------------
# hulls and convexity


def hull_pair(a: ExtScalar, b: ExtScalar, count: int = 10, seed: int | None = None):
    """{t a + (1 - t) b : t in Delta meet (1 - Delta)}.

    Finite fields give the exact frozenset; over Q(sqrt(alpha)) a list of
    ``count`` certified points (deterministic) is returned.
    """
    if a == b:
        raise ValueError("hull_pair needs a != b")
    ctx = a.ctx
    if ctx.is_finite:
        return frozenset(ctx.from_code(int(c)) for c in _hull_codes(ctx, a.code, b.code))
    return [ctx.embed(p.t) * a + (ctx.one - ctx.embed(p.t)) * b for p in delta_interval_sample(ctx, count, seed)]


@dataclass(frozen=True)
class ConvexityResult:
    convex: bool
    counterexample: tuple[ExtScalar, ExtScalar, Any] | None = None

    def __bool__(self):
        return self.convex


def _convex_mask(ctx: FieldCtx, mask: int) -> tuple[int, int] | None:
    members = _bits(mask)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if _hull_mask(ctx, a, b) & ~mask:
                return a, b
    return None


def is_delta_convex(S: Iterable[ExtScalar], ctx: FieldCtx) -> ConvexityResult:
    """Exhaustive pair check; returns (a, b, t) with t a + (1-t) b outside S on failure."""
    if not ctx.is_finite:
        raise FieldError("Delta-convexity is decided only over finite fields")
    mask = _mask(_codes_of(S))
    bad = _convex_mask(ctx, mask)
    if bad is None:
        return ConvexityResult(True)
    a, b = bad
    T = ext_tables(ctx)
    za, zb = ctx.from_code(a), ctx.from_code(b)
    for t in interval_codes(ctx):
        z = ctx.embed(t) * za + (ctx.one - ctx.embed(t)) * zb
        if not (mask >> T.code(z)) & 1:
            return ConvexityResult(False, (za, zb, t))
    raise AssertionError("unreachable")  # pragma: no cover


def _closure_mask(ctx: FieldCtx, mask: int) -> int:
    while True:
        members = _bits(mask)
        new = mask
        for i, a in enumerate(members):
            for b in members[i + 1:]:
                new |= _hull_mask(ctx, a, b)
        if new == mask:
            return mask
        mask = new


def delta_convex_closure(S: Iterable[ExtScalar], ctx: FieldCtx) -> frozenset:
    """Least Delta-convex superset of S (finite fields)."""
    if not ctx.is_finite:
        raise FieldError("closures are computed only over finite fields")
    mask = _closure_mask(ctx, _mask(_codes_of(S)))
    return frozenset(ctx.from_code(c) for c in _bits(mask))


def delta_convex_closure_codes(ctx: FieldCtx, codes: Iterable[int]) -> list[int]:
    return _bits(_closure_mask(ctx, _mask(codes)))


def convex_subsets(ctx: FieldCtx) -> list[frozenset]:
    """All nonempty Delta-convex subsets of L by scanning every subset.

    Cost is 2^|L| subsets; intended for |L| <= 16 or so.
    """
    Q = ext_tables(ctx).order
    if Q > 20:
        raise FieldError(f"2^{Q} subsets is beyond an exhaustive scan")
    out = []
    for mask in range(1, 1 << Q):
        if _convex_mask(ctx, mask) is None:
            out.append(frozenset(ctx.from_code(c) for c in _bits(mask)))
    return out


# --------------------------------------------------------------------------
# ellipses


@dataclass(frozen=True)
class EllipseSpec:
    """Parameters of a Delta_n-ellipse and its affine frame z -> a + b z.

    one_focus: {sigma(x) y}; two_foci: {d1 y sigma(x) + d2 y sigma(y)}, both over
    delta1 N(x) + delta2 N(y) = 1.
    """

    kind: str
    delta1: Any
    delta2: Any
    ctx: FieldCtx
    d1: ExtScalar | None = None
    d2: ExtScalar | None = None
    frame_a: ExtScalar | None = None
    frame_b: ExtScalar | None = None
    level: int = 1
    verdicts: tuple[DeltaVerdict, DeltaVerdict] | None = field(default=None, compare=False)

    def __post_init__(self):
        ctx = self.ctx
        if self.kind not in ("one_focus", "two_foci"):
            raise ValueError(f"unknown ellipse kind {self.kind!r}")
        if self.kind == "two_foci" and (self.d1 is None or self.d2 is None or not self.d1 or not self.d2):
            raise ValueError("two_foci ellipses need nonzero d1, d2")
        if self.frame_a is None:
            object.__setattr__(self, "frame_a", ctx.zero)
        if self.frame_b is None:
            object.__setattr__(self, "frame_b", ctx.one)
        if not self.frame_b:
            raise ValueError("frame b must be nonzero")
        verdicts = []
        for name, dv in (("delta1", self.delta1), ("delta2", self.delta2)):
            if dv == ctx.k_zero:
                raise ValueError(f"{name} must be nonzero")
            v = delta_membership(ctx, dv, self.level)
            if v.status == "non_member":
                raise ValueError(f"{name} = {ctx.k_format(dv)} is not in Delta_{self.level}")
            verdicts.append(v)
        object.__setattr__(self, "verdicts", tuple(verdicts))

    def value(self, x: ExtScalar, y: ExtScalar) -> ExtScalar:
        if self.kind == "one_focus":
            s = x.conj() * y
        else:
            s = self.d1 * y * x.conj() + self.d2 * y * y.conj()
        return self.frame_a + self.frame_b * s

    def constraint(self, x: ExtScalar, y: ExtScalar) -> bool:
        ctx = self.ctx
        return ctx.k_add(ctx.k_mul(self.delta1, x.norm()), ctx.k_mul(self.delta2, y.norm())) == ctx.k_one

    def with_frame(self, a: ExtScalar, b: ExtScalar) -> "EllipseSpec":
        return EllipseSpec(self.kind, self.delta1, self.delta2, self.ctx, self.d1, self.d2, a, b, self.level)


def ellipse_point_codes(E: EllipseSpec) -> np.ndarray:
    ctx = E.ctx
    T = ext_tables(ctx)
    codes = np.arange(T.order)
    lhs = T.k_add[T.k_mul[E.delta1, T.norm][:, None], T.k_mul[E.delta2, T.norm][None, :]]
    xs, ys = np.nonzero(lhs == 1)
    if E.kind == "one_focus":
        vals = T.mul[T.conj[codes[xs]], codes[ys]]
    else:
        t1 = T.mul[T.code(E.d1), T.mul[codes[ys], T.conj[codes[xs]]]]
        t2 = T.mul[T.code(E.d2), T.mul[codes[ys], T.conj[codes[ys]]]]
        vals = T.add[t1, t2]
    vals = T.add[T.code(E.frame_a), T.mul[T.code(E.frame_b), vals]]
    return np.unique(vals)


def ellipse_points(E: EllipseSpec, count: int = 20, seed: int | None = None):
    """The ellipse as an exact frozenset (finite) or ``count`` sampled points."""
    ctx = E.ctx
    if ctx.is_finite:
        return frozenset(ctx.from_code(int(c)) for c in ellipse_point_codes(E))
    s1 = norm_equation(ctx, ctx.k_div(ctx.k_one, E.delta1))
    s2 = norm_equation(ctx, ctx.k_div(ctx.k_one, E.delta2))
    if not (s1.solved and s2.solved) or ctx.alpha != -1:
        raise FieldError("sampling needs Q(i) and delta1, delta2 in Delta")
    out: list[ExtScalar] = []
    seen = set()
    for x0, y0 in unit_pairs(ctx, seed):
        x, y = s1.t * x0, s2.t * y0
        assert E.constraint(x, y)
        z = E.value(x, y)
        if z not in seen:
            seen.add(z)
            out.append(z)
            if len(out) >= count:
                break
    return out
