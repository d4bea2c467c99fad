"""Exact arithmetic in a base field K and its quadratic extension L = K(beta).

Two families of pairs are supported:

* finite: K = F_q with q = p^m, L = F_{q^2}, sigma the Frobenius t -> t^q;
* rational: K = Q, L = Q(sqrt(alpha)), sigma the nontrivial automorphism.

K-values are plain Python objects: an ``int`` code for finite fields and a
``fractions.Fraction`` for Q.  A finite code packs the coefficient vector of the
reduced polynomial representative as ``sum(c_i * p**i)``, so integer order is
lexicographic order on ``(c_{m-1}, ..., c_0)``.  Elements of L are
:class:`ExtScalar` pairs ``(re, im)`` meaning ``re + im*beta``.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Sequence

import numpy as np
from sympy import factorint, isprime

__all__ = [
    "FieldError",
    "GF",
    "FieldCtx",
    "ExtScalar",
    "ExtTables",
    "parse_field",
    "finite_field",
    "rational_field",
    "ext_tables",
]


class FieldError(ValueError):
    """Invalid field data or an illegal arithmetic request."""


# --------------------------------------------------------------------------
# base field F_q


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a: list[int], mod: Sequence[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic ``mod`` (coefficients low to high)."""
    a = [x % p for x in a]
    dm = len(mod) - 1
    for k in range(len(a) - 1, dm - 1, -1):
        c = a[k]
        if c:
            for i in range(dm + 1):
                a[k - dm + i] = (a[k - dm + i] - c * mod[i]) % p
    return _poly_trim(a[:dm])


def _poly_divides(d: Sequence[int], a: Sequence[int], p: int) -> bool:
    # d monic
    return not _poly_mod(list(a), d, p)


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    """Monic polynomials of degree ``deg`` in lexicographic order of (c_{deg-1},...,c_0)."""
    for code in range(p**deg):
        c = []
        for _ in range(deg):
            code, r = divmod(code, p)
            c.append(r)
        yield tuple(c) + (1,)


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    deg = len(f) - 1
    if deg <= 1:
        return deg == 1
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys(p, d):
            if _poly_divides(g, f, p):
                return False
    return True


def least_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree ``m`` over F_p."""
    for f in _monic_polys(p, m):
        if _is_irreducible(f, p):
            return f
    raise FieldError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class GF:
    """The finite field F_{p^m} on integer codes ``0 .. q-1``."""

    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def from_digits(self, c: Sequence[int]) -> int:
        code = 0
        for x in reversed(list(c)):
            code = code * self.p + (x % self.p)
        return code

    def from_int(self, n: int) -> int:
        return n % self.p

    @functools.cached_property
    def _tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.q
        add = np.empty((q, q), dtype=np.int64)
        mul = np.empty((q, q), dtype=np.int64)
        dg = [self.digits(a) for a in range(q)]
        for a in range(q):
            for b in range(q):
                add[a, b] = self.from_digits([x + y for x, y in zip(dg[a], dg[b])])
                prod = [0] * (2 * self.m - 1)
                for i, x in enumerate(dg[a]):
                    if x:
                        for j, y in enumerate(dg[b]):
                            prod[i + j] += x * y
                mul[a, b] = self.from_digits(_poly_mod(prod, self.modulus, self.p))
        return add, mul

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        return int(self._tables[0][a, b])

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        return self.from_digits([-x for x in self.digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        return int(self._tables[1][a, b])

    def pow(self, a: int, e: int) -> int:
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return self.pow(a, self.q - 2)

    def is_square(self, a: int) -> bool:
        if a == 0 or self.p == 2:
            return True
        return self.pow(a, (self.q - 1) // 2) == 1

    def numpy_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Dense (q x q) addition and multiplication tables."""
        return self._tables


# --------------------------------------------------------------------------
# field context


@dataclass(frozen=True)
class FieldCtx:
    """The data (K, L, sigma, beta) of a degree-2 Galois extension.

    ``alpha`` is set when beta^2 = alpha (odd characteristic and Q); ``eps`` is
    set in characteristic 2 where beta^2 = beta + eps.
    """

    kind: str
    base: GF | None = None
    alpha: Any = None
    eps: Any = None

    # -- identification

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def char(self) -> int:
        return self.base.p if self.is_finite else 0

    @property
    def q(self) -> int:
        if not self.is_finite:
            raise FieldError("Q is infinite")
        return self.base.q

    def spec(self) -> str:
        if self.is_finite:
            return f"finite:p={self.base.p},m={self.base.m}"
        return f"rational:alpha={self.alpha}"

    def __str__(self) -> str:
        return self.spec()

    def describe(self) -> str:
        if self.is_finite:
            q = self.q
            head = f"K = F_{q}, L = F_{q * q}"
            if self.base.m > 1:
                head += f", K-modulus {_fmt_poly(self.base.modulus)}"
            if self.char == 2:
                return head + f", beta^2 = beta + {self.k_format(self.eps)}"
            return head + f", beta^2 = {self.k_format(self.alpha)}"
        return f"K = Q, L = Q(sqrt({self.alpha})), beta^2 = {self.alpha}"

    # -- K arithmetic

    def k(self, value: Any) -> Any:
        """Coerce an int (or Fraction for Q) to a canonical K-value."""
        if self.is_finite:
            if isinstance(value, Fraction):
                return self.k_div(self.base.from_int(value.numerator), self.base.from_int(value.denominator))
            return self.base.from_int(int(value))
        return Fraction(value)

    @property
    def k_zero(self) -> Any:
        return 0 if self.is_finite else Fraction(0)

    @property
    def k_one(self) -> Any:
        return 1 if self.is_finite else Fraction(1)

    def k_add(self, a, b):
        return self.base.add(a, b) if self.is_finite else a + b

    def k_sub(self, a, b):
        return self.base.sub(a, b) if self.is_finite else a - b

    def k_neg(self, a):
        return self.base.neg(a) if self.is_finite else -a

    def k_mul(self, a, b):
        return self.base.mul(a, b) if self.is_finite else a * b

    def k_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in K")
        return self.base.mul(a, self.base.inv(b)) if self.is_finite else a / b

    def k_arith(self, a, b, op: str):
        """Dispatch ``op`` in {add, sub, mul, div} on K-values."""
        try:
            return {"add": self.k_add, "sub": self.k_sub, "mul": self.k_mul, "div": self.k_div}[op](a, b)
        except KeyError:
            raise FieldError(f"unknown operation {op!r}") from None

    def k_key(self, a):
        """Sort key realizing the canonical order of K."""
        return a

    def k_elements(self) -> range:
        if not self.is_finite:
            raise FieldError("K = Q is not enumerable")
        return range(self.q)

    def k_format(self, a) -> str:
        if self.is_finite:
            if self.base.m == 1:
                return str(a)
            return "[" + ",".join(str(c) for c in self.base.digits(a)) + "]"
        a = Fraction(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def k_parse(self, text: str) -> Any:
        text = text.strip()
        if self.is_finite:
            if text.startswith("["):
                coeffs = [int(c) for c in text.strip("[]").split(",") if c.strip()]
                if len(coeffs) > self.base.m:
                    raise FieldError(f"too many coefficients in {text!r}")
                return self.base.from_digits(coeffs)
            return self.k(Fraction(text))
        return Fraction(text)

    # -- L constructors

    def __call__(self, re: Any = 0, im: Any = 0) -> "ExtScalar":
        return ExtScalar(self.k(re), self.k(im), self)

    @property
    def zero(self) -> "ExtScalar":
        return ExtScalar(self.k_zero, self.k_zero, self)

    @property
    def one(self) -> "ExtScalar":
        return ExtScalar(self.k_one, self.k_zero, self)

    @property
    def beta(self) -> "ExtScalar":
        return ExtScalar(self.k_zero, self.k_one, self)

    def embed(self, a) -> "ExtScalar":
        """K-value as an element of L."""
        return ExtScalar(a, self.k_zero, self)

    def l_elements(self) -> Iterator["ExtScalar"]:
        """All of L in canonical order (finite only)."""
        for x in self.k_elements():
            for y in self.k_elements():
                yield ExtScalar(x, y, self)

    def from_code(self, code: int) -> "ExtScalar":
        x, y = divmod(int(code), self.q)
        return ExtScalar(x, y, self)

    def parse(self, text: str | int | float) -> "ExtScalar":
        """Parse ``"x"``, ``"x+y*b"``, ``"y*b"`` or ``"b"``."""
        if isinstance(text, int):
            return self(text)
        s = str(text).replace(" ", "")
        if not s:
            raise FieldError("empty scalar")
        if not s.endswith("b"):
            return ExtScalar(self.k_parse(s), self.k_zero, self)
        head = s[:-1]
        # split at the last sign that is not the leading sign of the b-coefficient
        cut = next((i for i in range(len(head) - 1, 0, -1) if head[i] in "+-" and head[i - 1] not in "+-"), None)
        if cut is None:
            re_part, im_part = "", head
        else:
            re_part, im_part = head[:cut], head[cut:].lstrip("+")
        if im_part.endswith("*"):
            im_part = im_part[:-1]
        elif im_part not in ("", "-"):
            raise FieldError(f"cannot parse scalar {text!r}")
        im = {"": self.k_one, "-": self.k_neg(self.k_one)}.get(im_part)
        if im is None:
            im = self.k_parse(im_part)
        re_val = self.k_parse(re_part) if re_part else self.k_zero
        return ExtScalar(re_val, im, self)


def _fmt_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


# --------------------------------------------------------------------------
# extension elements


class ExtScalar:
    """An element ``re + im*beta`` of L; immutable."""

    __slots__ = ("re", "im", "ctx")

    def __init__(self, re: Any, im: Any, ctx: FieldCtx):
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)
        object.__setattr__(self, "ctx", ctx)

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    def _coerce(self, other) -> "ExtScalar":
        if isinstance(other, ExtScalar):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldError("operands live in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx(other)
        if not isinstance(other, ExtScalar):
            return NotImplemented
        return self.re == other.re and self.im == other.im and (self.ctx is other.ctx or self.ctx == other.ctx)

    def __hash__(self):
        return hash((self.re, self.im))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = self.ctx
        return ExtScalar(c.k_add(self.re, o.re), c.k_add(self.im, o.im), c)

    __radd__ = __add__

    def __neg__(self):
        c = self.ctx
        return ExtScalar(c.k_neg(self.re), c.k_neg(self.im), c)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = self.ctx
        return ExtScalar(c.k_sub(self.re, o.re), c.k_sub(self.im, o.im), c)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c = self.ctx
        x1, y1, x2, y2 = self.re, self.im, o.re, o.im
        yy = c.k_mul(y1, y2)
        cross = c.k_add(c.k_mul(x1, y2), c.k_mul(x2, y1))
        if c.char == 2:
            # beta^2 = beta + eps
            return ExtScalar(c.k_add(c.k_mul(x1, x2), c.k_mul(c.eps, yy)), c.k_add(cross, yy), c)
        return ExtScalar(c.k_add(c.k_mul(x1, x2), c.k_mul(c.alpha, yy)), cross, c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.ctx.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "ExtScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in L")
        inv_n = self.ctx.k_div(self.ctx.k_one, n)
        s = self.conj()
        return ExtScalar(self.ctx.k_mul(s.re, inv_n), self.ctx.k_mul(s.im, inv_n), self.ctx)

    def conj(self) -> "ExtScalar":
        """The Galois conjugate sigma(z)."""
        c = self.ctx
        if c.char == 2:
            return ExtScalar(c.k_add(self.re, self.im), self.im, c)
        return ExtScalar(self.re, c.k_neg(self.im), c)

    def norm(self):
        """z * sigma(z) as a K-value."""
        prod = self * self.conj()
        assert prod.im == self.ctx.k_zero, "norm left K"
        return prod.re

    def trace(self):
        """z + sigma(z) as a K-value."""
        s = self + self.conj()
        assert s.im == self.ctx.k_zero, "trace left K"
        return s.re

    def re_im(self) -> tuple[Any, Any]:
        return self.re, self.im

    @property
    def in_base(self) -> bool:
        return self.im == self.ctx.k_zero

    def is_zero(self) -> bool:
        return self.re == self.ctx.k_zero and self.im == self.ctx.k_zero

    def __bool__(self):
        return not self.is_zero()

    @property
    def code(self) -> int:
        """Integer code ``re*q + im`` of a finite-field element."""
        return self.re * self.ctx.q + self.im

    def sort_key(self):
        return (self.re, self.im)

    def __lt__(self, other: "ExtScalar"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        c = self.ctx
        if self.im == c.k_zero:
            return c.k_format(self.re)
        im = "b" if self.im == c.k_one else f"{c.k_format(self.im)}*b"
        if not c.is_finite and self.im == -1:
            im = "-b"
        if self.re == c.k_zero:
            return im
        sep = "" if im.startswith("-") else "+"
        return f"{c.k_format(self.re)}{sep}{im}"

    def __repr__(self):
        return f"ExtScalar({self})"

    def __complex__(self):
        c = self.ctx
        if c.is_finite:
            raise TypeError("finite-field element has no complex value")
        if c.alpha < 0:
            return complex(float(self.re), float(self.im) * abs(c.alpha) ** 0.5)
        return complex(float(self.re) + float(self.im) * c.alpha ** 0.5, 0.0)


# --------------------------------------------------------------------------
# construction and parsing


def finite_field(p: int, m: int = 1) -> FieldCtx:
    """F_q inside F_{q^2} with deterministic modulus and beta data."""
    if not isinstance(p, int) or not isprime(p):
        raise FieldError(f"p={p} is not prime")
    if m < 1:
        raise FieldError(f"m={m} must be >= 1")
    modulus = (0, 1) if m == 1 else least_irreducible(p, m)
    base = GF(p, m, modulus)
    q = base.q
    if p == 2:
        eps = next(
            (e for e in range(q) if all(base.add(base.add(base.mul(t, t), t), e) != 0 for t in range(q))),
            None,
        )
        ctx = FieldCtx("finite", base, eps=eps)
    else:
        alpha = next(a for a in range(1, q) if not base.is_square(a))
        ctx = FieldCtx("finite", base, alpha=alpha)
    _check_beta(ctx)
    return ctx


def rational_field(alpha: int) -> FieldCtx:
    """Q inside Q(sqrt(alpha)) for a square-free integer alpha not in {0, 1}."""
    alpha = int(alpha)
    if alpha in (0, 1):
        raise FieldError(f"alpha={alpha} does not define a quadratic extension")
    if any(e > 1 for e in factorint(abs(alpha)).values()):
        raise FieldError(f"alpha={alpha} is not square-free")
    ctx = FieldCtx("rational", None, alpha=alpha)
    _check_beta(ctx)
    return ctx


def _check_beta(ctx: FieldCtx) -> None:
    b = ctx.beta
    if ctx.char == 2:
        assert b * b == b + ctx.embed(ctx.eps)
    else:
        assert b * b == ctx.embed(ctx.alpha)
    assert b.conj() != b and b.conj().conj() == b


_FINITE_RE = re.compile(r"^finite:p=(-?\d+),m=(-?\d+)$")
_RATIONAL_RE = re.compile(r"^rational:alpha=(-?\d+)$")


def parse_field(spec: str) -> FieldCtx:
    """Parse ``finite:p=<prime>,m=<int>`` or ``rational:alpha=<int>``."""
    s = spec.replace(" ", "")
    if mt := _FINITE_RE.match(s):
        return finite_field(int(mt.group(1)), int(mt.group(2)))
    if mt := _RATIONAL_RE.match(s):
        return rational_field(int(mt.group(1)))
    raise FieldError(f"unrecognized field spec {spec!r}")


# --------------------------------------------------------------------------
# dense tables for enumeration kernels

MAX_TABLE_ORDER = 4096


@dataclass(frozen=True)
class ExtTables:
    """Lookup tables for L = F_{q^2} on codes ``re*q + im`` (canonical order)."""

    ctx: FieldCtx
    q: int
    k_add: np.ndarray = field(repr=False)
    k_mul: np.ndarray = field(repr=False)
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    conj: np.ndarray = field(repr=False)
    norm: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.q * self.q

    @property
    def one(self) -> int:
        return self.q

    def code(self, z: ExtScalar) -> int:
        return z.re * self.q + z.im

    def k_sum(self, cols: np.ndarray) -> np.ndarray:
        """Sum K-codes along the last axis."""
        acc = cols[..., 0]
        for j in range(1, cols.shape[-1]):
            acc = self.k_add[acc, cols[..., j]]
        return acc


@functools.lru_cache(maxsize=32)
def ext_tables(ctx: FieldCtx) -> ExtTables:
    if not ctx.is_finite:
        raise FieldError("tables exist only for finite fields")
    q = ctx.q
    Q = q * q
    if Q > MAX_TABLE_ORDER:
        raise FieldError(f"|L| = {Q} exceeds the table limit {MAX_TABLE_ORDER}")
    kadd, kmul = _k_tables(ctx.base)
    codes = np.arange(Q)
    x, y = codes // q, codes % q
    X1, X2 = x[:, None], x[None, :]
    Y1, Y2 = y[:, None], y[None, :]
    add = kadd[X1, X2] * q + kadd[Y1, Y2]
    yy = kmul[Y1, Y2]
    cross = kadd[kmul[X1, Y2], kmul[X2, Y1]]
    if ctx.char == 2:
        mul = kadd[kmul[X1, X2], kmul[ctx.eps, yy]] * q + kadd[cross, yy]
    else:
        mul = kadd[kmul[X1, X2], kmul[ctx.alpha, yy]] * q + cross
    kneg = np.array([ctx.base.neg(a) for a in range(q)])
    neg = kneg[x] * q + kneg[y]
    if ctx.char == 2:
        conj = kadd[x, y] * q + y
    else:
        conj = x * q + kneg[y]
    prod = mul[codes, conj]
    assert np.all(prod % q == 0)
    norm = prod // q
    return ExtTables(ctx, q, kadd, kmul, add, mul, neg, conj, norm)


def _k_tables(base: GF) -> tuple[np.ndarray, np.ndarray]:
    if base.m > 1:
        return base.numpy_tables()
    r = np.arange(base.p)
    return (r[:, None] + r[None, :]) % base.p, (r[:, None] * r[None, :]) % base.p
