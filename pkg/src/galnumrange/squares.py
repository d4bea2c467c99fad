"""Integer and rational sums of squares (decisions and explicit decompositions)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from sympy import factorint


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def is_sum_of_two_squares(n: int) -> bool:
    """Primes congruent to 3 mod 4 must divide ``n`` to an even power."""
    if n < 0:
        return False
    if n == 0:
        return True
    return all(e % 2 == 0 for p, e in factorint(n).items() if p % 4 == 3)


def _sqrt_minus_one(p: int) -> int:
    for c in range(2, p):
        x = pow(c, (p - 1) // 4, p)
        if x * x % p == p - 1:
            return x
    raise ValueError(p)  # pragma: no cover


def _prime_two_squares(p: int) -> tuple[int, int]:
    """Hermite-Serret: Euclid on (p, sqrt(-1) mod p) stops below sqrt(p)."""
    if p == 2:
        return 1, 1
    a, b = p, _sqrt_minus_one(p)
    r = isqrt(p)
    while b > r:
        a, b = b, a % b
    c = isqrt(p - b * b)
    assert b * b + c * c == p
    return b, c


def two_squares(n: int) -> tuple[int, int] | None:
    """Return ``(s, t)`` with ``0 <= s <= t`` and ``s^2 + t^2 == n``, or None."""
    if n < 0:
        return None
    if n == 0:
        return 0, 0
    # Gaussian-integer product of prime factors
    re, im, scale = 1, 0, 1
    for p, e in factorint(n).items():
        if p % 4 == 3:
            if e % 2:
                return None
            scale *= p ** (e // 2)
            continue
        a, b = _prime_two_squares(p)
        for _ in range(e):
            re, im = re * a - im * b, re * b + im * a
    s, t = sorted((abs(re) * scale, abs(im) * scale))
    assert s * s + t * t == n
    return s, t


def four_squares(n: int) -> tuple[int, int, int, int]:
    """Some ``(a, b, c, d)`` with ``a^2 + b^2 + c^2 + d^2 == n`` for ``n >= 0``."""
    if n < 0:
        raise ValueError("negative integers are not sums of squares")
    x = isqrt(n)
    while x >= 0:
        r = n - x * x
        y = isqrt(r)
        while y >= 0:
            rest = two_squares(r - y * y)
            if rest is not None:
                return (x, y) + rest
            y -= 1
        x -= 1
    raise AssertionError("Lagrange's theorem failed")  # pragma: no cover


def rational_two_squares(d: Fraction) -> tuple[Fraction, Fraction] | None:
    """Write ``d = x^2 + y^2`` over Q, preferring ``y = 0`` when d is a square."""
    d = Fraction(d)
    if d < 0:
        return None
    a, b = d.numerator, d.denominator
    if is_square(a) and is_square(b):
        return Fraction(isqrt(a), isqrt(b)), Fraction(0)
    st = two_squares(a * b)
    if st is None:
        return None
    return Fraction(st[0], b), Fraction(st[1], b)


def rational_four_squares(d: Fraction) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    d = Fraction(d)
    a, b = d.numerator, d.denominator
    return tuple(Fraction(s, b) for s in four_squares(a * b))  # type: ignore[return-value]
