"""Dense exact linear algebra over L by Gaussian elimination."""

from __future__ import annotations

from typing import Sequence

from .field_core import ExtScalar, FieldCtx


def _rref(rows: list[list[ExtScalar]]) -> tuple[list[list[ExtScalar]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(rows: Sequence[Sequence[ExtScalar]]) -> int:
    return len(_rref([list(r) for r in rows])[1])


def nullspace(rows: Sequence[Sequence[ExtScalar]], ctx: FieldCtx) -> list[list[ExtScalar]]:
    """Basis of ``{x : A x = 0}`` for the matrix with the given rows."""
    ncols = len(rows[0])
    red, pivots = _rref([list(r) for r in rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [ctx.zero] * ncols
        x[f] = ctx.one
        for i, pc in enumerate(pivots):
            x[pc] = -red[i][f]
        basis.append(x)
    return basis


def solve(rows: Sequence[Sequence[ExtScalar]], rhs: Sequence[ExtScalar]) -> list[ExtScalar] | None:
    """One solution of ``A x = rhs`` or None when the system is inconsistent."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = _rref(aug)
    if ncols in pivots:
        return None
    ctx = rhs[0].ctx
    x = [ctx.zero] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = red[i][ncols]
    return x
