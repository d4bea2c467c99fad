"""File formats: matrix and ellipse JSON, point CSV, SVG scatter plots."""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

import numpy as np

from .field_core import ExtScalar, FieldCtx, parse_field
from .forms import VectorL, vector
from .geometry import EllipseSpec
from .numrange import MatrixL, matrix
from .realclosed_approx import ApproxMatrix


def scalar_str(z: ExtScalar) -> str:
    return str(z)


def vector_json(u: VectorL) -> list[str]:
    return [str(x) for x in u]


def vector_from_json(ctx: FieldCtx, data: Sequence[Any]) -> VectorL:
    return vector(ctx, data)


def matrix_to_json(m: MatrixL) -> dict:
    return {"field": m.ctx.spec(), "n": m.n, "entries": [[str(x) for x in r] for r in m.rows]}


def matrix_from_json(data: dict | str) -> MatrixL | ApproxMatrix:
    """Matrix JSON ``{"field": spec, "n": k, "entries": [[...]]}``; ``"approx": true``
    yields an ApproxMatrix with complex entries."""
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("approx"):
        return ApproxMatrix.from_json(data)
    ctx = parse_field(data["field"])
    m = matrix(ctx, data["entries"])
    if "n" in data and int(data["n"]) != m.n:
        raise ValueError(f"declared n={data['n']} but entries are {m.n}x{m.n}")
    return m


def ellipse_to_json(e: EllipseSpec) -> dict:
    ctx = e.ctx
    out = {
        "field": ctx.spec(),
        "kind": e.kind,
        "delta1": ctx.k_format(e.delta1),
        "delta2": ctx.k_format(e.delta2),
        "frame": {"a": str(e.frame_a), "b": str(e.frame_b)},
        "level": e.level,
    }
    if e.kind == "two_foci":
        out["d1"] = str(e.d1)
        out["d2"] = str(e.d2)
    return out


def ellipse_from_json(data: dict | str, ctx: FieldCtx | None = None) -> EllipseSpec:
    if isinstance(data, str):
        data = json.loads(data)
    if ctx is None:
        ctx = parse_field(data["field"])
    frame = data.get("frame", {})
    d1 = data.get("d1")
    d2 = data.get("d2")
    return EllipseSpec(
        data["kind"],
        ctx.k_parse(str(data["delta1"])),
        ctx.k_parse(str(data["delta2"])),
        ctx,
        ctx.parse(str(d1)) if d1 is not None else None,
        ctx.parse(str(d2)) if d2 is not None else None,
        ctx.parse(str(frame.get("a", "0"))),
        ctx.parse(str(frame.get("b", "1"))),
        int(data.get("level", 1)),
    )


# --------------------------------------------------------------------------
# CSV


def points_csv(points: Iterable[ExtScalar]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["re", "im"])
    for z in points:
        w.writerow([z.ctx.k_format(z.re), z.ctx.k_format(z.im)])
    return buf.getvalue()


def joint_csv(rows: Iterable[Sequence[ExtScalar]], k: int) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"{p}{i}" for i in range(1, k + 1) for p in ("re", "im")])
    for row in rows:
        w.writerow([z.ctx.k_format(c) for z in row for c in (z.re, z.im)])
    return buf.getvalue()


def complex_csv(values: np.ndarray) -> str:
    """CSV of complex values; a 2-column complex array gives re1,im1,re2,im2."""
    values = np.asarray(values)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if values.ndim == 1:
        w.writerow(["re", "im"])
        for z in values:
            w.writerow([repr(float(z.real)), repr(float(z.imag))])
    else:
        k = values.shape[1]
        w.writerow([f"{p}{i}" for i in range(1, k + 1) for p in ("re", "im")])
        for row in values:
            w.writerow([repr(float(c)) for z in row for c in (z.real, z.imag)])
    return buf.getvalue()


# --------------------------------------------------------------------------
# SVG

_SVG_HEAD = (
    '<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
    '<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>\n'
)


def finite_svg(ctx: FieldCtx, points: Iterable[ExtScalar], cell: int = 24) -> str:
    """Plot a subset of L on the q x q lattice (re code across, im code up)."""
    q = ctx.q
    size = cell * (q + 1)
    parts = [_SVG_HEAD.format(w=size, h=size)]
    for i in range(q):
        for j in range(q):
            parts.append(f'<circle cx="{cell * (i + 1)}" cy="{size - cell * (j + 1)}" r="2" fill="#bbbbbb"/>\n')
    for z in sorted(set(points)):
        parts.append(f'<circle cx="{cell * (z.re + 1)}" cy="{size - cell * (z.im + 1)}" r="{cell // 3}" fill="#1f5fa8"/>\n')
    parts.append("</svg>\n")
    return "".join(parts)


def scatter_svg(xy: np.ndarray, size: int = 400, radius: float = 1.5) -> str:
    """Plot real pairs scaled into a square canvas with a fixed margin."""
    xy = np.asarray(xy, dtype=float).reshape(-1, 2)
    lo = xy.min(axis=0) if len(xy) else np.zeros(2)
    hi = xy.max(axis=0) if len(xy) else np.ones(2)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    margin = 20
    scale = (size - 2 * margin) / span
    parts = [_SVG_HEAD.format(w=size, h=size)]
    for x, y in xy:
        cx = margin + (x - lo[0]) * scale
        cy = size - margin - (y - lo[1]) * scale
        parts.append(f'<circle cx="{cx:.3f}" cy="{cy:.3f}" r="{radius}" fill="#1f5fa8"/>\n')
    parts.append("</svg>\n")
    return "".join(parts)


def exact_xy(points: Iterable[ExtScalar]) -> np.ndarray:
    """(re, im) coordinates of rational-field points as floats."""
    return np.array([[float(z.re), float(z.im)] for z in points], dtype=float).reshape(-1, 2)
