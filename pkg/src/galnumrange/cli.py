"""Command-line front end.

    galnumrange field finite:p=3,m=1
    galnumrange numrange matrix.json --format svg --out num.svg
    galnumrange verify all --seed 42 --out reports.json

Exit status: 0 on success, 1 when a verification suite fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import serial
from .field_core import FieldError, parse_field
from .forms import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    VectorL,
    delta_interval_sample,
    is_definite_up_to,
    rescale_to_unit,
    unit_sphere,
)
from .geometry import delta_convex_closure, delta_set_codes, ellipse_points, interval_codes, is_delta_convex
from .numrange import (
    HypothesisError,
    MatrixL,
    certify,
    eigenvalues,
    eigenvectors,
    ellipse_witnesses,
    joint_num_range_finite,
    num_range_finite,
    segment_witnesses,
)
from .realclosed_approx import ApproxMatrix, ConvergenceError, classify_2x2_algebraic, fill_segment, random_unit_vectors, sample_joint_range, sample_range
from .verify import run_suites, select_suites

FORMATS = ("csv", "json", "svg")


@dataclass
class CliConfig:
    subcommand: str
    inputs: list[str] = field(default_factory=list)
    field_spec: str | None = None
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    fmt: str = "csv"
    tol: float = 1e-8
    out: str | None = None
    samples: int | None = None
    n: int = 2
    fill: float | None = None

    def validate(self) -> "CliConfig":
        if self.budget <= 0:
            raise ValueError("--budget must be positive")
        if self.fmt not in FORMATS:
            raise ValueError(f"--format must be one of {FORMATS}")
        if not self.tol > 0:
            raise ValueError("--tol must be positive")
        if self.samples is not None and self.samples <= 0:
            raise ValueError("--samples must be positive")
        if self.n <= 0:
            raise ValueError("--n must be positive")
        if self.fill is not None and not 0 <= self.fill <= 1:
            raise ValueError("--fill must lie in [0, 1]")
        if self.field_spec is not None:
            parse_field(self.field_spec)
        return self

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "CliConfig":
        inputs = []
        for name in ("spec", "matrix", "points", "ellipse", "selector"):
            v = getattr(ns, name, None)
            if v is None:
                continue
            inputs += v if isinstance(v, list) else [v]
        return cls(
            subcommand=ns.command,
            inputs=inputs,
            field_spec=getattr(ns, "field", None) or (ns.spec if getattr(ns, "spec", None) else None),
            budget=ns.budget,
            seed=ns.seed,
            fmt=ns.format,
            tol=ns.tol,
            out=ns.out,
            samples=getattr(ns, "samples", None),
            n=getattr(ns, "n", 2),
            fill=getattr(ns, "fill", None),
        ).validate()


# --------------------------------------------------------------------------
# helpers


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")


def _load_json(path: str) -> dict:
    return json.loads(Path(path).read_text())


def _points_out(cfg: CliConfig, ctx, points) -> str:
    points = sorted(points) if ctx.is_finite else list(points)
    if cfg.fmt == "json":
        return json.dumps([str(z) for z in points], indent=1)
    if cfg.fmt == "svg":
        return serial.finite_svg(ctx, points) if ctx.is_finite else serial.scatter_svg(serial.exact_xy(points))
    return serial.points_csv(points)


def _complex_out(cfg: CliConfig, values: np.ndarray) -> str:
    if cfg.fmt == "json":
        vals = np.asarray(values)
        if vals.ndim == 1:
            return json.dumps([[float(z.real), float(z.imag)] for z in vals])
        return json.dumps([[[float(z.real), float(z.imag)] for z in row] for row in vals])
    if cfg.fmt == "svg":
        vals = np.asarray(values)
        first = vals if vals.ndim == 1 else vals[:, 0]
        return serial.scatter_svg(np.stack([first.real, first.imag], axis=1))
    return serial.complex_csv(values)


def _rational_witnesses(m: MatrixL, count: int, seed: int) -> list:
    """Certified points of Num(M) over Q(sqrt(alpha)): eigen-based constructions
    first, then rescaled small-height random vectors."""
    ctx = m.ctx
    values = {}
    eig = []
    try:
        for lam in eigenvalues(m):
            vs = eigenvectors(m, lam)
            if vs:
                eig.append((lam, vs[0]))
    except (FieldError, HypothesisError):
        eig = []
    if len(eig) >= 2:
        (a, u), (b, v) = eig[:2]
        try:
            ws = ellipse_witnesses(m, u, v, a, b, count)
        except HypothesisError:
            try:
                ws = segment_witnesses(m, u, v, a, b, delta_interval_sample(ctx, count))
            except HypothesisError:
                ws = []
        for w in ws:
            values.setdefault(w.value, w)
    rng = np.random.default_rng(seed)
    tries = 0
    while len(values) < count and tries < 50 * count:
        tries += 1
        u = VectorL(tuple(ctx(Fraction(int(x)), Fraction(int(y))) for x, y in rng.integers(-3, 4, size=(m.n, 2))))
        if u.is_zero():
            continue
        r = rescale_to_unit(u)
        if r is not None:
            w = certify(m, r)
            values.setdefault(w.value, w)
    return list(values.values())[:count]


# --------------------------------------------------------------------------
# commands


def cmd_field(cfg: CliConfig) -> int:
    ctx = parse_field(cfg.inputs[0])
    info: dict = {"field": ctx.spec(), "description": ctx.describe()}
    if ctx.is_finite:
        info["delta"] = [ctx.k_format(int(t)) for t in delta_set_codes(ctx)]
        info["delta_meet_one_minus_delta"] = [ctx.k_format(t) for t in interval_codes(ctx)]
        info["definite_up_to_2"] = is_definite_up_to(ctx, 2, cfg.budget).status
    else:
        info["delta"] = (
            "sums of two rational squares" if ctx.alpha == -1 else f"values x^2 - {ctx.alpha} y^2 over Q"
        )
        info["delta_meet_one_minus_delta_sample"] = [
            {"t": ctx.k_format(p.t), "a": str(p.a), "b": str(p.b)} for p in delta_interval_sample(ctx, cfg.samples or 5, None)
        ]
        info["definite_up_to_2"] = is_definite_up_to(ctx, 2, cfg.budget).status
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(info, indent=2))
    else:
        lines = [f"{k}: {v}" for k, v in info.items()]
        _emit(cfg, "\n".join(lines) + "\n")
    return 0


def cmd_sphere(cfg: CliConfig) -> int:
    ctx = parse_field(cfg.inputs[0])
    sph = unit_sphere(ctx, cfg.n, cfg.budget)
    rows = [[str(x) for x in u] for u in sph.points]
    if cfg.fmt == "json":
        _emit(cfg, json.dumps(rows))
    else:
        head = ",".join(f"u{i + 1}" for i in range(cfg.n))
        _emit(cfg, head + "\n" + "".join(",".join(r) + "\n" for r in rows))
    return 0


def cmd_numrange(cfg: CliConfig) -> int:
    m = serial.matrix_from_json(_load_json(cfg.inputs[0]))
    if isinstance(m, ApproxMatrix):
        _emit(cfg, _complex_out(cfg, sample_range(m.entries, cfg.samples or 10_000, cfg.seed)))
        return 0
    ctx = m.ctx
    if ctx.is_finite:
        pts = num_range_finite(m, cfg.budget).points
    else:
        pts = [w.value for w in _rational_witnesses(m, cfg.samples or 20, cfg.seed)]
    _emit(cfg, _points_out(cfg, ctx, pts))
    return 0


def cmd_joint(cfg: CliConfig) -> int:
    ms = [serial.matrix_from_json(_load_json(p)) for p in cfg.inputs]
    if len(ms) < 2:
        raise ValueError("joint needs at least two matrices")
    if all(isinstance(m, ApproxMatrix) for m in ms):
        if len(ms) != 2:
            raise ValueError("approx joint ranges take exactly two matrices")
        _emit(cfg, _complex_out(cfg, sample_joint_range(ms[0].entries, ms[1].entries, cfg.samples or 10_000, cfg.seed)))
        return 0
    if any(isinstance(m, ApproxMatrix) for m in ms) or not ms[0].ctx.is_finite:
        raise ValueError("exact joint ranges are enumerated only over finite fields")
    rows = joint_num_range_finite(ms, cfg.budget)
    if cfg.fmt == "json":
        _emit(cfg, json.dumps([[str(z) for z in r] for r in rows]))
    elif cfg.fmt == "svg":
        raise ValueError("joint ranges have no SVG rendering; use csv or json")
    else:
        _emit(cfg, serial.joint_csv(rows, len(ms)))
    return 0


def _point_args(cfg: CliConfig):
    ctx = parse_field(cfg.inputs[0])
    return ctx, [ctx.parse(p) for p in cfg.inputs[1:]]


def cmd_convexity(cfg: CliConfig) -> int:
    ctx, pts = _point_args(cfg)
    res = is_delta_convex(pts, ctx)
    out = {"convex": res.convex}
    if res.counterexample:
        a, b, t = res.counterexample
        out["counterexample"] = {"a": str(a), "b": str(b), "t": ctx.k_format(t), "point": str(ctx.embed(t) * a + (ctx.one - ctx.embed(t)) * b)}
    _emit(cfg, json.dumps(out, indent=2))
    return 0


def cmd_closure(cfg: CliConfig) -> int:
    ctx, pts = _point_args(cfg)
    _emit(cfg, _points_out(cfg, ctx, delta_convex_closure(pts, ctx)))
    return 0


def cmd_ellipse(cfg: CliConfig) -> int:
    data = _load_json(cfg.inputs[0])
    ctx = parse_field(cfg.field_spec) if cfg.field_spec else None
    e = serial.ellipse_from_json(data, ctx)
    pts = ellipse_points(e, count=cfg.samples or 20, seed=None)
    _emit(cfg, _points_out(cfg, e.ctx, pts))
    return 0


def cmd_verify(cfg: CliConfig) -> int:
    reports = run_suites(cfg.inputs[0], cfg.seed)
    _emit(cfg, json.dumps([r.to_dict() for r in reports], indent=2))
    for r in reports:
        print(f"{r.suite}: {r.status}", file=sys.stderr)
    return 0 if all(r.status != "fail" for r in reports) else 1


def cmd_approx(cfg: CliConfig) -> int:
    m = serial.matrix_from_json(_load_json(cfg.inputs[0]))
    if not isinstance(m, ApproxMatrix):
        raise ValueError('approx needs a matrix file with "approx": true')
    a = m.entries
    if cfg.fill is not None:
        rng = np.random.default_rng(cfg.seed)
        u, v = random_unit_vectors(m.n, 2, rng)
        res = fill_segment(a, u, v, cfg.fill, tol=cfg.tol)
        out = {
            "s": cfg.fill,
            "target": [res.target.real, res.target.imag],
            "value": [res.value.real, res.value.imag],
            "value_residual": res.value_residual,
            "unit_residual": res.unit_residual,
            "iterations": res.iterations,
            "w": [[z.real, z.imag] for z in res.w.tolist()],
        }
        _emit(cfg, json.dumps(out, indent=2))
        return 0
    if m.n == 2 and cfg.fmt == "json":
        _emit(cfg, json.dumps({"class": classify_2x2_algebraic(a, cfg.tol)}))
        return 0
    _emit(cfg, _complex_out(cfg, sample_range(a, cfg.samples or 10_000, cfg.seed)))
    return 0


COMMANDS = {
    "field": cmd_field,
    "sphere": cmd_sphere,
    "numrange": cmd_numrange,
    "joint": cmd_joint,
    "convexity": cmd_convexity,
    "closure": cmd_closure,
    "ellipse": cmd_ellipse,
    "verify": cmd_verify,
    "approx": cmd_approx,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max vectors enumerated (default 10^7)")
    common.add_argument("--seed", type=int, default=0, help="seed for every sampler (default 0)")
    common.add_argument("--format", choices=FORMATS, default="csv", help="output format (default csv)")
    common.add_argument("--tol", type=float, default=1e-8, help="binary64 tolerance (default 1e-8)")
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="galnumrange", description="Numerical ranges over quadratic field extensions.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field", parents=[common], help="field summary and Delta sets")
    s.add_argument("spec", help="finite:p=<prime>,m=<int> or rational:alpha=<int>")
    s.add_argument("--samples", type=int)

    s = sub.add_parser("sphere", parents=[common], help="the unit sphere C_n(1) over a finite field")
    s.add_argument("spec")
    s.add_argument("--n", type=int, default=2)

    s = sub.add_parser("numrange", parents=[common], help="numerical range of a matrix file")
    s.add_argument("matrix")
    s.add_argument("--samples", type=int)

    s = sub.add_parser("joint", parents=[common], help="joint numerical range of several matrix files")
    s.add_argument("matrix", nargs="+")
    s.add_argument("--samples", type=int)

    for name, text in (("convexity", "test Delta-convexity of a point set"), ("closure", "Delta-convex closure of a point set")):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("spec")
        s.add_argument("points", nargs="*")

    s = sub.add_parser("ellipse", parents=[common], help="points of an ellipse file")
    s.add_argument("ellipse")
    s.add_argument("--field", help="override the field recorded in the file")
    s.add_argument("--samples", type=int)

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("selector", help="all, a suite name, or a suite family such as hermitian")

    s = sub.add_parser("approx", parents=[common], help="binary64 engine: sample, classify or fill a segment")
    s.add_argument("matrix")
    s.add_argument("--samples", type=int)
    s.add_argument("--fill", type=float, help="fill the segment at s between two random attained points")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = CliConfig.from_args(ns)
        if cfg.subcommand == "verify":
            select_suites(cfg.inputs[0])
        return COMMANDS[cfg.subcommand](cfg)
    except (FieldError, ValueError, KeyError, BudgetExceeded, HypothesisError, ConvergenceError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
