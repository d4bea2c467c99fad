import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from galnumrange import serial
from galnumrange.field_core import finite_field, rational_field
from galnumrange.geometry import EllipseSpec
from galnumrange.numrange import matrix, num_range_finite
from galnumrange.realclosed_approx import ApproxMatrix

from conftest import any_ctxs, scalars


@st.composite
def matrices(draw):
    ctx = draw(any_ctxs)
    n = draw(st.integers(1, 3))
    rows = [[draw(scalars(ctx)) for _ in range(n)] for _ in range(n)]
    return matrix(ctx, rows)


@given(matrices())
def test_matrix_roundtrip(m):
    text = json.dumps(serial.matrix_to_json(m))
    back = serial.matrix_from_json(text)
    assert back == m and back.ctx == m.ctx


def test_matrix_from_json_checks():
    with pytest.raises(ValueError):
        serial.matrix_from_json({"field": "finite:p=3,m=1", "n": 3, "entries": [[0, 1], [1, 0]]})
    a = serial.matrix_from_json({"approx": True, "entries": [[0, 1], ["2i", 0]]})
    assert isinstance(a, ApproxMatrix) and a.entries[1, 0] == 2j


def test_vector_roundtrip(qi):
    u = serial.vector_from_json(qi, ["1/2+b", -3, "-b"])
    assert serial.vector_json(u) == ["1/2+b", "-3", "-b"]
    assert serial.vector_from_json(qi, serial.vector_json(u)) == u


def test_ellipse_roundtrip(qi):
    f9 = finite_field(3, 1)
    specs = [
        EllipseSpec("one_focus", 1, 2, f9, frame_a=f9.beta, frame_b=f9(2)),
        EllipseSpec("two_foci", 2, 2, f9, d1=f9(1, 1), d2=f9.one),
        EllipseSpec("two_foci", 2, 5, qi, d1=qi(1, 2), d2=qi.one),
    ]
    for e in specs:
        text = json.dumps(serial.ellipse_to_json(e))
        assert serial.ellipse_from_json(text) == e
    # field override reinterprets the same data
    data = serial.ellipse_to_json(specs[0])
    other = serial.ellipse_from_json(data, finite_field(5, 1))
    assert other.ctx == finite_field(5, 1)


def test_points_csv(f4):
    pts = sorted(num_range_finite(matrix(f4, [[0, 1], [0, 0]])).points)
    text = serial.points_csv(pts)
    lines = text.splitlines()
    assert lines[0] == "re,im" and len(lines) == len(pts) + 1
    qi = rational_field(-1)
    assert serial.points_csv([qi.parse("1/2-3*b")]) == "re,im\n1/2,-3\n"


def test_joint_and_complex_csv(f4):
    rows = [(f4.one, f4.beta)]
    assert serial.joint_csv(rows, 2) == "re1,im1,re2,im2\n1,0,0,1\n"
    assert serial.complex_csv(np.array([1 + 2j])) == "re,im\n1.0,2.0\n"
    assert serial.complex_csv(np.array([[1j, 2]])).splitlines()[1] == "0.0,1.0,2.0,0.0"


def test_svg_deterministic():
    f9 = finite_field(3, 1)
    pts = list(f9.l_elements())[:4]
    a = serial.finite_svg(f9, pts)
    assert a == serial.finite_svg(f9, reversed(pts))
    assert a.startswith("<svg") and a.count('fill="#1f5fa8"') == 4 and a.count('fill="#bbbbbb"') == 9
    xy = np.random.default_rng(0).standard_normal((50, 2))
    s = serial.scatter_svg(xy)
    assert s == serial.scatter_svg(xy) and s.count("<circle") == 50
    assert serial.scatter_svg(np.zeros((0, 2))).endswith("</svg>\n")


def test_exact_xy(qi):
    xy = serial.exact_xy([qi.parse("1/2-b"), qi.one])
    assert xy.tolist() == [[0.5, -1.0], [1.0, 0.0]]
