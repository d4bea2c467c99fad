import json

import pytest

from galnumrange.cli import CliConfig, main
from galnumrange.field_core import finite_field


def nilpotent_range_size(p):
    # values conj(x) y with N(x) + N(y) = 1, by brute force
    ctx = finite_field(p, 1)
    els = list(ctx.l_elements())
    return len({x.conj() * y for x in els for y in els if ctx.k_add(x.norm(), y.norm()) == 1})


def write(tmp_path, name, data):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "finite:p=3,m=1", "--format", "json")
    info = json.loads(out)
    assert code == 0 and info["delta"] == ["0", "1", "2"] and info["delta_meet_one_minus_delta"] == ["0", "1", "2"]
    code, out, _ = run(capsys, "field", "finite:p=2,m=1")
    assert code == 0 and "delta_meet_one_minus_delta: ['0', '1']" in out


def test_bad_input_exit_two(capsys, tmp_path):
    assert run(capsys, "field", "finite:p=4,m=1")[0] == 2
    assert run(capsys, "numrange", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "verify", "nope")[0] == 2
    code, _, err = run(capsys, "sphere", "finite:p=3,m=1", "--budget", "0")
    assert code == 2 and err.startswith("error:")


def test_sphere(capsys):
    code, out, _ = run(capsys, "sphere", "finite:p=2,m=1", "--n", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "u1,u2" and len(lines) == 7


def test_numrange_formats(capsys, tmp_path):
    path = write(tmp_path, "m.json", {"field": "finite:p=3,m=1", "n": 2, "entries": [[0, 1], [0, 0]]})
    code, out, _ = run(capsys, "numrange", path, "--format", "json")
    assert code == 0 and len(json.loads(out)) == nilpotent_range_size(3) == 5
    out_svg = tmp_path / "n.svg"
    assert run(capsys, "numrange", path, "--format", "svg", "--out", str(out_svg))[0] == 0
    assert out_svg.read_text().startswith("<svg")


def test_numrange_rational_and_approx(capsys, tmp_path):
    path = write(tmp_path, "q.json", {"field": "rational:alpha=-1", "entries": [[0, 1], [0, 1]]})
    code, out, _ = run(capsys, "numrange", path, "--samples", "5")
    assert code == 0 and len(out.splitlines()) == 6
    path = write(tmp_path, "a.json", {"approx": True, "entries": [[0, 1], [0, "1j"]]})
    code, out, _ = run(capsys, "numrange", path, "--samples", "100")
    assert code == 0 and len(out.splitlines()) == 101


def test_joint(capsys, tmp_path):
    a = write(tmp_path, "a.json", {"field": "finite:p=2,m=1", "entries": [[1, 0], [0, 0]]})
    b = write(tmp_path, "b.json", {"field": "finite:p=2,m=1", "entries": [[0, 1], [0, 0]]})
    c = write(tmp_path, "c.json", {"field": "finite:p=3,m=1", "entries": [[0, 1], [0, 0]]})
    code, out, _ = run(capsys, "joint", a, b)
    assert code == 0 and out.splitlines()[0] == "re1,im1,re2,im2"
    assert run(capsys, "joint", a, c)[0] == 2
    assert run(capsys, "joint", a)[0] == 2


def test_convexity_and_closure(capsys):
    code, out, _ = run(capsys, "convexity", "finite:p=3,m=1", "0", "1")
    res = json.loads(out)
    assert code == 0 and not res["convex"] and res["counterexample"]["point"] == "2"
    code, out, _ = run(capsys, "closure", "finite:p=3,m=1", "0", "1", "--format", "json")
    assert json.loads(out) == ["0", "1", "2"]


def test_ellipse(capsys, tmp_path):
    e = {"field": "finite:p=3,m=1", "kind": "one_focus", "delta1": "1", "delta2": "1", "frame": {"a": "0", "b": "1"}, "level": 1}
    path = write(tmp_path, "e.json", e)
    code, out, _ = run(capsys, "ellipse", path, "--format", "json")
    assert code == 0 and len(json.loads(out)) == nilpotent_range_size(3)
    code, out, _ = run(capsys, "ellipse", path, "--field", "finite:p=5,m=1", "--format", "json")
    assert code == 0 and len(json.loads(out)) == nilpotent_range_size(5)


def test_verify_exit_codes(capsys):
    code, out, err = run(capsys, "verify", "witnesses")
    assert code == 0 and json.loads(out)[0]["status"] == "pass" and "witnesses: pass" in err
    assert run(capsys, "verify", "f4_example")[0] == 1
    assert run(capsys, "verify", "hermitian:f9")[0] == 0  # not_applicable is not a failure


def test_approx(capsys, tmp_path):
    path = write(tmp_path, "a.json", {"approx": True, "entries": [[0, 1], [0, 1]]})
    code, out, _ = run(capsys, "approx", path, "--format", "json")
    assert code == 0 and json.loads(out) == {"class": "two_foci"}
    code, out, _ = run(capsys, "approx", path, "--fill", "0.3", "--seed", "2")
    res = json.loads(out)
    assert code == 0 and res["value_residual"] <= 1e-8
    exact = write(tmp_path, "m.json", {"field": "finite:p=3,m=1", "entries": [[0, 1], [0, 0]]})
    assert run(capsys, "approx", exact)[0] == 2


@pytest.mark.parametrize("argv", [
    ["verify", "ellipse", "--seed", "11"],
    ["approx", "{a}", "--samples", "50", "--seed", "9"],
    ["field", "rational:alpha=-1", "--samples", "4"],
])
def test_same_seed_same_bytes(capsys, tmp_path, argv):
    a = write(tmp_path, "a.json", {"approx": True, "entries": [[1, 2], [0, "1j"]]})
    argv = [x.format(a=a) for x in argv]
    outs = []
    for i in range(2):
        target = tmp_path / f"out{i}"
        assert main(argv + ["--out", str(target)]) == 0
        outs.append(target.read_bytes())
    capsys.readouterr()
    assert outs[0] == outs[1]


def test_config_validation():
    with pytest.raises(ValueError):
        CliConfig("approx", fill=1.5).validate()
    with pytest.raises(ValueError):
        CliConfig("numrange", tol=0).validate()
    assert CliConfig("field").validate().budget == 10**7
