import json

import pytest

from galnumrange.field_core import finite_field, rational_field
from galnumrange.verify import (
    SUITES,
    Report,
    hypothesis_pair,
    run_suites,
    select_suites,
    verify_f4_sphere_example,
    verify_ellipse_ranges,
    verify_hermitian_criterion,
    verify_direct_sum,
)


def test_report_status_and_json():
    r = Report("demo")
    r.check("ok", 1, 1)
    assert r.finish().status == "pass"
    r.check("bad", 1, 2)
    assert r.finish().status == "fail" and [a.name for a in r.failures()] == ["bad"]
    d = json.loads(r.to_json())
    assert d["assertions"][1] == {"name": "bad", "expected": 1, "actual": 2, "pass": False}
    assert "seconds" not in d and "seconds" in r.to_dict(timing=True)
    assert Report("x").finish(applicable=False).status == "not_applicable"


def test_selectors():
    assert select_suites("all") == list(SUITES)
    assert select_suites("witnesses") == ["witnesses"]
    assert select_suites("hermitian") == [k for k in SUITES if k.startswith("hermitian:")]
    with pytest.raises(KeyError):
        select_suites("nope")


def test_reports_deterministic():
    a = [r.to_dict() for r in run_suites("ellipse", seed=3)]
    b = [r.to_dict() for r in run_suites("ellipse", seed=3)]
    assert a == b and all(r["status"] == "pass" for r in a)


def test_f4_sphere_report():
    rep = verify_f4_sphere_example()
    # the 2-point claim for the sphere does not hold; six points satisfy x^3 + y^3 = 1
    assert rep.status == "fail"
    (bad,) = rep.failures()
    assert len(bad.actual) == 6 and ["0", "1"] in bad.actual and ["b", "0"] in bad.actual
    assert sum(a.passed for a in rep.assertions) == len(rep.assertions) - 1


def test_hypothesis_pair():
    assert hypothesis_pair(finite_field(2, 1)) is None
    assert hypothesis_pair(finite_field(3, 1)) is None
    pair = hypothesis_pair(finite_field(3, 2))
    assert pair is not None
    w, d = pair
    assert d not in (0, 1) and w.norm() == d and not w.in_base
    assert hypothesis_pair(rational_field(-1)) is not None


def test_hermitian_statuses():
    assert verify_hermitian_criterion(finite_field(2, 1)).status == "pass"
    rep = verify_hermitian_criterion(finite_field(3, 1))
    assert rep.status == "not_applicable" and rep.evidence["violations"] == 0


def test_direct_sum_statuses():
    assert verify_direct_sum(finite_field(3, 1), trials=30).status == "pass"
    assert verify_direct_sum(finite_field(2, 1), trials=30).status == "fail"


def test_ellipse_suite():
    assert verify_ellipse_ranges(finite_field(5, 1)).status == "pass"
