import json
from fractions import Fraction

import pytest

from classavg.report import Case, Report, compare, render
from classavg.exact_algebra import variables


def test_render():
    x, = variables(1)
    assert render(Fraction(3, 6)) == "1/2"
    assert render(7) == "7"
    assert render(x * 2) == "2*x1"
    assert render(None) is None


def test_compare_statuses():
    assert compare("a", {}, 1, 1).status == "pass"
    assert compare("a", {}, 1, 2).status == "fail"
    assert compare("a", {}, 1, 2, expect_fail=True).status == "expected-fail"
    assert compare("a", {}, 1.0, 1.0 + 1e-12, tol=1e-9).status == "pass"


def test_summary_matches_cases():
    r = Report("demo")
    r.add(compare("a", {"n": 1}, 1, 1))
    r.add(compare("b", {"n": 2}, Fraction(1, 3), Fraction(1, 2)))
    r.add(compare("c", {}, 0, 1, expect_fail=True))
    s = r.summary
    assert s == {"pass": 1, "fail": 1, "expected-fail": 1, "error": 0, "total": 3}
    assert not r.ok
    bad = r.failures()[0]
    assert (bad.lhs, bad.rhs) == ("1/3", "1/2")
    record = json.loads(r.to_json(timings=False))
    assert "elapsed" not in record["cases"][0]
    with pytest.raises(ValueError):
        r.add(Case("x", {}, "maybe"))
