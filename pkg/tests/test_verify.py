from cthecke.compositions import parse_shape
from cthecke.verify import SUITES, PropertyResult, run, straight_shapes


def test_property_result_keeps_first_counterexample():
    r = PropertyResult("x")
    r.fail("first")
    r.fail("second")
    assert not r.passed and r.counterexample == "first"
    assert "notes" not in r.to_json()


def test_all_suites_pass_up_to_six():
    report = run(["all"], 6)
    assert report["passed"], [p for p in report["properties"] if not p["passed"]]
    assert report["suites"] == list(SUITES)
    assert len(report["scope"]["shapes"]) == 63


def test_skew_scope_is_flagged():
    report = run(["endo"], 3, shapes=[parse_shape("(1,3)/(2)")])
    (cert,) = report["certificates"]
    assert cert["expected_decomposable"]
    endo = {p["name"]: p for p in report["properties"]}
    assert endo["end_is_scalar"]["notes"] == {"skew_decomposable": 1}
    assert endo["annihilator_word"]["notes"] == {"skew_j_not_found": 1}


def test_report_is_deterministic():
    assert run(["poset"], 5, seed=4) == run(["poset"], 5, seed=4)


def test_straight_shapes_count():
    assert len(straight_shapes(5)) == 31
