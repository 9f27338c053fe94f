import pytest

from symcones.suites import SUITES, SuiteResult, run_suite


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes_a_short_run(name):
    res = run_suite(name, seed=3, trials=15)
    assert res.ok, res.line()
    assert res.trials == 15


def test_suites_are_deterministic_per_seed():
    a = run_suite("classification", seed=5, trials=20)
    b = run_suite("classification", seed=5, trials=20)
    assert a == b


def test_failure_line_names_the_counterexample():
    r = SuiteResult("demo", 3)
    r.fail((1, 2))
    assert not r.ok and "FAIL" in r.line() and "(1, 2)" in r.line()


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
