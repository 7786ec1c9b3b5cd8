import pytest

from nicholsys.properties import check_names, run_suite


@pytest.fixture(scope="module")
def results():
    return {"%s.%s" % (r.module, r.name): r for r in run_suite()}


@pytest.mark.parametrize("name", check_names())
def test_property(results, name):
    r = results[name]
    assert r.passed, r.detail


def test_filter_by_substring():
    names = [r.module for r in run_suite(only="cyclotomic.")]
    assert names and set(names) == {"cyclotomic"}
    assert run_suite(only="no_such_check") == []


def test_crash_counts_as_failure():
    def boom():
        raise RuntimeError("exploded")
    (r,) = run_suite(only="extra.boom", extra=[("extra", "boom", boom)])
    assert not r.passed and "exploded" in r.detail
