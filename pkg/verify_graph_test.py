import pytest

from src.prmweights.graph.graph_builder import run_verification
from src.prmweights.nodes.suites import SUITES, next_prime, run_suite
from src.prmweights.nodes.verify_nodes import expand_suites
from src.prmweights.state.state import SuiteResult, VerificationState
from src.prmweights.utils.errors import DomainError
from src.prmweights.utils.validators import render_report

SMALL = {
    "d_max": 3,
    "m_max": 2,
    "piecewise_d_max": 6,
    "sweep_max": 4,
    "diff_d_max": 3,
    "diff_m_max": 3,
    "ab_max": 3,
    "instances": 20,
    "samples": 5,
    "bog_d": 1,
    "bog_q": 2,
}


def test_next_prime():
    assert [next_prime(n) for n in (2, 4, 8, 11, 14)] == [2, 5, 11, 11, 17]


def test_expand_suites():
    assert expand_suites(["all"]) == list(SUITES)
    assert expand_suites(["noether", "noether", "appendix"]) == ["noether", "appendix"]
    with pytest.raises(DomainError):
        expand_suites(["no-such-suite"])


@pytest.mark.parametrize("name", list(SUITES))
def test_each_suite_passes_on_small_limits(name):
    result = run_suite(name, VerificationState(limits=SMALL, seed=3))
    assert result.name == name
    assert result.checked > 0
    assert result.passed, result.failures


def test_graph_runs_every_suite_in_order():
    final = run_verification(VerificationState(suites=["all"], limits=SMALL))
    assert [r.name for r in final.results] == list(SUITES)
    assert final.passed is True
    assert final.report.startswith("# ✅")
    assert final.pending == [] and final.current is None


def test_graph_runs_a_selection():
    final = run_verification(VerificationState(suites=["hprime-le-h", "rank-roundtrip"], limits=SMALL))
    assert [r.name for r in final.results] == ["hprime-le-h", "rank-roundtrip"]
    assert final.passed


def test_graph_rejects_unknown_suites():
    with pytest.raises(DomainError):
        run_verification(VerificationState(suites=["lemma99"]))


def test_report_lists_failures():
    ok = SuiteResult(name="noether", checked=4)
    bad = SuiteResult(name="appendix", checked=2)
    bad.fail("power sum d=1 a=1 b=1: 3 > 2")
    text = render_report([ok, bad])
    assert text.startswith("# ❌")
    assert "- ✅ `noether`: 4 checks" in text
    assert "power sum d=1 a=1 b=1: 3 > 2" in text
    assert "1 suite(s) failed" in text
    assert "No suites were run" in render_report([])


def test_failures_are_capped():
    res = SuiteResult(name="x")
    for i in range(10):
        res.fail(f"case {i}")
    assert not res.passed
    assert len(res.failures) == 5


@pytest.mark.slow
def test_default_limits_pass():
    final = run_verification(VerificationState(suites=["all"]))
    assert final.passed, final.report
