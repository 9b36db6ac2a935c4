import numpy as np
import pytest

from ppsim.classical import (
    contradiction_checks,
    marginal_floor,
    source_table,
    target_table,
)
from ppsim.errors import ParameterError

STEPS = ["zero_component", "alice_discards", "ratio", "probe_marginal"]


@pytest.mark.parametrize("p", [0.2, 0.5, 0.8, 1.0])
def test_contradiction_holds(p):
    report = contradiction_checks(p)
    assert [step.name for step in report.steps] == STEPS
    assert report.passed


def test_target_ratio():
    ratio = next(
        s for s in contradiction_checks(0.5).steps if s.name == "ratio"
    )
    assert ratio.value == pytest.approx(1.5 ** 2)


def test_noiseless_target_is_reachable():
    report = contradiction_checks(0.0)
    verdicts = {step.name: step.passed for step in report.steps}
    assert verdicts == {
        "zero_component": True,
        "alice_discards": True,
        "ratio": False,
        "probe_marginal": False,
    }
    assert not report.passed


@pytest.mark.parametrize("p", [-0.1, 1.5])
def test_contradiction_rejects_parameter(p):
    with pytest.raises(ParameterError):
        contradiction_checks(p)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.5, 0.9, 1.0])
def test_marginal_floor(p):
    source, target = source_table(), target_table(p)
    assert marginal_floor(source, target, "tv") == pytest.approx(p / 4)
    assert marginal_floor(source, target, "l2") == pytest.approx(p / 8)


def test_report_to_dict():
    data = contradiction_checks(0.5).to_dict()
    assert data["passed"] is True
    assert len(data["steps"]) == 4
    assert all(isinstance(s["value"], float) for s in data["steps"])
    assert np.isfinite([s["value"] for s in data["steps"]]).all()
