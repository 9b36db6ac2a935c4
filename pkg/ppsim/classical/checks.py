"""
Analytic obstructions to reproducing the amplitude damping statistics
by local noise applied to the noiseless ones.
"""
from dataclasses import asdict, dataclass
from typing import Tuple

import numpy as np

from ..defaults import config
from ..errors import Errors, ParameterError
from .distance import check_metric
from .noise import LocalNoiseModel, apply_local_noise
from .targets import probe_marginal, source_table, target_table

# Alice-only models probing the P(a=0, e=1, b=0) identity
_ALICE_PROBES = (
    (0.0, 1.0, 0.0, 0.3),
    (1.0, 0.7, 0.4, 0.5),
    (0.6, 0.2, 0.9, 0.1),
    (0.25, 0.5, 0.5, 0.75),
)

# Bob rows for input 0 that never map input 1 to outcome 0
_BOB_PROBES = (
    ((1.0, 0.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0)),
    ((0.5, 0.2, 0.2, 0.1), (0.0, 0.3, 0.3, 0.4)),
    ((0.1, 0.9, 0.0, 0.0), (0.0, 0.0, 0.5, 0.5)),
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    detail: str

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.passed))
        object.__setattr__(self, "value", float(self.value))

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class ContradictionReport:
    p: float
    steps: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(step.passed for step in self.steps)

    def to_dict(self):
        return {
            "p": self.p,
            "passed": self.passed,
            "steps": [step.to_dict() for step in self.steps],
        }


def _check_zero_component(source, target) -> CheckResult:
    atol = config["state_atol"]
    worst = 0.0
    for alpha, g, h, r in _ALICE_PROBES:
        model = LocalNoiseModel(alpha=alpha, g=g, h=h, r=r)
        found = apply_local_noise(source, model)[0, 1, 0]
        expected = alpha * h / 8 + (1 - alpha) * r / 8
        worst = max(worst, abs(found - expected))
    passed = worst <= atol and abs(target[0, 1, 0]) <= atol
    return CheckResult(
        "zero_component",
        bool(passed),
        float(target[0, 1, 0]),
        "P(0,1,0) = alpha h/8 + (1-alpha) r/8 must vanish, so either "
        "alpha = 0 and r = 0, or alpha = 1 and h = 0",
    )


def _check_alice_discards(source, target) -> CheckResult:
    model = LocalNoiseModel(alpha=0.0, r=0.0)
    found = apply_local_noise(source, model)[0, 0, 0]
    passed = found <= config["state_atol"] and target[0, 0, 0] > config[
        "zero_tol"
    ]
    return CheckResult(
        "alice_discards",
        bool(passed),
        float(target[0, 0, 0]),
        "branch alpha = 0, r = 0 gives P(0,0,0) = 0 against a nonzero target",
    )


def _check_ratio(source, target) -> CheckResult:
    ratios = []
    for zero, one in _BOB_PROBES:
        model = LocalNoiseModel(alpha=1.0, g=1.0, h=0.0, bob_rows=(zero, one))
        out = apply_local_noise(source, model)
        ratios.append(out[0, 0, 0] / out[1, 0, 0])
    target_ratio = target[0, 0, 0] / target[1, 0, 0]
    model_ok = np.allclose(ratios, 4.0, rtol=0, atol=1e-12)
    passed = model_ok and abs(target_ratio - 4.0) > config["zero_tol"]
    return CheckResult(
        "ratio",
        bool(passed),
        float(target_ratio),
        "branch alpha = 1, h = 0 with g = 1 and no 1 -> 0 relabeling "
        "gives P(0,0,0) / P(1,0,0) = 4",
    )


def marginal_floor(source, target, metric: str = "tv") -> float:
    """
    Lower bound on the distance reachable by any local model.

    Local noise leaves Eve's marginal unchanged, so the distance
    between the probe marginals bounds the distance between tables.
    """
    diff = probe_marginal(source) - probe_marginal(target)
    if check_metric(metric) == "tv":
        return float(np.abs(diff).sum() / 2)
    cells = np.asarray(source).size // diff.size
    return float(np.linalg.norm(diff) / np.sqrt(cells))


def _check_marginal(source, target) -> CheckResult:
    floor = marginal_floor(source, target)
    model = LocalNoiseModel(
        alpha=0.5, g=0.3, h=0.6, r=0.2, beta=0.4,
        bob_rows=((0.1, 0.2, 0.3, 0.4), (0.4, 0.3, 0.2, 0.1)),
    )
    moved = apply_local_noise(source, model).values
    kept = np.allclose(
        probe_marginal(moved), probe_marginal(source), rtol=0, atol=1e-12
    )
    return CheckResult(
        "probe_marginal",
        bool(kept and floor > config["zero_tol"]),
        floor,
        "local noise keeps Eve's marginal, which differs from the target's",
    )


def contradiction_checks(p: float) -> ContradictionReport:
    """
    Run the analytic obstructions against the amplitude damping
    statistics at noise `p`.

    Parameters
    ----------
    p : float
        Damping strength in [0, 1].

    Returns
    -------
    ContradictionReport
        One verdict per obstruction.
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(Errors.E020.format(p=p))
    source, target = source_table(), target_table(p)
    steps = (
        _check_zero_component(source, target),
        _check_alice_discards(source, target),
        _check_ratio(source, target),
        _check_marginal(source, target),
    )
    return ContradictionReport(p, steps)
