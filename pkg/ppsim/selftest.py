"""
In-process acceptance checks, run by `ppsim selftest`.
"""
from math import log2
from typing import Callable, List

import numpy as np
from wasabi import msg

from .attack import bell_measurement, build_q, measure, probe_defect
from .channels import ad_qutrit, depol_qutrit
from .classical import CheckResult, contradiction_checks, search_feasibility
from .protocol import (
    ChannelKind,
    ProtocolConfig,
    linear_grid,
    metrics,
    run_pipeline,
    sweep,
)
from .protocol import reference as ref
from .qlin import hermitian_spectrum

NOISELESS_INFORMATION = 0.75 * log2(4 / 3)
GRID = np.round(np.linspace(0, 1, 11), 12)
AD_POSITIVE_GRID = (0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07)
CLASSICAL_POINTS = (0.2, 0.5, 0.8)


def _ht_block(rho, basis):
    idx = [rho.layout.index(d) for d in basis]
    return rho.matrix[np.ix_(idx, idx)]


def _spectra_error(jd, expected) -> float:
    rho0, rho1 = jd.reduced
    average = (rho0.matrix + rho1.matrix) / 2
    worst = 0.0
    for key, matrix in (("a0", rho0.matrix), ("a1", rho1.matrix)):
        found = np.linalg.eigvalsh(matrix)
        error = np.abs(found - ref.padded(expected[key], 6))
        worst = max(worst, np.max(error))
    found = np.linalg.eigvalsh(average)
    worst = max(
        worst, np.max(np.abs(found - ref.padded(expected["average"], 6)))
    )
    return float(worst)


def check_noiseless() -> CheckResult:
    jd = run_pipeline(ProtocolConfig(ChannelKind.NONE))
    m = metrics(jd)
    table_err = np.max(np.abs(jd.p_aeb.values - ref.noiseless_table()))
    passed = (
        table_err < 1e-10
        and abs(m.i_ab - NOISELESS_INFORMATION) < 1e-9
        and abs(m.i_ae - NOISELESS_INFORMATION) < 1e-9
        and abs(m.qber_raw - 0.25) < 1e-10
        and abs(m.qber_sifted - 0.25) < 1e-10
    )
    return CheckResult("noiseless", passed, float(table_err), "")


def check_final_state() -> CheckResult:
    jd = run_pipeline(ProtocolConfig(ChannelKind.NONE))
    worst = 0.0
    for bit, rho in enumerate(jd.states):
        expected = ref.noiseless_final_state(bit).density().matrix
        worst = max(worst, np.max(np.abs(rho.matrix - expected)))
    return CheckResult("final_state", worst < 1e-10, float(worst), "")


def _check_tables(kind, table, reduced, basis, spectra) -> float:
    worst = 0.0
    for p in GRID:
        jd = run_pipeline(ProtocolConfig(kind, p))
        worst = max(worst, np.max(np.abs(jd.p_aeb.values - table(p))))
        for rho, expected in zip(jd.reduced, reduced(p)):
            error = np.abs(_ht_block(rho, basis) - expected)
            worst = max(worst, np.max(error))
        worst = max(worst, _spectra_error(jd, spectra(p)))
    return float(worst)


def check_ad_tables() -> CheckResult:
    worst = _check_tables(
        ChannelKind.AMPLITUDE_DAMPING,
        ref.amplitude_damping_table,
        ref.amplitude_damping_reduced,
        ref.AD_HT_BASIS,
        ref.amplitude_damping_spectra,
    )
    return CheckResult("ad_tables", worst < 1e-9, worst, "")


def check_depol_tables() -> CheckResult:
    worst = _check_tables(
        ChannelKind.DEPOLARIZING,
        ref.depolarizing_table,
        ref.depolarizing_reduced,
        ref.DEPOL_HT_BASIS,
        ref.depolarizing_spectra,
    )
    expected = np.array([[0.5, 0.0], [0.25, 0.25]])
    for p in GRID:
        jd = run_pipeline(ProtocolConfig(ChannelKind.DEPOLARIZING, p))
        found = jd.p_aeb.marginal("a", "e").values
        worst = max(worst, float(np.max(np.abs(found - expected))))
    return CheckResult("depol_tables", worst < 1e-9, worst, "")


def check_ad_key_rate() -> CheckResult:
    def at(p):
        return metrics(run_pipeline(ProtocolConfig("ad", p)))

    smallest = min(at(p).key_rate for p in AD_POSITIVE_GRID)
    gaps = [m.holevo - m.i_ab for m in map(at, GRID)]
    passed = (
        smallest > 0
        and min(gaps[1:-1]) > 1e-6
        and abs(gaps[0]) < 1e-6
        and abs(gaps[-1]) < 1e-9
        and abs(at(1.0).key_rate) < 1e-12
    )
    return CheckResult(
        "ad_key_rate",
        passed,
        float(smallest),
        "positive key rate below the crossover near p = 0.077",
    )


def check_depol_key_rate() -> CheckResult:
    rows = [metrics(run_pipeline(ProtocolConfig("depol", p))) for p in GRID]
    i_ae = [m.i_ae for m in rows]
    spread = max(i_ae) - min(i_ae)
    passed = (
        spread < 1e-9
        and all(m.key_rate <= 1e-12 for m in rows[1:])
        and all(abs(m.holevo - m.i_ab) < 1e-9 for m in rows)
    )
    return CheckResult("depol_key_rate", passed, float(spread), "")


def check_unitality() -> CheckResult:
    mixed = np.diag([0.5, 0.5, 0.0])
    worst, witness = 0.0, True
    for p in GRID:
        worst = max(worst, np.max(np.abs(depol_qutrit(p)(mixed) - mixed)))
        moved = ad_qutrit(p)(mixed) - mixed
        distance = np.sum(np.abs(np.linalg.eigvalsh(moved))) / 2
        witness = witness and distance >= p / 2 - 1e-12
    passed = worst < 1e-12 and witness
    return CheckResult("unitality", passed, float(worst), "")


def check_classical(top_k: int = 4) -> CheckResult:
    worst = np.inf
    passed = True
    for p in CLASSICAL_POINTS:
        report = search_feasibility(p, top_k=top_k)
        ratio = report.distance / (p / 4)
        worst = min(worst, ratio)
        passed = passed and contradiction_checks(p).passed and ratio > 0.9
    return CheckResult(
        "classical", passed, float(worst), "distance over the p/4 floor"
    )


def check_structure() -> CheckResult:
    worst = 0.0
    for p in GRID:
        for ch in (ad_qutrit(p), depol_qutrit(p)):
            worst = max(worst, ch.completeness_defect())
    for op in build_q():
        worst = max(worst, op.unitarity_defect())
    worst = max(worst, bell_measurement().resolution_defect())
    for kind in ChannelKind:
        for p in GRID:
            jd = run_pipeline(ProtocolConfig(kind, p))
            for rho in jd.states:
                worst = max(worst, probe_defect(rho))
                worst = max(worst, -hermitian_spectrum(rho)[0])
                table = measure(rho).values
                worst = max(worst, table[2].sum() + table[:2, 4].sum())
    return CheckResult("structure", worst < 1e-10, float(worst), "")


def check_determinism() -> CheckResult:
    grid = linear_grid(0.0, 1.0, 11)
    serial = sweep("ad", grid, jobs=1)
    parallel = sweep("ad", grid, jobs=2)
    same = all(
        a[0] == b[0] and a[1] == b[1] for a, b in zip(serial, parallel)
    )
    return CheckResult("determinism", same, float(len(serial)), "")


CHECKS: List[Callable[[], CheckResult]] = [
    check_noiseless,
    check_final_state,
    check_ad_tables,
    check_depol_tables,
    check_ad_key_rate,
    check_depol_key_rate,
    check_unitality,
    check_classical,
    check_structure,
    check_determinism,
]


def run_selftest(verbose: bool = None) -> List[CheckResult]:
    results = []
    for check in CHECKS:
        result = check()
        msg.text(
            f"{result.name}: {'ok' if result.passed else 'FAIL'}",
            show=bool(verbose),
        )
        results.append(result)
    return results
