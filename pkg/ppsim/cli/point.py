from pathlib import Path

import numpy as np
from jsonschema import validate

from ..errors import ParameterError
from ..protocol import (
    NoiseOrdering,
    ProtocolConfig,
    metrics,
    run_pipeline,
)
from ..qlin import DensityOperator, hermitian_spectrum
from ..util import json_dumps, to_builtin
from ._output import emit, fail
from ._schemas import POINT_REPORT_SCHEMA


def point(
    channel: str = "ad",
    p: float = 0.0,
    out: Path = None,
    ordering: str = "before_attack",
    verbose: bool = False,
):
    """
    Report the joint statistics, reduced-state spectra and metrics of a
    single protocol configuration as JSON.

    Parameters
    ----------
    channel : str, optional
        One of "ad", "depol" or "none", by default "ad".
    p : float, optional
        Noise parameter in [0, 1], by default 0.0.
    out : Path, optional
        Output file, by default standard output.
    ordering : str, optional
        Noise placement, by default "before_attack".
    verbose : bool, optional
        Print status on standard error, by default False.
    """
    try:
        cfg = ProtocolConfig(channel, p, ordering)
    except ParameterError as err:
        fail("Invalid configuration", str(err), exits=1)
    report = point_report(cfg)
    validate(report, POINT_REPORT_SCHEMA)
    emit(json_dumps(report, indent=2, sort_keys=True) + "\n", out, verbose)


def point_report(cfg: ProtocolConfig) -> dict:
    jd = run_pipeline(cfg)
    rho0, rho1 = jd.reduced
    average = DensityOperator(rho0.layout, (rho0.matrix + rho1.matrix) / 2)
    joint = (
        jd.p_aeb
        if cfg.ordering is NoiseOrdering.BEFORE_ATTACK
        else jd.table
    )
    return to_builtin(
        {
            "channel": cfg.channel.value,
            "ordering": cfg.ordering.value,
            "p": cfg.p,
            "joint": joint.values,
            "metrics": metrics(jd).to_dict(),
            "eigenvalues": {
                "a0": _spectrum(rho0),
                "a1": _spectrum(rho1),
                "average": _spectrum(average),
            },
        }
    )


def _spectrum(rho: DensityOperator) -> np.ndarray:
    # positivity is checked on construction, so only rounding is clipped
    return np.clip(hermitian_spectrum(rho), 0, 1)
