from pathlib import Path

import typer
from jsonschema import validate

from ..classical import contradiction_checks, search_feasibility
from ..defaults import config
from ..errors import ParameterError
from ..util import json_dumps, to_builtin
from ._output import emit, fail, good
from ._schemas import FEASIBILITY_REPORT_SCHEMA

FALSIFIED_EXIT = 2


def classical_sim(
    p: float = 0.5,
    metric: str = config["metric"],
    budget: int = config["budget"],
    seed: int = config["seed"],
    top_k: int = config["top_k"],
    grid_step: float = config["grid_step"],
    jobs: int = 1,
    out: Path = None,
    verbose: bool = False,
):
    """
    Certify that the amplitude damping statistics at `p` cannot be
    produced by local classical noise on the noiseless statistics.

    Exits with 0 when the search distance stays above zero and every
    analytic obstruction holds, and with 2 otherwise.

    Parameters
    ----------
    p : float, optional
        Damping strength in (0, 1), by default 0.5.
    metric : str, optional
        "tv" or "l2", by default "tv".
    budget : int, optional
        Maximum objective evaluations, by default 50000.
    seed : int, optional
        Seed of the random restarts, by default 0.
    top_k : int, optional
        Grid points refined by coordinate descent, by default 32.
    grid_step : float, optional
        Step of the coarse grid, by default 0.1.
    jobs : int, optional
        Worker processes for the grid stage, by default 1.
    out : Path, optional
        Output file, by default standard output.
    verbose : bool, optional
        Show progress on standard error, by default False.
    """
    if not 0.0 < p < 1.0:
        fail(
            "Invalid noise parameter",
            f"Expected 0 < p < 1, got {p}",
            exits=1,
        )
    try:
        report = search_feasibility(
            p,
            metric=metric,
            budget=budget,
            seed=seed,
            jobs=jobs,
            verbose=verbose,
            top_k=top_k,
            grid_step=grid_step,
        )
    except ParameterError as err:
        fail("Invalid search", str(err), exits=1)
    checks = contradiction_checks(p)
    confirmed = report.distance > config["zero_tol"] and checks.passed
    data = to_builtin(
        {
            "p": p,
            "confirmed": confirmed,
            "search": report.to_dict(),
            "checks": checks.to_dict(),
        }
    )
    validate(data, FEASIBILITY_REPORT_SCHEMA)
    emit(json_dumps(data, indent=2, sort_keys=True) + "\n", out, verbose)
    if not confirmed:
        failed = [s.name for s in checks.steps if not s.passed]
        fail(
            "Local classical noise was not ruled out",
            f"distance={report.distance:.3g}, failed checks: {failed}",
        )
        raise typer.Exit(code=FALSIFIED_EXIT)
    if verbose:
        good("Infeasibility confirmed", f"distance={report.distance:.6g}")
