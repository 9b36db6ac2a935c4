from pathlib import Path

import pandas as pd

from ..defaults import config, get_jobs
from ..errors import ParameterError
from ..protocol import linear_grid, parse_channel
from ..protocol import sweep as run_sweep
from ..protocol.pipeline import parse_ordering
from ..util import json_dumps
from ._output import emit, fail

CSV_COLUMNS = (
    "p",
    "i_ab",
    "i_ae",
    "key_rate",
    "holevo",
    "qber_raw",
    "qber_sifted",
)
FORMATS = ("csv", "json")


def sweep(
    channel: str = "ad",
    p_start: float = 0.0,
    p_end: float = 1.0,
    steps: int = config["steps"],
    out: Path = None,
    format: str = "csv",
    jobs: int = None,
    ordering: str = "before_attack",
    verbose: bool = False,
):
    """
    Evaluate the protocol metrics along an evenly spaced noise grid.

    Parameters
    ----------
    channel : str, optional
        One of "ad", "depol" or "none", by default "ad".
    p_start : float, optional
        First noise parameter, by default 0.0.
    p_end : float, optional
        Last noise parameter, by default 1.0.
    steps : int, optional
        Number of grid points, at least 2, by default 101.
    out : Path, optional
        Output file, by default standard output.
    format : str, optional
        "csv" or "json", by default "csv".
    jobs : int, optional
        Worker processes, by default `PPSIM_JOBS` or the CPU count.
    ordering : str, optional
        Noise placement, "before_attack" or "after_attack",
        by default "before_attack".
    verbose : bool, optional
        Show progress on standard error, by default False.
    """
    if format not in FORMATS:
        fail("Unknown format", f"Pick one of: {', '.join(FORMATS)}", exits=1)
    try:
        kind = parse_channel(channel)
        grid = linear_grid(p_start, p_end, steps)
        jobs = get_jobs(jobs)
        noise_ordering = parse_ordering(ordering)
    except ParameterError as err:
        fail("Invalid sweep", str(err), exits=1)
    rows = run_sweep(
        kind, grid, jobs=jobs, ordering=noise_ordering, verbose=verbose
    )
    records = [{"p": p, **m.to_dict()} for p, m in rows]
    if format == "csv":
        text = format_csv(records)
    else:
        text = json_dumps(records, indent=2, sort_keys=True) + "\n"
    emit(text, out, verbose)


def format_csv(records) -> str:
    frame = pd.DataFrame.from_records(records, columns=list(CSV_COLUMNS))
    return frame.to_csv(
        index=False, float_format="%.12g", lineterminator="\n"
    )
