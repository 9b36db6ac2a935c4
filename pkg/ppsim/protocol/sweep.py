from contextlib import closing
from functools import partial
from multiprocessing import Pool
from typing import List, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..defaults import config, get_jobs
from ..errors import Errors, ParameterError
from .metrics import ProtocolMetrics, metrics
from .pipeline import (
    ChannelKind,
    NoiseOrdering,
    ProtocolConfig,
    parse_channel,
    run_pipeline,
)

SweepRow = Tuple[float, ProtocolMetrics]


def linear_grid(
    start: float = 0.0, end: float = 1.0, steps: int = None
) -> np.ndarray:
    """
    Evenly spaced noise parameters, both ends included.
    """
    steps = config["steps"] if steps is None else steps
    if steps < 2 or not 0.0 <= start <= end <= 1.0:
        raise ParameterError(
            Errors.E033.format(steps=steps, start=start, end=end)
        )
    return np.linspace(start, end, steps)


def evaluate(
    p: float,
    channel: ChannelKind,
    ordering: NoiseOrdering = NoiseOrdering.BEFORE_ATTACK,
) -> SweepRow:
    cfg = ProtocolConfig(channel, p, ordering)
    return cfg.p, metrics(run_pipeline(cfg))


def sweep(
    channel,
    grid: Sequence[float],
    jobs: int = None,
    ordering: NoiseOrdering = NoiseOrdering.BEFORE_ATTACK,
    verbose: bool = None,
) -> List[SweepRow]:
    """
    Evaluate the protocol metrics along a grid of noise parameters.

    Points are independent, so they may be spread over a process
    pool. Results always follow the grid order.

    Parameters
    ----------
    channel : ChannelKind or str
        Noise channel, names as accepted by `parse_channel`.
    grid : Sequence[float]
        Noise parameters in [0, 1].
    jobs : int, optional
        Worker processes, by default resolved by `get_jobs`.
    ordering : NoiseOrdering, optional
        Placement of the noise, by default before Eve's attack.
    verbose : bool, optional
        Show a progress bar, by default None.

    Returns
    -------
    List[Tuple[float, ProtocolMetrics]]
        One row per grid point.
    """
    grid = [float(p) for p in grid]
    for p in grid:
        if not 0.0 <= p <= 1.0:
            raise ParameterError(Errors.E020.format(p=p))
    jobs = min(get_jobs(jobs), max(1, len(grid)))
    func = partial(evaluate, channel=parse_channel(channel), ordering=ordering)
    progress = partial(
        tqdm, total=len(grid), desc="sweep", disable=not verbose
    )
    if jobs == 1:
        return list(progress(map(func, grid)))
    with closing(Pool(jobs)) as pool:
        return list(progress(pool.imap(func, grid)))
