from functools import lru_cache

import numpy as np

from ..protocol import ChannelKind, ProtocolConfig, run_pipeline


@lru_cache(maxsize=1)
def source_table() -> np.ndarray:
    """Noiseless (a, e, b) statistics of the attacked protocol."""
    return run_pipeline(ProtocolConfig(ChannelKind.NONE)).p_aeb.values


@lru_cache(maxsize=32)
def target_table(p: float) -> np.ndarray:
    """(a, e, b) statistics under amplitude damping of strength `p`."""
    cfg = ProtocolConfig(ChannelKind.AMPLITUDE_DAMPING, p)
    return run_pipeline(cfg).p_aeb.values


def probe_marginal(values: np.ndarray) -> np.ndarray:
    return np.asarray(values).sum(axis=(0, 2))
