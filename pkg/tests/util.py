import numpy as np

from ppsim.qlin import DensityOperator, SubsystemLayout


def random_density(layout: SubsystemLayout, seed: int, rank: int = None):
    rng = np.random.default_rng(seed)
    dim = layout.dim
    rank = rank or dim
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    m = g @ g.conj().T
    m = (m + m.conj().T) / 2
    return DensityOperator(layout, m / np.trace(m).real)


def random_hermitian(dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (m + m.conj().T) / 2


def random_table(shape, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    values = rng.random(shape)
    return values / values.sum()
