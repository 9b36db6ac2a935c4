"""
Closed-form outcome tables, reduced states and spectra.

These are derived by hand from the operator sequence of a protocol
round and serve as an independent check of the simulation. Tables
are indexed [a, e, b] with b in (psi+, psi-, phi+, phi-).
"""
from math import sqrt
from typing import Dict

import numpy as np

from ..qlin import StateVector
from ..qlin.layout import PROTOCOL_LAYOUT
from .pipeline import ChannelKind, parse_channel

# Basis of the reduced h ⊗ t states, as (h, t) digits
AD_HT_BASIS = ((0, 1), (1, 0), (0, 0))
DEPOL_HT_BASIS = ((0, 0), (0, 1), (1, 0), (1, 1))


def noiseless_table() -> np.ndarray:
    table = np.zeros((2, 2, 4))
    table[0, 0, 0] = 1 / 2
    table[1, :, :2] = 1 / 8
    return table


def amplitude_damping_table(p: float) -> np.ndarray:
    table = np.zeros((2, 2, 4))
    table[0, 0] = [(2 - p) ** 2, p ** 2, p * (2 - p), p * (2 - p)]
    table[1, 0] = [1, 1, p, p]
    table[1, 1] = [(1 - p) ** 2, (1 - p) ** 2, p * (1 - p), p * (1 - p)]
    return table / 8


def depolarizing_table(p: float) -> np.ndarray:
    table = np.zeros((2, 2, 4))
    flip = p * (2 - p)
    table[0, 0] = [1 / 2 + 3 * p * (p - 2) / 8] + [flip / 8] * 3
    table[1, :] = [1 / 8 + p * (p - 2) / 16] * 2 + [flip / 16] * 2
    return table


def reference_table(kind, p: float) -> np.ndarray:
    kind = parse_channel(kind)
    if kind is ChannelKind.AMPLITUDE_DAMPING:
        return amplitude_damping_table(p)
    if kind is ChannelKind.DEPOLARIZING:
        return depolarizing_table(p)
    return noiseless_table()


def amplitude_damping_reduced(p: float):
    """Reduced h ⊗ t states for a = 0, 1 in `AD_HT_BASIS`."""
    damped = p * (2 - p)
    rho0 = np.array(
        [[(1 - p) ** 2, 1 - p, 0], [1 - p, 1, 0], [0, 0, damped]]
    )
    rho1 = np.diag([(1 - p) ** 2, 1, damped])
    return rho0 / 2, rho1 / 2


def depolarizing_reduced(p: float):
    """Reduced h ⊗ t states for a = 0, 1 in `DEPOL_HT_BASIS`."""
    flip = p * (2 - p) / 4
    kept = (2 - 2 * p + p ** 2) / 4
    coherence = (1 - p) ** 2 / 2
    rho0 = np.array(
        [
            [flip, 0, 0, 0],
            [0, kept, coherence, 0],
            [0, coherence, kept, 0],
            [0, 0, 0, flip],
        ]
    )
    rho1 = np.diag([flip, kept, kept, flip])
    return rho0, rho1


def amplitude_damping_spectra(p: float) -> Dict[str, np.ndarray]:
    u = (p - 2) * p
    root = sqrt(u * u + u + 1)
    return {
        "a0": np.sort([0, -u / 2, (u + 2) / 2]),
        "a1": np.sort([1 / 2, (p - 1) ** 2 / 2, -u / 2]),
        "average": np.sort([-u / 2, (u + 2 - root) / 4, (u + 2 + root) / 4]),
    }


def depolarizing_spectra(p: float) -> Dict[str, np.ndarray]:
    flip = (2 - p) * p
    return {
        "a0": np.sort([flip, flip, flip, 3 * (p - 2) * p + 4]) / 4,
        "a1": np.sort([flip, flip, (p - 2) * p + 2, (p - 2) * p + 2]) / 4,
        "average": np.sort([1, flip, flip, 2 * (p - 2) * p + 3]) / 4,
    }


def noiseless_final_state(bit: int) -> StateVector:
    """(|0 1 2 a> + |1 0 2 0>) / sqrt(2) on h ⊗ t ⊗ x ⊗ y."""
    amplitudes = np.zeros(PROTOCOL_LAYOUT.dim, dtype=complex)
    for digits in ((0, 1, 2, bit), (1, 0, 2, 0)):
        amplitudes[PROTOCOL_LAYOUT.index(digits)] = 1 / sqrt(2)
    return StateVector(PROTOCOL_LAYOUT, amplitudes)


def padded(values, size: int) -> np.ndarray:
    """Sorted eigenvalues completed with zeros up to `size`."""
    values = np.asarray(values, dtype=float)
    return np.sort(np.concatenate([values, np.zeros(size - values.size)]))
