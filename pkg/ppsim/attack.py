"""
Eve's attack on the travel photon, Alice's encoding and Bob's Bell
measurement.

Eve holds two probe qutrits: `x`, prepared in the vacuum |2>, and
`y`, prepared in |0>. Her attack Q = SWAP_tx CPBS_txy H_y acts on the
travel photon `t` and both probes on the way to Alice, and Q^-1 on
the way back.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from math import sqrt
from typing import Tuple

import numpy as np

from .defaults import config
from .errors import Errors, InvariantError, ParameterError
from .qlin import (
    VACUUM,
    DensityOperator,
    Operator,
    ProbabilityTable,
    SubsystemLayout,
    partial_trace,
)

ATTACK_LAYOUT = SubsystemLayout((("t", 3), ("x", 3), ("y", 3)))
BELL_LAYOUT = SubsystemLayout((("h", 2), ("t", 3)))
PROBE_LAYOUT = SubsystemLayout((("y", 3),))

# Bob's outcome symbols, in order
BELL_LABELS = ("psi+", "psi-", "phi+", "phi-", "residual")
RESIDUAL = 4

# Basis states swapped by the beam splitter, as (t, x, y) digits
_CPBS_SWAPS = (((0, 2, 0), (0, 0, 2)), ((1, 2, 1), (1, 1, 2)))


@dataclass(frozen=True, eq=False)
class AttackOperators:
    cpbs: Operator = field(repr=False)
    h_y: Operator = field(repr=False)
    swap_tx: Operator = field(repr=False)
    q: Operator = field(repr=False)
    q_inverse: Operator = field(repr=False)

    def __iter__(self):
        yield from (self.cpbs, self.h_y, self.swap_tx, self.q, self.q_inverse)


@dataclass(frozen=True, eq=False)
class EncodingOperator:
    bit: int
    operator: Operator = field(repr=False)


@dataclass(frozen=True, eq=False)
class BellMeasurement:
    projectors: Tuple[Operator, ...] = field(repr=False)
    labels: Tuple[str, ...] = BELL_LABELS

    def resolution_defect(self) -> float:
        total = sum(P.matrix for P in self.projectors)
        return float(np.max(np.abs(total - np.eye(BELL_LAYOUT.dim))))


def build_cpbs() -> Operator:
    """
    Controlled polarization beam splitter on t ⊗ x ⊗ y.

    Routes |020> to |002> and |121> to |112>, together with the
    inverse images, and acts as identity on every other basis state.
    """
    perm = np.arange(ATTACK_LAYOUT.dim)
    for left, right in _CPBS_SWAPS:
        i, j = ATTACK_LAYOUT.index(left), ATTACK_LAYOUT.index(right)
        perm[i], perm[j] = j, i
    matrix = np.zeros((ATTACK_LAYOUT.dim, ATTACK_LAYOUT.dim))
    matrix[perm, np.arange(ATTACK_LAYOUT.dim)] = 1
    return Operator(ATTACK_LAYOUT, matrix)


def build_hadamard_y() -> Operator:
    """Hadamard on the polarization block of `y`, identity on |2>."""
    matrix = np.eye(3, dtype=complex)
    matrix[:2, :2] = np.array([[1, 1], [1, -1]]) / sqrt(2)
    return Operator(PROBE_LAYOUT, matrix)


def build_swap_tx() -> Operator:
    dim = ATTACK_LAYOUT.dim
    matrix = np.zeros((dim, dim))
    for t, x, y in np.ndindex(*ATTACK_LAYOUT.dims):
        src = ATTACK_LAYOUT.index((t, x, y))
        dst = ATTACK_LAYOUT.index((x, t, y))
        matrix[dst, src] = 1
    return Operator(ATTACK_LAYOUT, matrix)


def build_q() -> AttackOperators:
    cpbs = build_cpbs()
    h_y = build_hadamard_y()
    swap_tx = build_swap_tx()
    h_full = np.kron(np.eye(9), h_y.matrix)
    q = Operator(ATTACK_LAYOUT, swap_tx.matrix @ cpbs.matrix @ h_full)
    return AttackOperators(cpbs, h_y, swap_tx, q, q.dagger)


def encoding(bit: int) -> EncodingOperator:
    """
    Alice's encoding on `t`: identity for 0, the polarization
    phase flip diag(1, -1, 1) for 1.
    """
    if bit not in (0, 1):
        raise ParameterError(Errors.E045.format(bit=bit))
    diagonal = [1, -1, 1] if bit else [1, 1, 1]
    op = Operator(SubsystemLayout((("t", 3),)), np.diag(diagonal))
    return EncodingOperator(bit, op)


def bell_measurement() -> BellMeasurement:
    def ket(*pairs):
        vec = np.zeros(BELL_LAYOUT.dim, dtype=complex)
        for amp, digits in pairs:
            vec[BELL_LAYOUT.index(digits)] = amp
        return vec

    s = 1 / sqrt(2)
    states = [
        ket((s, (0, 1)), (s, (1, 0))),
        ket((s, (0, 1)), (-s, (1, 0))),
        ket((s, (0, 0)), (s, (1, 1))),
        ket((s, (0, 0)), (-s, (1, 1))),
    ]
    projectors = [Operator(BELL_LAYOUT, np.outer(v, v.conj())) for v in states]
    residual = np.zeros((BELL_LAYOUT.dim, BELL_LAYOUT.dim))
    for h in range(2):
        i = BELL_LAYOUT.index((h, VACUUM))
        residual[i, i] = 1
    projectors.append(Operator(BELL_LAYOUT, residual))
    return BellMeasurement(tuple(projectors))


@lru_cache(maxsize=1)
def _bell() -> BellMeasurement:
    return bell_measurement()


def probe_defect(rho: DensityOperator) -> float:
    """Largest deviation of the reduced state of `x` from |2><2|."""
    rho_x = partial_trace(rho, {"x"}).matrix
    vacuum = np.zeros((3, 3))
    vacuum[VACUUM, VACUUM] = 1
    return float(np.max(np.abs(rho_x - vacuum)))


def measure(
    rho: DensityOperator, check_probe: bool = True
) -> ProbabilityTable:
    """
    Eve's computational-basis measurement of `y` together with Bob's
    Bell measurement of `h ⊗ t`. The `x` probe is not measured.

    Parameters
    ----------
    rho : DensityOperator
        Final state on h ⊗ t ⊗ x ⊗ y.
    check_probe : bool, optional
        Verify that `x` is back in the vacuum, by default True.

    Returns
    -------
    ProbabilityTable
        Table over axes ("e", "b") of shape (3, 5).
    """
    if check_probe:
        dev = probe_defect(rho)
        if dev > config["probe_atol"]:
            raise InvariantError(Errors.E040.format(dev=dev))
    rho_hty = partial_trace(rho, {"h", "t", "y"}).matrix
    blocks = rho_hty.reshape(BELL_LAYOUT.dim, 3, BELL_LAYOUT.dim, 3)
    values = np.empty((3, len(BELL_LABELS)))
    for e in range(3):
        block = blocks[:, e, :, e]
        for b, proj in enumerate(_bell().projectors):
            values[e, b] = np.trace(proj.matrix @ block).real
    return ProbabilityTable(("e", "b"), values)
