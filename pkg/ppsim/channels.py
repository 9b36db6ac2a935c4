"""
Qutrit noise channels acting on the travel photon.

The qutrit basis is |0>, |1> (polarizations) and |2> (vacuum). Both
channels act on the polarization block and leave the vacuum alone.
"""
from dataclasses import dataclass, field
from math import exp, sqrt
from typing import Tuple

import numpy as np

from .defaults import config
from .errors import Errors, LayoutError, ParameterError
from .qlin import DensityOperator, SubsystemLayout, lift

QUTRIT = 3

_X = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex)
_Y = np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 1]], dtype=complex)
_Z = np.diag([1, -1, 1]).astype(complex)


@dataclass(frozen=True, eq=False)
class KrausChannel:
    name: str
    p: float
    operators: Tuple[np.ndarray, ...] = field(repr=False)

    def __post_init__(self):
        operators = tuple(np.array(A, dtype=complex) for A in self.operators)
        for A in operators:
            A.setflags(write=False)
        object.__setattr__(self, "operators", operators)
        dev = self.completeness_defect()
        if dev > config["state_atol"]:
            raise ParameterError(Errors.E023.format(name=self.name, dev=dev))

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]

    def completeness_defect(self) -> float:
        total = sum(A.conj().T @ A for A in self.operators)
        return float(np.max(np.abs(total - np.eye(self.dim))))

    def __call__(self, matrix: np.ndarray) -> np.ndarray:
        """Apply the channel to a single-qutrit matrix."""
        return sum(A @ matrix @ A.conj().T for A in self.operators)


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ParameterError(Errors.E020.format(p=p))
    return p


def ad_qutrit(p: float) -> KrausChannel:
    """
    Amplitude damping of the polarization |1> into |0>, doing
    nothing to the vacuum.

    Parameters
    ----------
    p : float
        Decoherence rate in [0, 1].

    Returns
    -------
    KrausChannel
        Operators diag(1, sqrt(1-p), 1) and sqrt(p)|0><1|.
    """
    p = _check_p(p)
    e0 = np.diag([1, sqrt(1 - p), 1]).astype(complex)
    e1 = np.zeros((QUTRIT, QUTRIT), dtype=complex)
    e1[0, 1] = sqrt(p)
    return KrausChannel("amplitude_damping", p, (e0, e1))


def depol_qutrit(p: float) -> KrausChannel:
    """
    Depolarizing noise on the polarization block with Kraus weights
    sqrt(1-p) I and sqrt(p/3) times the Pauli matrices extended by
    identity on the vacuum.
    """
    p = _check_p(p)
    w = sqrt(p / 3)
    ops = (sqrt(1 - p) * np.eye(QUTRIT), w * _X, w * _Y, w * _Z)
    return KrausChannel("depolarizing", p, ops)


def depol_mixing_weight(p: float) -> float:
    """
    Kraus weight of `depol_qutrit` realizing the mixing
    rho -> (1-p) rho + p I/2 on the polarization block.
    """
    return 3 * _check_p(p) / 4


def identity_channel(dim: int = QUTRIT) -> KrausChannel:
    return KrausChannel("none", 0.0, (np.eye(dim),))


def p_from_time(tau: float, t: float) -> float:
    """Noise parameter after time `t` for decay factor `tau`."""
    if tau < 0 or t < 0:
        raise ParameterError(Errors.E022.format(tau=tau, t=t))
    return min(1.0, max(0.0, 1 - exp(-tau * t / 2)))


def lift_channel(
    ch: KrausChannel, layout: SubsystemLayout, target: str
) -> Tuple[np.ndarray, ...]:
    """
    Kraus operators of `ch` embedded as I ⊗ A ⊗ I on `layout`.
    """
    dim = layout.dim_of(target)
    if dim != ch.dim:
        raise LayoutError(
            Errors.E021.format(ch_dim=ch.dim, target=target, dim=dim)
        )
    return tuple(lift(A, layout, target).matrix for A in ch.operators)


def apply_lifted(
    rho: DensityOperator, lifted: Tuple[np.ndarray, ...]
) -> DensityOperator:
    out = sum(A @ rho.matrix @ A.conj().T for A in lifted)
    return DensityOperator(rho.layout, (out + out.conj().T) / 2)


def apply_channel(
    rho: DensityOperator, ch: KrausChannel, target: str
) -> DensityOperator:
    """
    Apply `ch` to subsystem `target` of `rho`.

    Parameters
    ----------
    rho : DensityOperator
        Multipartite state.
    ch : KrausChannel
        Channel whose dimension matches the target subsystem.
    target : str
        Subsystem label.

    Returns
    -------
    DensityOperator
        The state sum_i (I ⊗ A_i ⊗ I) rho (I ⊗ A_i ⊗ I)^dagger.
    """
    return apply_lifted(rho, lift_channel(ch, rho.layout, target))
