from string import ascii_letters
from typing import Iterable, Union

import numpy as np
from scipy.linalg import eigvalsh
from scipy.special import xlogy

from ..defaults import config
from ..errors import Errors, InvariantError, LayoutError
from .layout import DensityOperator, Operator, StateVector, SubsystemLayout

Tensorable = Union[StateVector, Operator]


def tensor(left: Tensorable, right: Tensorable) -> Tensorable:
    """
    Kronecker product of two states or two operators.

    The result carries the concatenated layout, so operands must
    have disjoint subsystem labels. Two density operators give a
    density operator, any other pair of operators a plain `Operator`.
    """
    layout = left.layout + right.layout
    if isinstance(left, StateVector) and isinstance(right, StateVector):
        return StateVector(layout, np.kron(left.amplitudes, right.amplitudes))
    if isinstance(left, Operator) and isinstance(right, Operator):
        cls = (
            DensityOperator
            if isinstance(left, DensityOperator)
            and isinstance(right, DensityOperator)
            else Operator
        )
        return cls(layout, np.kron(left.matrix, right.matrix))
    raise LayoutError(
        Errors.E014.format(
            left=type(left).__name__, right=type(right).__name__
        )
    )


def lift(matrix: np.ndarray, layout: SubsystemLayout, target: str) -> Operator:
    """
    Embed a single-subsystem operator as I ⊗ A ⊗ I on `layout`.
    """
    matrix = np.asarray(matrix, dtype=complex)
    pos = layout.position(target)
    dim = layout.dims[pos]
    if matrix.shape != (dim, dim):
        raise LayoutError(
            Errors.E021.format(ch_dim=matrix.shape[0], target=target, dim=dim)
        )
    before = int(np.prod(layout.dims[:pos]))
    after = int(np.prod(layout.dims[pos + 1 :]))
    lifted = np.kron(np.kron(np.eye(before), matrix), np.eye(after))
    return Operator(layout, lifted)


def partial_trace(
    rho: DensityOperator, keep: Iterable[str]
) -> DensityOperator:
    """
    Trace out every subsystem not listed in `keep`.

    Parameters
    ----------
    rho : DensityOperator
        Operator to reduce.
    keep : Iterable[str]
        Labels of the subsystems to keep; their relative order
        follows `rho.layout`.

    Returns
    -------
    DensityOperator
        Reduced operator on the kept subsystems.
    """
    layout = rho.layout
    reduced = layout.subset(keep)
    n = len(layout.dims)
    rows = list(ascii_letters[:n])
    cols = [
        ascii_letters[n + i] if label in reduced.labels else rows[i]
        for i, label in enumerate(layout.labels)
    ]
    kept = [
        i for i, label in enumerate(layout.labels) if label in reduced.labels
    ]
    out = [rows[i] for i in kept] + [cols[i] for i in kept]
    subscripts = "{}{}->{}".format("".join(rows), "".join(cols), "".join(out))
    tensor_ = rho.matrix.reshape(layout.dims * 2)
    matrix = np.einsum(subscripts, tensor_).reshape(reduced.dim, reduced.dim)
    return DensityOperator(reduced, matrix)


def hermitian_spectrum(rho: Operator) -> np.ndarray:
    """
    Eigenvalues of a Hermitian operator in ascending order.
    """
    dev = rho.hermiticity_defect()
    if dev > config["state_atol"]:
        raise InvariantError(Errors.E007.format(dev=dev))
    matrix = (rho.matrix + rho.matrix.conj().T) / 2
    return eigvalsh(matrix)


def shannon_entropy(probs) -> float:
    """Entropy in bits with 0 log 0 = 0."""
    probs = np.asarray(probs, dtype=float).ravel()
    return float(-np.sum(xlogy(probs, probs)) / np.log(2))


def von_neumann_entropy(rho: DensityOperator) -> float:
    spectrum = hermitian_spectrum(rho)
    if spectrum[0] < -config["psd_atol"]:
        raise InvariantError(Errors.E009.format(value=spectrum[0]))
    return max(0.0, shannon_entropy(np.clip(spectrum, 0, 1)))


def trace_distance(rho: Operator, sigma: Operator) -> float:
    diff = Operator(rho.layout, rho.matrix - sigma.matrix)
    return float(np.sum(np.abs(hermitian_spectrum(diff))) / 2)
