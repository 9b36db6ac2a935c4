from dataclasses import dataclass, field
from functools import reduce
from operator import mul
from typing import Iterable, Sequence, Tuple

import numpy as np
from scipy.linalg import eigvalsh

from ..defaults import config
from ..errors import Errors, InvariantError, LayoutError

LABELS = ("h", "t", "x", "y")

# Polarization states |0>, |1> and the vacuum |2>
VACUUM = 2


@dataclass(frozen=True)
class SubsystemLayout:
    """
    Ordered list of `(label, dimension)` pairs describing a
    tensor-product space. Basis indices are row-major over this order.
    """

    subsystems: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        subsystems = tuple((str(lb), int(d)) for lb, d in self.subsystems)
        object.__setattr__(self, "subsystems", subsystems)
        for label, dim in subsystems:
            if label not in LABELS:
                raise LayoutError(
                    Errors.E001.format(label=label, labels=LABELS)
                )
            if dim not in (2, 3):
                raise LayoutError(Errors.E002.format(label=label, dim=dim))
        if len(set(self.labels)) != len(self.labels):
            raise LayoutError(Errors.E003.format(labels=self.labels))

    @property
    def labels(self) -> Tuple[str, ...]:
        return tuple(lb for lb, _ in self.subsystems)

    @property
    def dims(self) -> Tuple[int, ...]:
        return tuple(d for _, d in self.subsystems)

    @property
    def dim(self) -> int:
        return reduce(mul, self.dims, 1)

    def dim_of(self, label: str) -> int:
        return self.dims[self.position(label)]

    def position(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LayoutError(
                Errors.E001.format(label=label, labels=self.labels)
            )

    def index(self, digits: Sequence[int]) -> int:
        """
        Row-major basis index of the product state `|d1 d2 ...>`.
        """
        return int(np.ravel_multi_index(tuple(digits), self.dims))

    def subset(self, keep: Iterable[str]) -> "SubsystemLayout":
        keep = set(keep)
        for label in keep:
            self.position(label)
        return SubsystemLayout(
            tuple((lb, d) for lb, d in self.subsystems if lb in keep)
        )

    def __add__(self, other: "SubsystemLayout") -> "SubsystemLayout":
        if set(self.labels) & set(other.labels):
            raise LayoutError(
                Errors.E004.format(left=self.labels, right=other.labels)
            )
        return SubsystemLayout(self.subsystems + other.subsystems)

    def __str__(self):
        return "".join(self.labels)


PROTOCOL_LAYOUT = SubsystemLayout((("h", 2), ("t", 3), ("x", 3), ("y", 3)))


@dataclass(frozen=True, eq=False)
class StateVector:
    layout: SubsystemLayout
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex).ravel()
        if amplitudes.size != self.layout.dim:
            raise LayoutError(
                Errors.E005.format(
                    expected=self.layout.dim,
                    layout=self.layout,
                    found=amplitudes.size,
                )
            )
        norm = float(np.vdot(amplitudes, amplitudes).real)
        if abs(norm - 1) > config["state_atol"]:
            raise InvariantError(Errors.E006.format(norm=norm))
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)

    @classmethod
    def basis(cls, layout: SubsystemLayout, digits: Sequence[int]):
        amplitudes = np.zeros(layout.dim, dtype=complex)
        amplitudes[layout.index(digits)] = 1
        return cls(layout, amplitudes)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def density(self) -> "DensityOperator":
        return DensityOperator(
            self.layout, np.outer(self.amplitudes, self.amplitudes.conj())
        )


@dataclass(frozen=True, eq=False)
class Operator:
    """
    Linear operator on the space of `layout`, e.g. a unitary,
    a projector or a Kraus operator lifted to the full space.
    """

    layout: SubsystemLayout
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        dim = self.layout.dim
        if matrix.shape != (dim, dim):
            raise LayoutError(
                Errors.E005.format(
                    expected=(dim, dim), layout=self.layout, found=matrix.shape
                )
            )
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def identity(cls, layout: SubsystemLayout):
        return cls(layout, np.eye(layout.dim))

    @property
    def dagger(self) -> "Operator":
        return Operator(self.layout, self.matrix.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def hermiticity_defect(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T)))

    def unitarity_defect(self) -> float:
        eye = np.eye(self.layout.dim)
        return float(np.max(np.abs(self.matrix.conj().T @ self.matrix - eye)))


class DensityOperator(Operator):
    """
    Hermitian, unit-trace, positive semidefinite operator.
    """

    def __post_init__(self):
        super().__post_init__()
        dev = self.hermiticity_defect()
        if dev > config["state_atol"]:
            raise InvariantError(Errors.E007.format(dev=dev))
        trace = self.trace().real
        if abs(trace - 1) > config["state_atol"]:
            raise InvariantError(Errors.E008.format(trace=trace))
        smallest = eigvalsh(self.matrix, subset_by_index=[0, 0])[0]
        if smallest < -config["psd_atol"]:
            raise InvariantError(Errors.E009.format(value=smallest))

    def evolve(self, unitary: Operator) -> "DensityOperator":
        """Conjugate by `unitary`: U rho U^dagger."""
        m = unitary.matrix @ self.matrix @ unitary.matrix.conj().T
        return DensityOperator(self.layout, _symmetrize(m))


def _symmetrize(matrix: np.ndarray) -> np.ndarray:
    return (matrix + matrix.conj().T) / 2
