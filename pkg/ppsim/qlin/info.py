from dataclasses import dataclass, field
from typing import Tuple

import numpy as np

from ..defaults import config
from ..errors import Errors, InvariantError, LayoutError
from .ops import shannon_entropy


@dataclass(frozen=True, eq=False)
class ProbabilityTable:
    """
    Normalized joint distribution over named axes.

    Tiny negative entries coming from floating point noise are
    clipped to zero; anything below `-prob_atol` is rejected.
    """

    axes: Tuple[str, ...]
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        axes = tuple(self.axes)
        values = np.array(self.values, dtype=float)
        if values.ndim != len(axes) or len(set(axes)) != len(axes):
            raise LayoutError(
                Errors.E012.format(shape=values.shape, axes=axes)
            )
        atol = config["prob_atol"]
        smallest = values.min() if values.size else 0.0
        if smallest < -atol:
            raise InvariantError(Errors.E011.format(value=smallest))
        total = values.sum()
        if abs(total - 1) > atol:
            raise InvariantError(Errors.E010.format(total=total))
        values = np.clip(values, 0, None)
        values.setflags(write=False)
        object.__setattr__(self, "axes", axes)
        object.__setattr__(self, "values", values)

    @property
    def shape(self) -> Tuple[int, ...]:
        return self.values.shape

    def axis(self, name: str) -> int:
        try:
            return self.axes.index(name)
        except ValueError:
            raise LayoutError(Errors.E013.format(axis=name, axes=self.axes))

    def marginal(self, *axes: str) -> "ProbabilityTable":
        """
        Sum out every axis not in `axes`; the result follows the
        order given in `axes`.
        """
        positions = [self.axis(a) for a in axes]
        others = tuple(i for i in range(len(self.axes)) if i not in positions)
        values = self.values.sum(axis=others)
        remaining = [i for i in range(len(self.axes)) if i in positions]
        order = [remaining.index(p) for p in positions]
        return ProbabilityTable(tuple(axes), np.transpose(values, order))

    def entropy(self) -> float:
        return shannon_entropy(self.values)

    def __getitem__(self, index) -> float:
        return float(self.values[index])


def mutual_information(
    joint: ProbabilityTable, axis1: str, axis2: str
) -> float:
    """
    Mutual information in bits between two axes of `joint`,
    computed as H(X) + H(Y) - H(X, Y).
    """
    h_x = joint.marginal(axis1).entropy()
    h_y = joint.marginal(axis2).entropy()
    h_xy = joint.marginal(axis1, axis2).entropy()
    return max(0.0, h_x + h_y - h_xy)

