"""
Local classical post-processing of the protocol records.

Alice relabels her bit and Bob relabels his Bell outcome, each with
private randomness. Eve's symbol is never touched.
"""
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from ..defaults import config
from ..errors import Errors, ParameterError
from ..qlin import ProbabilityTable

Table = Union[ProbabilityTable, np.ndarray]

BOB_OUTCOMES = 4


def _identity_rows() -> np.ndarray:
    return np.eye(2, BOB_OUTCOMES)


def _uniform_coin() -> np.ndarray:
    return np.full(BOB_OUTCOMES, 1 / BOB_OUTCOMES)


def _check_distribution(name, values) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    atol = config["state_atol"]
    if values.min() < -atol or abs(values.sum() - 1) > atol:
        raise ParameterError(Errors.E050.format(name=name, values=values))
    return np.clip(values, 0, 1)


@dataclass(frozen=True, eq=False)
class LocalNoiseModel:
    """
    Parameters of the local noise model.

    Parameters
    ----------
    alpha : float
        Weight of Alice's conditional map, the rest goes to her coin.
    g : float
        Alice's P(0 | 0).
    h : float
        Alice's P(0 | 1).
    r : float
        Probability that Alice's coin shows 0.
    beta : float
        Weight of Bob's conditional map, the rest goes to his coin.
    bob_rows : np.ndarray
        Bob's P(. | 0) and P(. | 1) over his four outcomes. Outcomes
        2 and 3 pass through the conditional map unchanged.
    coin : np.ndarray
        Bob's four-outcome coin.
    """

    alpha: float = 1.0
    g: float = 1.0
    h: float = 0.0
    r: float = 0.5
    beta: float = 1.0
    bob_rows: np.ndarray = field(default_factory=_identity_rows)
    coin: np.ndarray = field(default_factory=_uniform_coin)

    def __post_init__(self):
        for name in ("alpha", "g", "h", "r", "beta"):
            value = float(getattr(self, name))
            _check_distribution(name, [value, 1 - value])
            object.__setattr__(self, name, value)
        rows = np.asarray(self.bob_rows, dtype=float).reshape(2, BOB_OUTCOMES)
        rows = np.stack(
            [
                _check_distribution(f"bob_rows[{i}]", row)
                for i, row in enumerate(rows)
            ]
        )
        coin = _check_distribution("coin", self.coin).reshape(BOB_OUTCOMES)
        for values in (rows, coin):
            values.setflags(write=False)
        object.__setattr__(self, "bob_rows", rows)
        object.__setattr__(self, "coin", coin)

    @classmethod
    def identity(cls) -> "LocalNoiseModel":
        return cls()

    def alice_matrix(self) -> np.ndarray:
        """Column-stochastic map M[out, in] on Alice's bit."""
        a, r = self.alpha, self.r
        zero = [a * self.g + (1 - a) * r, a * self.h + (1 - a) * r]
        return np.array([zero, [1 - zero[0], 1 - zero[1]]])

    def bob_matrix(self) -> np.ndarray:
        """Column-stochastic map M[out, in] on Bob's outcome."""
        conditional = np.eye(BOB_OUTCOMES)
        conditional[:, :2] = self.bob_rows.T
        coin = np.tile(self.coin[:, None], (1, BOB_OUTCOMES))
        return self.beta * conditional + (1 - self.beta) * coin

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "g": self.g,
            "h": self.h,
            "r": self.r,
            "beta": self.beta,
            "bob_rows": self.bob_rows.tolist(),
            "coin": self.coin.tolist(),
        }


def _values(table: Table) -> np.ndarray:
    values = table.values if isinstance(table, ProbabilityTable) else table
    return ProbabilityTable(("a", "e", "b"), values).values


def apply_local_noise(
    table: Table, model: LocalNoiseModel, bob_first: bool = False
) -> ProbabilityTable:
    """
    Push a joint (a, e, b) table through the local noise model.

    Parameters
    ----------
    table : ProbabilityTable or np.ndarray
        Normalized table of shape (2, n_e, 4).
    model : LocalNoiseModel
        Alice's and Bob's post-processing.
    bob_first : bool, optional
        Apply Bob's map before Alice's, by default False. The maps
        act on different symbols, so the result is the same.

    Returns
    -------
    ProbabilityTable
        Table over ("a", "e", "b") of the same shape.
    """
    values = _values(table)
    alice, bob = model.alice_matrix(), model.bob_matrix()
    if bob_first:
        values = np.einsum("yb,aeb->aey", bob, values)
        values = np.einsum("xa,aeb->xeb", alice, values)
    else:
        values = np.einsum("xa,aeb->xeb", alice, values)
        values = np.einsum("yb,aeb->aey", bob, values)
    return ProbabilityTable(("a", "e", "b"), values)
