from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from math import sqrt
from typing import Sequence, Tuple

import numpy as np
from wasabi import msg

from ..attack import RESIDUAL, build_q, encoding, measure
from ..channels import (
    KrausChannel,
    ad_qutrit,
    apply_lifted,
    depol_mixing_weight,
    depol_qutrit,
    identity_channel,
    lift_channel,
)
from ..defaults import config
from ..errors import Errors, InvariantError, ParameterError
from ..qlin import (
    PROTOCOL_LAYOUT,
    VACUUM,
    DensityOperator,
    Operator,
    ProbabilityTable,
    StateVector,
    SubsystemLayout,
    lift,
    partial_trace,
)

BOB_EVE_LAYOUT = SubsystemLayout((("h", 2), ("t", 3), ("y", 3)))

# Bob-Eve basis states |h t y> without any vacuum component
POLARIZATION_SUPPORT = tuple(product((0, 1), repeat=3))
AMPLITUDE_DAMPING_SUPPORT = ((0, 1, 0), (1, 0, 0), (0, 1, 1), (0, 0, 0))


class ChannelKind(str, Enum):
    AMPLITUDE_DAMPING = "amplitude_damping"
    DEPOLARIZING = "depolarizing"
    NONE = "none"


CHANNEL_ALIASES = {
    "ad": ChannelKind.AMPLITUDE_DAMPING,
    "depol": ChannelKind.DEPOLARIZING,
    **{kind.value: kind for kind in ChannelKind},
}


class NoiseOrdering(str, Enum):
    # noise on the travel photon before and after Eve's two interventions
    BEFORE_ATTACK = "before_attack"
    # noise between Eve's interventions and Alice's encoding
    AFTER_ATTACK = "after_attack"


def parse_channel(kind) -> ChannelKind:
    if isinstance(kind, ChannelKind):
        return kind
    try:
        return CHANNEL_ALIASES[str(kind).lower()]
    except KeyError:
        raise ParameterError(
            Errors.E031.format(kind=kind, kinds=sorted(CHANNEL_ALIASES))
        )


def parse_ordering(ordering) -> NoiseOrdering:
    try:
        return NoiseOrdering(ordering)
    except ValueError:
        raise ParameterError(
            Errors.E032.format(
                ordering=ordering, orderings=[o.value for o in NoiseOrdering]
            )
        )


@dataclass(frozen=True)
class ProtocolConfig:
    """
    Channel kind and noise parameter of a protocol run.

    For depolarizing noise `p` is the mixing strength towards the
    maximally mixed polarization state.
    """

    channel: ChannelKind = ChannelKind.AMPLITUDE_DAMPING
    p: float = 0.0
    ordering: NoiseOrdering = NoiseOrdering.BEFORE_ATTACK

    def __post_init__(self):
        object.__setattr__(self, "channel", parse_channel(self.channel))
        object.__setattr__(self, "ordering", parse_ordering(self.ordering))
        p = float(self.p)
        if not 0.0 <= p <= 1.0:
            raise ParameterError(Errors.E020.format(p=p))
        object.__setattr__(self, "p", p)

    def build_channel(self) -> KrausChannel:
        if self.channel is ChannelKind.AMPLITUDE_DAMPING:
            return ad_qutrit(self.p)
        if self.channel is ChannelKind.DEPOLARIZING:
            return depol_qutrit(depol_mixing_weight(self.p))
        return identity_channel()


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """
    Outcome statistics of a protocol run.

    `table` is indexed by Alice's bit `a`, Eve's probe outcome
    `e` in {0, 1, vacuum} and Bob's Bell outcome `b` in
    {psi+, psi-, phi+, phi-, residual}.
    """

    config: ProtocolConfig
    table: ProbabilityTable
    states: Tuple[DensityOperator, DensityOperator] = field(repr=False)
    reduced: Tuple[DensityOperator, DensityOperator] = field(repr=False)

    def residual_mass(self) -> float:
        values = self.table.values
        vacuum = values[:, VACUUM, :].sum()
        return float(vacuum + values[:, :VACUUM, RESIDUAL].sum())

    @property
    def p_aeb(self) -> ProbabilityTable:
        """The table restricted to e in {0, 1} and b in {0, 1, 2, 3}."""
        mass = self.residual_mass()
        if mass > config["prob_atol"]:
            raise InvariantError(Errors.E041.format(value=mass))
        core = self.table.values[:, :VACUUM, :RESIDUAL]
        return ProbabilityTable(("a", "e", "b"), core / core.sum())


def initial_state() -> StateVector:
    """|psi+>_ht ⊗ |2>_x ⊗ |0>_y."""
    amplitudes = np.zeros(PROTOCOL_LAYOUT.dim, dtype=complex)
    for digits in ((0, 1, VACUUM, 0), (1, 0, VACUUM, 0)):
        amplitudes[PROTOCOL_LAYOUT.index(digits)] = 1 / sqrt(2)
    return StateVector(PROTOCOL_LAYOUT, amplitudes)


@lru_cache(maxsize=1)
def _attack_unitaries() -> Tuple[Operator, Operator]:
    ops = build_q()
    home = np.eye(PROTOCOL_LAYOUT.dim_of("h"))
    q = Operator(PROTOCOL_LAYOUT, np.kron(home, ops.q.matrix))
    q_inverse = Operator(PROTOCOL_LAYOUT, np.kron(home, ops.q_inverse.matrix))
    return q, q_inverse


@lru_cache(maxsize=2)
def _encoding_unitary(bit: int) -> Operator:
    return lift(encoding(bit).operator.matrix, PROTOCOL_LAYOUT, "t")


def run_pipeline(
    cfg: ProtocolConfig, verbose: bool = None
) -> JointDistribution:
    """
    Simulate both encodings of a protocol round and collect the joint
    statistics of Alice, Eve and Bob.

    Parameters
    ----------
    cfg : ProtocolConfig
        Channel, noise parameter and noise ordering.
    verbose : bool, optional
        Print a line per run, by default None.

    Returns
    -------
    JointDistribution
        Joint table weighted by P(a) = 1/2 with per-encoding final
        states and their reductions on h ⊗ t.
    """
    q, q_inverse = _attack_unitaries()
    noise = lift_channel(cfg.build_channel(), PROTOCOL_LAYOUT, "t")
    before = cfg.ordering is NoiseOrdering.BEFORE_ATTACK
    values = np.zeros((2, 3, 5))
    states, reduced = [], []
    for bit in (0, 1):
        enc = _encoding_unitary(bit)
        rho = initial_state().density()
        if before:
            rho = apply_lifted(rho, noise)
            rho = rho.evolve(q).evolve(enc).evolve(q_inverse)
            rho = apply_lifted(rho, noise)
        else:
            rho = apply_lifted(rho.evolve(q), noise)
            rho = apply_lifted(rho.evolve(enc), noise).evolve(q_inverse)
        values[bit] = measure(rho, check_probe=before).values / 2
        states.append(rho)
        reduced.append(partial_trace(rho, {"h", "t"}))
    table = ProbabilityTable(("a", "e", "b"), values)
    jd = JointDistribution(cfg, table, tuple(states), tuple(reduced))
    if before:
        mass = jd.residual_mass()
        if mass > config["prob_atol"]:
            raise InvariantError(Errors.E041.format(value=mass))
    msg.text(
        f"Simulated {cfg.channel.value} noise at p={cfg.p}", show=bool(verbose)
    )
    return jd


def bob_eve_states(jd: JointDistribution) -> Tuple[DensityOperator, ...]:
    return tuple(partial_trace(rho, {"h", "t", "y"}) for rho in jd.states)


def final_states(
    cfg: ProtocolConfig, support: Sequence[Tuple[int, int, int]] = None
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Per-encoding Bob-Eve states on h ⊗ t ⊗ y projected onto `support`.

    Parameters
    ----------
    cfg : ProtocolConfig
        Run configuration.
    support : Sequence[Tuple[int, int, int]], optional
        Basis states |h t y> spanning the projection, in the order of
        the returned matrices, by default all polarization states.

    Returns
    -------
    Tuple[np.ndarray, np.ndarray]
        Matrices for a = 0 and a = 1.

    Raises
    ------
    InvariantError
        If a state has more than `prob_atol` weight outside `support`.
    """
    support = POLARIZATION_SUPPORT if support is None else tuple(support)
    idx = [BOB_EVE_LAYOUT.index(d) for d in support]
    blocks = []
    for rho in bob_eve_states(run_pipeline(cfg)):
        block = rho.matrix[np.ix_(idx, idx)]
        leak = 1 - np.trace(block).real
        if leak > config["prob_atol"]:
            raise InvariantError(Errors.E042.format(value=leak))
        blocks.append(block)
    return tuple(blocks)
