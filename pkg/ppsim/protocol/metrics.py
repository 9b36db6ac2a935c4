from dataclasses import asdict, dataclass
from typing import Dict, Tuple

import numpy as np

from ..defaults import config
from ..errors import Errors, InvariantError, LayoutError
from ..qlin import (
    DensityOperator,
    ProbabilityTable,
    mutual_information,
    von_neumann_entropy,
)
from .pipeline import JointDistribution


@dataclass(frozen=True)
class ProtocolMetrics:
    i_ab: float
    i_ae: float
    key_rate: float
    holevo: float
    qber_raw: float
    qber_sifted: float

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def holevo_bound(rho0: DensityOperator, rho1: DensityOperator) -> float:
    """
    Holevo quantity of the equiprobable ensemble {rho0, rho1}:
    S((rho0 + rho1) / 2) - (S(rho0) + S(rho1)) / 2.
    """
    if rho0.layout.dim != rho1.layout.dim:
        raise LayoutError(
            Errors.E044.format(left=rho0.layout.dim, right=rho1.layout.dim)
        )
    average = DensityOperator(rho0.layout, (rho0.matrix + rho1.matrix) / 2)
    chi = von_neumann_entropy(average) - (
        von_neumann_entropy(rho0) + von_neumann_entropy(rho1)
    ) / 2
    return max(0.0, chi)


def qber(table: ProbabilityTable) -> Tuple[float, float]:
    """
    Raw and sifted error rates of Bob's records against Alice's bit.

    Raw counts every outcome b != a, including phi+/- and the
    residual. Sifted keeps only rounds with b in {0, 1}.
    """
    p_ab = table.marginal("a", "b").values
    errors = p_ab.sum() - p_ab[0, 0] - p_ab[1, 1]
    sifted = p_ab[:, :2]
    kept = sifted.sum()
    sifted_errors = sifted[0, 1] + sifted[1, 0]
    return float(errors), float(sifted_errors / kept) if kept else np.nan


def metrics(jd: JointDistribution) -> ProtocolMetrics:
    """
    Information-theoretic figures of a protocol run.

    Parameters
    ----------
    jd : JointDistribution
        Output of `run_pipeline`.

    Returns
    -------
    ProtocolMetrics
        Mutual informations, key rate, Holevo bound of the reduced
        h ⊗ t states and both error rates.
    """
    i_ab = mutual_information(jd.table, "a", "b")
    i_ae = mutual_information(jd.table, "a", "e")
    chi = holevo_bound(*jd.reduced)
    if i_ab > chi + config["holevo_atol"]:
        raise InvariantError(Errors.E043.format(holevo=chi, i_ab=i_ab))
    qber_raw, qber_sifted = qber(jd.table)
    return ProtocolMetrics(
        i_ab=i_ab,
        i_ae=i_ae,
        key_rate=i_ab - i_ae,
        holevo=chi,
        qber_raw=qber_raw,
        qber_sifted=qber_sifted,
    )
