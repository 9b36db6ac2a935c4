import numpy as np
import pytest

from ppsim.errors import LayoutError
from ppsim.protocol import holevo_bound, qber
from ppsim.qlin import ProbabilityTable, SubsystemLayout

from ..util import random_density

NOISELESS_INFO = 0.311278124459


def test_noiseless_metrics(protocol_metrics):
    m = protocol_metrics("none", 0.0)
    assert m.i_ab == pytest.approx(NOISELESS_INFO, abs=1e-9)
    assert m.i_ae == pytest.approx(NOISELESS_INFO, abs=1e-9)
    assert m.key_rate == pytest.approx(0, abs=1e-9)
    assert m.qber_raw == pytest.approx(0.25)
    assert m.qber_sifted == pytest.approx(0.25)


@pytest.mark.parametrize("channel", ["ad", "depol"])
def test_zero_noise_matches_noiseless(protocol_metrics, channel):
    noisy = protocol_metrics(channel, 0.0).to_dict()
    clean = protocol_metrics("none", 0.0).to_dict()
    for key, value in clean.items():
        assert noisy[key] == pytest.approx(value, abs=1e-10)


@pytest.mark.parametrize("p", np.round(np.linspace(0, 1, 11), 12))
def test_depolarizing_metrics(protocol_metrics, p):
    m = protocol_metrics("depol", p)
    # Eve's probe statistics do not depend on the noise
    assert m.i_ae == pytest.approx(NOISELESS_INFO, abs=1e-9)
    # Bob's Bell outcomes saturate the Holevo bound
    assert m.holevo == pytest.approx(m.i_ab, abs=1e-9)
    assert m.key_rate <= 1e-9


@pytest.mark.parametrize("p", [0.01, 0.02, 0.03, 0.04, 0.05, 0.06, 0.07])
def test_amplitude_damping_positive_key_rate(protocol_metrics, p):
    assert protocol_metrics("ad", p).key_rate > 0


@pytest.mark.parametrize("p", [0.1, 0.25, 0.5, 0.75])
def test_amplitude_damping_negative_key_rate(protocol_metrics, p):
    assert protocol_metrics("ad", p).key_rate < 0


def test_amplitude_damping_full_loss(protocol_metrics):
    m = protocol_metrics("ad", 1.0)
    assert m.i_ab == pytest.approx(0, abs=1e-9)
    assert m.i_ae == pytest.approx(0, abs=1e-9)
    assert m.key_rate == pytest.approx(0, abs=1e-9)
    assert m.holevo == pytest.approx(0, abs=1e-9)


@pytest.mark.parametrize("channel", ["ad", "depol"])
@pytest.mark.parametrize("p", np.round(np.linspace(0, 1, 6), 12))
def test_holevo_dominates(protocol_metrics, channel, p):
    m = protocol_metrics(channel, p)
    assert m.holevo >= m.i_ab - 1e-9
    assert 0 <= m.qber_raw <= 1


def test_holevo_bound_identical_states():
    rho = random_density(SubsystemLayout((("h", 2), ("t", 3))), seed=3)
    assert holevo_bound(rho, rho) == pytest.approx(0, abs=1e-12)


def test_holevo_bound_orthogonal_states():
    layout = SubsystemLayout((("h", 2),))
    rho0 = random_density(layout, seed=0, rank=1)
    flipped = np.eye(2) - rho0.matrix
    rho1 = type(rho0)(layout, flipped)
    assert holevo_bound(rho0, rho1) == pytest.approx(1, abs=1e-9)


def test_holevo_bound_layout_mismatch():
    rho0 = random_density(SubsystemLayout((("h", 2),)), seed=0)
    rho1 = random_density(SubsystemLayout((("h", 3),)), seed=0)
    with pytest.raises(LayoutError):
        holevo_bound(rho0, rho1)


def test_qber_counts_phi_outcomes():
    values = np.zeros((2, 3, 5))
    values[0, 0, 0] = 0.25
    values[0, 0, 2] = 0.25
    values[1, 0, 1] = 0.25
    values[1, 1, 0] = 0.25
    raw, sifted = qber(ProbabilityTable(("a", "e", "b"), values))
    assert raw == pytest.approx(0.5)
    assert sifted == pytest.approx(1 / 3)


@pytest.mark.parametrize("p", [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9])
def test_amplitude_damping_holevo_gap(protocol_metrics, p):
    # Bob's Bell measurement does not reach the Holevo bound
    m = protocol_metrics("ad", p)
    assert m.holevo - m.i_ab > 1e-6


@pytest.mark.parametrize("p", [0.0, 1.0])
def test_amplitude_damping_holevo_gap_closes(protocol_metrics, p):
    m = protocol_metrics("ad", p)
    assert m.holevo - m.i_ab == pytest.approx(0, abs=1e-9)
