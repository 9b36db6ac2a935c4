from math import log

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ppsim.channels import (
    ad_qutrit,
    apply_channel,
    depol_mixing_weight,
    depol_qutrit,
    identity_channel,
    p_from_time,
)
from ppsim.errors import LayoutError, ParameterError
from ppsim.qlin import (
    PROTOCOL_LAYOUT,
    SubsystemLayout,
    hermitian_spectrum,
    tensor,
)

from .util import random_density

GRID = np.round(np.linspace(0, 1, 11), 12)
T = SubsystemLayout((("t", 3),))
H = SubsystemLayout((("h", 2),))
MIXED = np.diag([0.5, 0.5, 0.0])
VACUUM = np.diag([0.0, 0.0, 1.0])


@pytest.mark.parametrize("p", GRID)
def test_completeness(p):
    assert ad_qutrit(p).completeness_defect() < 1e-12
    assert depol_qutrit(p).completeness_defect() < 1e-12


def test_ad_operators():
    ch = ad_qutrit(0.36)
    assert len(ch.operators) == 2
    assert np.allclose(ch.operators[0], np.diag([1, 0.8, 1]))
    expected = np.zeros((3, 3))
    expected[0, 1] = 0.6
    assert np.allclose(ch.operators[1], expected)


def test_depol_operators():
    ch = depol_qutrit(0.3)
    assert len(ch.operators) == 4
    assert np.allclose(ch.operators[0], np.sqrt(0.7) * np.eye(3))
    for op in ch.operators[1:]:
        assert op[2, 2] == pytest.approx(np.sqrt(0.1))


@pytest.mark.parametrize("make", [ad_qutrit, depol_qutrit])
def test_zero_noise_is_identity(make):
    rho = random_density(T, 1).matrix
    assert np.allclose(make(0)(rho), rho)


@pytest.mark.parametrize("p", [0.0, 0.25, 0.7, 1.0])
def test_ad_decays_polarization(p):
    one = np.diag([0.0, 1.0, 0.0])
    assert np.allclose(ad_qutrit(p)(one), np.diag([p, 1 - p, 0]))


@pytest.mark.parametrize("p", [0.0, 0.25, 0.7, 1.0])
def test_depol_flips_polarization(p):
    zero = np.diag([1.0, 0.0, 0.0])
    expected = np.diag([1 - 2 * p / 3, 2 * p / 3, 0])
    assert np.allclose(depol_qutrit(p)(zero), expected)


@pytest.mark.parametrize("p", GRID)
def test_vacuum_is_untouched(p):
    assert np.allclose(ad_qutrit(p)(VACUUM), VACUUM, atol=1e-12)
    assert np.allclose(depol_qutrit(p)(VACUUM), VACUUM, atol=1e-12)


@pytest.mark.parametrize("p", GRID)
def test_depol_is_unital_on_polarization(p):
    assert np.max(np.abs(depol_qutrit(p)(MIXED) - MIXED)) < 1e-12


@pytest.mark.parametrize("p", GRID[1:])
def test_ad_is_not_unital(p):
    out = ad_qutrit(p)(MIXED)
    assert out[0, 0].real == pytest.approx((1 + p) / 2)
    distance = np.sum(np.abs(np.linalg.eigvalsh(out - MIXED))) / 2
    assert distance >= p / 2 - 1e-12


@pytest.mark.parametrize("p", [0.0, 0.3, 1.0])
def test_mixing_weight(p):
    zero = np.diag([1.0, 0.0, 0.0])
    out = depol_qutrit(depol_mixing_weight(p))(zero)
    expected = (1 - p) * zero + p * MIXED
    assert np.allclose(out, expected)


@pytest.mark.parametrize(
    "p",
    [
        0.5,
        pytest.param(-0.1, marks=pytest.mark.xfail),  # below range
        pytest.param(1.1, marks=pytest.mark.xfail),  # above range
    ],
)
def test_parameter_range(p):
    ad_qutrit(p)
    depol_qutrit(p)


def test_identity_channel():
    rho = random_density(PROTOCOL_LAYOUT, 3, rank=2)
    out = apply_channel(rho, identity_channel(), "t")
    assert np.allclose(out.matrix, rho.matrix)


def test_channel_acts_locally():
    rho_h, rho_t = random_density(H, 4), random_density(T, 5)
    ch = ad_qutrit(0.4)
    out = apply_channel(tensor(rho_h, rho_t), ch, "t")
    assert np.allclose(out.matrix, np.kron(rho_h.matrix, ch(rho_t.matrix)))


def test_channel_dimension_mismatch():
    with pytest.raises(LayoutError):
        apply_channel(random_density(H, 1), ad_qutrit(0.2), "h")


@settings(max_examples=25, deadline=None)
@given(
    st.integers(0, 2 ** 31 - 1),
    st.floats(0, 1),
    st.sampled_from([ad_qutrit, depol_qutrit]),
    st.sampled_from(["t", "x", "y"]),
)
def test_channel_preserves_state(seed, p, make, target):
    rho = random_density(PROTOCOL_LAYOUT, seed, rank=3)
    out = apply_channel(rho, make(p), target)
    assert out.trace().real == pytest.approx(1, abs=1e-10)
    assert out.hermiticity_defect() < 1e-10
    assert hermitian_spectrum(out)[0] >= -1e-10


@pytest.mark.parametrize(
    "tau, t, p",
    [
        (1.0, 0.0, 0.0),  # no time elapsed
        (2.0, log(4), 0.75),  # exp(-ln 4) = 1/4
        (1.0, 1e6, 1.0),  # long times saturate
    ],
)
def test_p_from_time(tau, t, p):
    assert p_from_time(tau, t) == pytest.approx(p)


def test_p_from_time_rejects_negative():
    with pytest.raises(ParameterError):
        p_from_time(-1.0, 1.0)
