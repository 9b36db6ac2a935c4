from math import log2

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ppsim.errors import InvariantError, LayoutError
from ppsim.qlin import (
    PROTOCOL_LAYOUT,
    DensityOperator,
    Operator,
    StateVector,
    SubsystemLayout,
    hermitian_spectrum,
    lift,
    partial_trace,
    shannon_entropy,
    tensor,
    trace_distance,
    von_neumann_entropy,
)

from ..util import random_density, random_hermitian

H = SubsystemLayout((("h", 2),))
T = SubsystemLayout((("t", 3),))
HT_QUBITS = SubsystemLayout((("h", 2), ("t", 2)))


def _psi_plus():
    amplitudes = np.array([0, 1, 1, 0]) / np.sqrt(2)
    return StateVector(HT_QUBITS, amplitudes).density()


def test_tensor_identities():
    eye = tensor(Operator.identity(H), Operator.identity(T))
    assert type(eye) is Operator
    assert eye.layout.labels == ("h", "t")
    assert np.array_equal(eye.matrix, np.eye(6))


def test_tensor_basis_states():
    state = tensor(StateVector.basis(H, (0,)), StateVector.basis(T, (2,)))
    assert np.flatnonzero(state.amplitudes).tolist() == [2]
    assert state.norm() == pytest.approx(1)


def test_tensor_densities():
    rho = tensor(random_density(H, 1), random_density(T, 2))
    assert isinstance(rho, DensityOperator)
    assert rho.trace().real == pytest.approx(1)


def test_tensor_label_collision():
    with pytest.raises(LayoutError):
        tensor(Operator.identity(H), Operator.identity(H))
    with pytest.raises(LayoutError):
        tensor(StateVector.basis(H, (0,)), Operator.identity(T))


def test_partial_trace_bell_state():
    reduced = partial_trace(_psi_plus(), {"h"})
    assert reduced.layout.labels == ("h",)
    assert np.allclose(reduced.matrix, np.eye(2) / 2, atol=1e-14)


def test_partial_trace_product_state():
    rho_h, rho_t = random_density(H, 3), random_density(T, 4)
    rho = tensor(rho_h, rho_t)
    assert np.allclose(partial_trace(rho, {"h"}).matrix, rho_h.matrix)
    assert np.allclose(partial_trace(rho, {"t"}).matrix, rho_t.matrix)


def test_partial_trace_unknown_label():
    with pytest.raises(LayoutError):
        partial_trace(_psi_plus(), {"x"})


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 31 - 1), st.sampled_from(["h", "t", "x", "y"]))
def test_partial_trace_preserves_trace(seed, keep):
    rho = random_density(PROTOCOL_LAYOUT, seed, rank=4)
    reduced = partial_trace(rho, {keep})
    assert reduced.trace().real == pytest.approx(1, abs=1e-12)
    # tracing the rest afterwards gives the full trace
    assert partial_trace(reduced, set()).matrix[0, 0].real == pytest.approx(
        1, abs=1e-12
    )


def test_partial_trace_keeps_layout_order():
    rho = random_density(PROTOCOL_LAYOUT, 11, rank=3)
    assert partial_trace(rho, ["y", "t"]).layout.labels == ("t", "y")


def test_lift_acts_locally():
    rho_h, rho_t = random_density(H, 5), random_density(T, 6)
    flip = np.diag([1, -1, 1])
    lifted = lift(flip, H + T, "t")
    out = tensor(rho_h, rho_t).evolve(lifted)
    expected = np.kron(rho_h.matrix, flip @ rho_t.matrix @ flip)
    assert np.allclose(out.matrix, expected)
    with pytest.raises(LayoutError):
        lift(np.eye(2), H + T, "t")


def test_spectrum_of_maximally_mixed():
    rho = DensityOperator(H, np.eye(2) / 2)
    assert np.allclose(hermitian_spectrum(rho), [0.5, 0.5])


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 31 - 1), st.integers(2, 54))
def test_spectrum_sums_to_trace(seed, dim):
    layout = SubsystemLayout((("h", 2), ("t", 3), ("x", 3), ("y", 3)))
    matrix = np.zeros((54, 54), dtype=complex)
    matrix[:dim, :dim] = random_hermitian(dim, seed)
    spectrum = hermitian_spectrum(Operator(layout, matrix))
    assert np.all(np.diff(spectrum) >= 0)
    assert spectrum.sum() == pytest.approx(np.trace(matrix).real, abs=1e-10)


def test_spectrum_rejects_non_hermitian():
    with pytest.raises(InvariantError):
        hermitian_spectrum(Operator(H, [[0, 1], [0, 0]]))


@pytest.mark.parametrize(
    "probs, entropy",
    [
        ([1.0], 0.0),  # certain
        ([0.5, 0.5], 1.0),  # fair bit
        ([0.75, 0.25, 0.0], 0.75 * log2(4 / 3) + 0.5),  # zero entry
    ],
)
def test_shannon_entropy(probs, entropy):
    assert shannon_entropy(probs) == pytest.approx(entropy, abs=1e-12)


def test_von_neumann_entropy():
    pure = StateVector.basis(T, (1,)).density()
    assert von_neumann_entropy(pure) == pytest.approx(0, abs=1e-12)
    mixed = DensityOperator(H, np.eye(2) / 2)
    assert von_neumann_entropy(mixed) == pytest.approx(1, abs=1e-12)
    assert von_neumann_entropy(_psi_plus()) == pytest.approx(0, abs=1e-12)


def test_trace_distance():
    zero = StateVector.basis(H, (0,)).density()
    one = StateVector.basis(H, (1,)).density()
    assert trace_distance(zero, one) == pytest.approx(1)
    assert trace_distance(zero, zero) == pytest.approx(0)
