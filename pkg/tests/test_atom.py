import math

import numpy as np
import pytest

from qwfdtd.atom import (
    AtomicState,
    ThreeLevelSystem,
    hamiltonian,
    interaction_hamiltonian,
    propagate,
    resonance_controls,
)
from qwfdtd.constants import HBAR, TWO_PI
from qwfdtd.errors import IntegratorAccuracyError, InvalidParameterError

OMEGA = TWO_PI * 3.7e14


def optical_system(phi1=0.0, phi2=0.0):
    return ThreeLevelSystem(
        e1=0.0, e2=HBAR * OMEGA, e3=2.0 * HBAR * OMEGA, phi1=phi1, phi2=phi2
    )


def test_energy_ordering_enforced():
    with pytest.raises(InvalidParameterError):
        ThreeLevelSystem(e1=0.0, e2=0.0, e3=1e-20)
    with pytest.raises(InvalidParameterError):
        ThreeLevelSystem(e1=1e-20, e2=5e-21, e3=2e-20)


def test_transition_frequencies():
    sys = optical_system()
    assert sys.omega1 == pytest.approx(OMEGA, rel=1e-12)
    assert sys.omega2 == pytest.approx(OMEGA, rel=1e-12)


def test_controls_at_zero():
    o1, o2 = resonance_controls(optical_system(), 0.0)
    assert o1 == 1.0 + 0.0j
    assert o2 == 0.0 + 0.0j


def test_controls_quarter_period():
    sys = optical_system()
    t = math.sqrt(3.0) * math.pi / 2.0 * sys.time_unit
    o1, o2 = resonance_controls(sys, t)
    assert abs(o1) == pytest.approx(0.0, abs=1e-12)
    assert abs(o2) == pytest.approx(1.0, rel=1e-12)


def test_controls_normalized_on_1000_times():
    sys = optical_system(phi1=0.3 * HBAR, phi2=-0.7 * HBAR)
    rng = np.random.default_rng(3)
    for t in rng.uniform(0.0, 20.0 * sys.time_unit, size=1000):
        o1, o2 = resonance_controls(sys, float(t))
        assert abs(abs(o1) ** 2 + abs(o2) ** 2 - 1.0) < 1e-12


def test_hamiltonian_hermitian_and_outer_zeros():
    sys = optical_system(phi1=0.11 * HBAR, phi2=0.22 * HBAR)
    for t in np.linspace(0.0, 5.0 * sys.time_unit, 50):
        h = hamiltonian(sys, float(t))
        assert np.array_equal(h, h.conj().T)
        assert h[0, 2] == 0.0 and h[2, 0] == 0.0
        assert np.all(np.diag(h) == 0.0)


def test_hamiltonian_with_drift_reduces_to_diagonal():
    sys = ThreeLevelSystem(e1=1e-21, e2=2e-21, e3=3e-21, rabi=0.0)
    h = hamiltonian(sys, 1e-13, include_drift=True)
    assert np.array_equal(h, np.diag([1e-21, 2e-21, 3e-21]).astype(complex))


def test_interaction_hamiltonian_structure():
    sys = optical_system(phi1=0.5 * HBAR)
    for t in (0.0, 0.3 * sys.time_unit, 2.0 * sys.time_unit):
        h = interaction_hamiltonian(sys, t)
        assert np.array_equal(h, h.conj().T)
        assert h[0, 2] == 0.0 and h[2, 0] == 0.0


def test_zero_coupling_leaves_state_unchanged():
    sys = ThreeLevelSystem(e1=0.0, e2=HBAR * OMEGA, e3=2 * HBAR * OMEGA, rabi=0.0)
    state = AtomicState(0.6, 0.0, 0.8j)
    out = propagate(sys, state, 0.0, 1e-12, 1e-15)
    assert abs(out.c1 - 0.6) < 1e-12
    assert abs(out.c2) < 1e-12
    assert abs(out.c3 - 0.8j) < 1e-12


def _drift(sys, duration, dt_int):
    state = AtomicState(0.0, 0.0, 1.0)
    out = propagate(sys, state, 0.0, duration, dt_int)
    return abs(out.norm() - 1.0)


def test_norm_preserved_within_1e8_per_pulse():
    sys = optical_system()
    duration = math.sqrt(3.0) * math.pi * sys.time_unit
    assert _drift(sys, duration, duration / 2000.0) < 1e-8


def test_fourth_order_convergence_on_halving():
    sys = optical_system()
    duration = math.sqrt(3.0) * math.pi * sys.time_unit
    coarse = _drift(sys, duration, duration / 300.0)
    fine = _drift(sys, duration, duration / 600.0)
    assert coarse > 1e-13  # above the float noise floor, so the ratio means something
    assert fine <= coarse / 8.0


def test_population_leaves_level3_monotonically():
    sys = optical_system()
    quarter = math.sqrt(3.0) * math.pi / 2.0 * sys.time_unit
    state = AtomicState(0.0, 0.0, 1.0)
    samples = [1.0]
    n = 20
    for i in range(1, n + 1):
        state = propagate(sys, state, (i - 1) * quarter / n, i * quarter / n, quarter / (n * 200))
        samples.append(state.populations()[2])
    for before, after in zip(samples, samples[1:]):
        assert after < before


def test_propagate_rejects_coarse_steps():
    sys = optical_system()
    duration = math.sqrt(3.0) * math.pi * sys.time_unit
    with pytest.raises(IntegratorAccuracyError):
        propagate(sys, AtomicState(0.0, 0.0, 1.0), 0.0, duration, duration / 8.0)


def test_state_norm_validated():
    with pytest.raises(InvalidParameterError):
        AtomicState(1.0, 1.0, 0.0)
