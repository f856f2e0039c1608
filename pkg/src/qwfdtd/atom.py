"""Three-level ladder system: resonance controls, Hamiltonian, propagation.

The system has energies E1 < E2 < E3 with direct couplings only between
1<->2 and 2<->3.  The resonance control pair is

    Omega1(t) = cos(t~/sqrt(3)) * exp(i*(w1*t + phi1/hbar))
    Omega2(t) = sin(t~/sqrt(3)) * exp(i*(w2*t + phi2/hbar))

where w1 = (E2-E1)/hbar, w2 = (E3-E2)/hbar and t~ = t/time_unit is the
envelope's natural time.  |Omega1|^2 + |Omega2|^2 = 1 for all t.

``hamiltonian`` returns the matrix exactly as written above (drift
optional).  ``propagate`` integrates the Schroedinger equation in the
co-rotating interaction frame, where the carrier phases cancel against
the transition frequencies and only the envelopes with constant phases
phi/hbar remain; this is the frame in which the controls are resonant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import HBAR, TWO_PI
from .errors import IntegratorAccuracyError, InvalidParameterError

SQRT3 = math.sqrt(3.0)

DEFAULT_RABI = TWO_PI * 1e12  # rad/s; coupling energy hbar*DEFAULT_RABI


@dataclass(frozen=True)
class ThreeLevelSystem:
    """Energies (J), control phases (J*s) and the coupling scale."""

    e1: float
    e2: float
    e3: float
    phi1: float = 0.0
    phi2: float = 0.0
    rabi: float = DEFAULT_RABI       # coupling energy / hbar (rad/s)
    time_unit: float = 1.0 / DEFAULT_RABI  # seconds per envelope time unit

    def __post_init__(self):
        if not self.e1 < self.e2 < self.e3:
            raise InvalidParameterError(
                f"energies must be strictly ordered, got {(self.e1, self.e2, self.e3)}"
            )
        if self.rabi < 0.0:
            raise InvalidParameterError(f"rabi must be >= 0, got {self.rabi}")
        if self.time_unit <= 0.0:
            raise InvalidParameterError(f"time_unit must be > 0, got {self.time_unit}")

    @property
    def omega1(self) -> float:
        return (self.e2 - self.e1) / HBAR

    @property
    def omega2(self) -> float:
        return (self.e3 - self.e2) / HBAR

    @property
    def coupling_energy(self) -> float:
        return HBAR * self.rabi


@dataclass(frozen=True)
class AtomicState:
    """Complex amplitudes on the three levels; unit norm within 1e-9."""

    c1: complex
    c2: complex
    c3: complex

    def __post_init__(self):
        if abs(self.norm() - 1.0) > 1e-9:
            raise InvalidParameterError(f"state norm {self.norm()} is not 1 within 1e-9")

    def vector(self) -> np.ndarray:
        return np.array([self.c1, self.c2, self.c3], dtype=complex)

    def norm(self) -> float:
        return math.sqrt(abs(self.c1) ** 2 + abs(self.c2) ** 2 + abs(self.c3) ** 2)

    def populations(self) -> tuple[float, float, float]:
        return (abs(self.c1) ** 2, abs(self.c2) ** 2, abs(self.c3) ** 2)


def _unchecked_state(vec: np.ndarray) -> AtomicState:
    state = object.__new__(AtomicState)
    object.__setattr__(state, "c1", complex(vec[0]))
    object.__setattr__(state, "c2", complex(vec[1]))
    object.__setattr__(state, "c3", complex(vec[2]))
    return state


def resonance_controls(sys: ThreeLevelSystem, t: float) -> tuple[complex, complex]:
    """Control pair (Omega1, Omega2) at time t; |O1|^2 + |O2|^2 = 1."""
    angle = (t / sys.time_unit) / SQRT3
    mu1 = sys.omega1 * t + sys.phi1 / HBAR
    mu2 = sys.omega2 * t + sys.phi2 / HBAR
    omega_1 = math.cos(angle) * complex(math.cos(mu1), math.sin(mu1))
    omega_2 = math.sin(angle) * complex(math.cos(mu2), math.sin(mu2))
    return omega_1, omega_2


def hamiltonian(sys: ThreeLevelSystem, t: float, include_drift: bool = False) -> np.ndarray:
    """3x3 Hermitian coupling matrix (J); drift adds diag(E1, E2, E3).

    The (1,3) and (3,1) entries are identically zero: there is no direct
    coupling between the outer levels.
    """
    o1, o2 = resonance_controls(sys, t)
    g = sys.coupling_energy
    h = np.array(
        [
            [0.0, g * o1, 0.0],
            [g * np.conj(o1), 0.0, g * o2],
            [0.0, g * np.conj(o2), 0.0],
        ],
        dtype=complex,
    )
    if include_drift:
        h += np.diag([sys.e1, sys.e2, sys.e3])
    return h


def interaction_hamiltonian(sys: ThreeLevelSystem, t: float) -> np.ndarray:
    """Coupling matrix in the co-rotating frame (carrier phases removed).

    Only the slow envelopes survive, with the constant phases phi/hbar.
    """
    angle = (t / sys.time_unit) / SQRT3
    g = sys.coupling_energy
    p1 = complex(math.cos(sys.phi1 / HBAR), math.sin(sys.phi1 / HBAR))
    p2 = complex(math.cos(sys.phi2 / HBAR), math.sin(sys.phi2 / HBAR))
    o1 = math.cos(angle) * p1
    o2 = math.sin(angle) * p2
    return np.array(
        [
            [0.0, g * o1, 0.0],
            [g * np.conj(o1), 0.0, g * o2],
            [0.0, g * np.conj(o2), 0.0],
        ],
        dtype=complex,
    )


def propagate(
    sys: ThreeLevelSystem,
    state: AtomicState,
    t_start: float,
    t_end: float,
    dt_int: float,
) -> AtomicState:
    """Integrate i*hbar*dc/dt = H(t)c with a classical fixed-step RK4.

    Uses the co-rotating interaction Hamiltonian.  The returned state is
    deliberately not renormalized: norm drift is the accuracy signal, and
    drift beyond 1e-6 raises IntegratorAccuracyError.
    """
    if dt_int <= 0.0:
        raise InvalidParameterError(f"dt_int must be > 0, got {dt_int}")
    if t_end < t_start:
        raise InvalidParameterError("t_end must be >= t_start")

    def deriv(t: float, c: np.ndarray) -> np.ndarray:
        return -1j / HBAR * (interaction_hamiltonian(sys, t) @ c)

    c = state.vector()
    n_steps = max(1, math.ceil((t_end - t_start) / dt_int))
    h = (t_end - t_start) / n_steps
    t = t_start
    for _ in range(n_steps):
        k1 = deriv(t, c)
        k2 = deriv(t + 0.5 * h, c + 0.5 * h * k1)
        k3 = deriv(t + 0.5 * h, c + 0.5 * h * k2)
        k4 = deriv(t + h, c + h * k3)
        c = c + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        t += h

    drift = abs(float(np.linalg.norm(c)) - state.norm())
    if drift > 1e-6:
        raise IntegratorAccuracyError(
            f"norm drift {drift:.3e} exceeds 1e-6; reduce dt_int (got {dt_int:.3e})"
        )
    return _unchecked_state(c)
