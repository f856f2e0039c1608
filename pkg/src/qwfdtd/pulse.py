"""Cosine-modulated Gaussian source pulse and its calibration.

The pulse is E(t) = E0 * cos(wc*(t - t0)) * exp(-((t - t0)/tau)^2) with
the delay t0 >= 4.5*tau so the waveform starts numerically at zero.  Its
amplitude is calibrated so the field energy density integrated over one
calibration volume stores exactly one photon energy:

    (1/2) * eps * E0^2 * V = hbar * omega
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import C0, HBAR
from .errors import InvalidParameterError

# envelope widths of delay needed before the waveform is numerically zero
MIN_DELAY_WIDTHS = 4.5


@dataclass(frozen=True)
class PulseSpec:
    """Immutable description of one source pulse.

    amplitude: peak electric field E0 (V/m)
    carrier:   angular carrier frequency (rad/s)
    delay:     envelope peak time t0 (s)
    width:     Gaussian width tau (s)
    """

    amplitude: float
    carrier: float
    delay: float
    width: float

    def __post_init__(self):
        if self.amplitude < 0.0:
            raise InvalidParameterError(f"amplitude must be >= 0, got {self.amplitude}")
        if self.width <= 0.0:
            raise InvalidParameterError(f"width must be > 0, got {self.width}")
        if self.delay < MIN_DELAY_WIDTHS * self.width * (1.0 - 1e-12):
            raise InvalidParameterError(
                f"delay {self.delay} is below {MIN_DELAY_WIDTHS} widths; "
                "the waveform would not start at zero"
            )


def e0_from_photon_energy(omega: float, epsilon: float, volume: float) -> float:
    """Peak field storing one photon energy hbar*omega in ``volume``."""
    if omega <= 0.0 or epsilon <= 0.0 or volume <= 0.0:
        raise InvalidParameterError(
            f"omega, epsilon and volume must be > 0, got {(omega, epsilon, volume)}"
        )
    return math.sqrt(2.0 * HBAR * omega / (epsilon * volume))


def pulse_value(spec: PulseSpec, t):
    """Field value at time t (scalar or array), zero-phase at the peak."""
    s = np.asarray(t, dtype=float) - spec.delay
    value = spec.amplitude * np.cos(spec.carrier * s) * np.exp(-((s / spec.width) ** 2))
    return float(value) if np.isscalar(t) else value


def pulse_spectrum(spec: PulseSpec, omega):
    """Magnitude of the pulse's continuous Fourier transform (V*s/m).

    Two Gaussians of width 2/tau centred at +-carrier; even in omega.
    """
    w = np.asarray(omega, dtype=float)
    tau = spec.width
    w0 = spec.carrier
    half = spec.amplitude * tau * math.sqrt(math.pi) / 2.0
    value = half * (
        np.exp(-(tau**2) * (w - w0) ** 2 / 4.0) + np.exp(-(tau**2) * (w + w0) ** 2 / 4.0)
    )
    return float(value) if np.isscalar(omega) else value


def tau_from_grid(n_c: float, ds_max: float) -> float:
    """Pulse width from grid resolution: tau = n_c * ds_max / (2c)."""
    if n_c < 1:
        raise InvalidParameterError(f"n_c must be >= 1, got {n_c}")
    if ds_max <= 0.0:
        raise InvalidParameterError(f"ds_max must be > 0, got {ds_max}")
    return n_c * ds_max / (2.0 * C0)
