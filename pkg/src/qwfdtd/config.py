"""Simulation configuration: defaults, JSON parsing, validation.

The defaults reproduce the reference scenario: a 900x90x190 nm quartz
block (relative permittivity 2.37) meshed at 10 nm with 10 vacuum
padding cells per face, light at 804 nm / 3.7e14 Hz, walk sites every
40 nm, and a pulse that completes within 100 iterations at the default
time step.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from .constants import EPS0, TWO_PI
from .errors import ConfigError
from .grid import MaterialRegion, YeeGrid, new_grid, set_material
from .pulse import PulseSpec, e0_from_photon_energy, tau_from_grid
from .walk import CONVENTIONS, LINE, PARALLEL

NM = 1e-9


@dataclass(frozen=True)
class SimulationConfig:
    domain_nm: tuple[float, float, float] = (900.0, 90.0, 190.0)
    cell_nm: float = 10.0
    padding_cells: int = 10
    epsilon_r: float = 2.37
    cfl: float = 0.9
    wavelength_nm: float = 804.0
    frequency_hz: float = 3.7e14
    lattice_spacing_nm: float = 40.0
    line_offset_nm: float = 25.0
    topology: str = LINE
    walk_steps: int = 1
    emission: str = "reached"
    # pulse width tau = pulse_cells_per_wavelength * cell / (2c); 13 keeps a
    # complete pulse (delay 4.5*tau plus tail) inside 100 default iterations
    pulse_cells_per_wavelength: int = 13
    T1_mode: float = 9.0  # T1 in units of tau
    T2_mode: float = 9.0  # T2 in units of tau
    phi1: float = 0.0
    phi2: float = 0.0
    n_steps: int = 100
    snapshot_every: int = 10
    out_dir: str = "out"

    # ------------------------------------------------------------------
    # derived quantities
    # ------------------------------------------------------------------

    @property
    def cell_counts(self) -> tuple[int, int, int]:
        counts = []
        for extent in self.domain_nm:
            cells = extent / self.cell_nm
            counts.append(round(cells) + 2 * self.padding_cells)
        return tuple(counts)

    @property
    def cell_size(self) -> float:
        return self.cell_nm * NM

    @property
    def crystal_region(self) -> MaterialRegion:
        pad = self.padding_cells
        counts = self.cell_counts
        return MaterialRegion(
            lo=(pad, pad, pad),
            hi=tuple(n - pad - 1 for n in counts),
            relative_permittivity=self.epsilon_r,
        )

    @property
    def carrier(self) -> float:
        return TWO_PI * self.frequency_hz

    @property
    def tau(self) -> float:
        return tau_from_grid(self.pulse_cells_per_wavelength, self.cell_size)

    @property
    def t1(self) -> float:
        return self.T1_mode * self.tau

    @property
    def t2(self) -> float:
        return self.T2_mode * self.tau

    def base_pulse(self) -> PulseSpec:
        """Unit-probability pulse calibrated to one photon energy stored
        in one cell volume of the crystal."""
        e0 = e0_from_photon_energy(
            self.carrier, self.epsilon_r * EPS0, self.cell_size**3
        )
        tau = self.tau
        return PulseSpec(amplitude=e0, carrier=self.carrier, delay=4.5 * tau, width=tau)

    def build_grid(self) -> YeeGrid:
        nx, ny, nz = self.cell_counts
        d = self.cell_size
        grid = new_grid(nx, ny, nz, d, d, d)
        set_material(grid, self.crystal_region)
        return grid


_DEFAULTS = asdict(SimulationConfig())

_POSITIVE_KEYS = (
    "cell_nm", "epsilon_r", "wavelength_nm", "frequency_hz",
    "lattice_spacing_nm", "T1_mode", "T2_mode",
)
_POSITIVE_INT_KEYS = ("walk_steps", "n_steps", "snapshot_every", "pulse_cells_per_wavelength")


def _validate(config: SimulationConfig) -> SimulationConfig:
    if len(config.domain_nm) != 3 or any(v <= 0 for v in config.domain_nm):
        raise ConfigError(f"domain_nm must be three positive extents, got {config.domain_nm}")
    for key in _POSITIVE_KEYS:
        if getattr(config, key) <= 0:
            raise ConfigError(f"{key} must be > 0, got {getattr(config, key)}")
    for key in _POSITIVE_INT_KEYS:
        value = getattr(config, key)
        if not isinstance(value, int) or value < 1:
            raise ConfigError(f"{key} must be a positive integer, got {value!r}")
    if not isinstance(config.padding_cells, int) or config.padding_cells < 0:
        raise ConfigError(f"padding_cells must be a non-negative integer, got {config.padding_cells!r}")
    if not 0.0 < config.cfl <= 1.0:
        raise ConfigError(f"cfl must be in (0, 1], got {config.cfl}")
    if config.topology not in (LINE, PARALLEL):
        raise ConfigError(f"topology must be 'line' or 'parallel', got {config.topology!r}")
    if config.emission not in CONVENTIONS:
        raise ConfigError(f"emission must be one of {CONVENTIONS}, got {config.emission!r}")
    if config.line_offset_nm < 0:
        raise ConfigError(f"line_offset_nm must be >= 0, got {config.line_offset_nm}")
    for extent in config.domain_nm:
        cells = extent / config.cell_nm
        if abs(cells - round(cells)) > 1e-9:
            raise ConfigError(
                f"domain extent {extent} nm is not a whole number of {config.cell_nm} nm cells"
            )
    nx, ny, nz = config.cell_counts
    if min(nx, ny, nz) < 2:
        raise ConfigError(f"grid {config.cell_counts} is too small")
    # furthest walk site must stay inside the grid interior
    reach_cells = round(config.walk_steps * config.lattice_spacing_nm / config.cell_nm)
    i_center = nx // 2
    if i_center - reach_cells < 1 or i_center + reach_cells > nx - 1:
        raise ConfigError(
            f"walk sites (+-{config.walk_steps} steps of {config.lattice_spacing_nm} nm) "
            f"do not fit the padded grid of {nx} cells"
        )
    if config.topology == PARALLEL:
        y_mid = ny * config.cell_nm / 2.0
        for offset in (-config.line_offset_nm, config.line_offset_nm):
            j = int((y_mid + offset) / config.cell_nm + 0.5)
            if not 1 <= j <= ny - 1:
                raise ConfigError(
                    f"line offset {config.line_offset_nm} nm places a source row "
                    f"outside the grid of {ny} cells"
                )
    return config


def from_mapping(data: dict) -> SimulationConfig:
    """Build a config from a JSON-style mapping; unknown keys rejected,
    missing keys take the scenario defaults."""
    if not isinstance(data, dict):
        raise ConfigError(f"configuration must be a JSON object, got {type(data).__name__}")
    unknown = sorted(set(data) - set(_DEFAULTS))
    if unknown:
        raise ConfigError(f"unknown configuration keys: {', '.join(unknown)}")
    merged = dict(_DEFAULTS)
    merged.update(data)

    def as_float(key, value):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{key} must be a number, got {value!r}")
        return float(value)

    domain = merged["domain_nm"]
    if not isinstance(domain, (list, tuple)) or len(domain) != 3:
        raise ConfigError(f"domain_nm must be a list of three numbers, got {domain!r}")
    merged["domain_nm"] = tuple(as_float("domain_nm", v) for v in domain)
    for key, default in _DEFAULTS.items():
        value = merged[key]
        if isinstance(default, float):
            merged[key] = as_float(key, value)
        elif isinstance(default, int):
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(f"{key} must be an integer, got {value!r}")
        elif isinstance(default, str) and not isinstance(value, str):
            raise ConfigError(f"{key} must be a string, got {value!r}")
    try:
        config = SimulationConfig(**merged)
    except TypeError as exc:
        raise ConfigError(str(exc)) from exc
    return _validate(config)


def parse_config(text: str) -> SimulationConfig:
    """Parse a JSON document into a validated configuration."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON at line {exc.lineno}: {exc.msg}") from exc
    return from_mapping(data)


def serialize_config(config: SimulationConfig) -> str:
    """JSON document that parses back to an equal configuration."""
    data = asdict(config)
    data["domain_nm"] = list(data["domain_nm"])
    return json.dumps(data, indent=2) + "\n"
