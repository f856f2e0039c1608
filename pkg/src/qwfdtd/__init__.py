"""Equal-probability quantum-walk emission driving a 3D FDTD solver.

The pipeline: exact walk probability tables become a timed schedule of
cosine-modulated Gaussian pulses, injected as soft Ez sources into a Yee
grid advanced by leapfrog Maxwell updates with Mur absorbing boundaries.
Snapshots of the field are serialized for rendering.
"""

from .atom import AtomicState, ThreeLevelSystem, hamiltonian, propagate, resonance_controls
from .config import SimulationConfig, parse_config, serialize_config
from .engine import (
    FieldSnapshot,
    SourceEvent,
    apply_abc,
    capture_boundary,
    inject_soft_source,
    run,
    schedule_events,
    step_e,
    step_h,
)
from .grid import MaterialRegion, YeeGrid, courant_dt, new_grid, set_material
from .pulse import PulseSpec, e0_from_photon_energy, pulse_spectrum, pulse_value, tau_from_grid
from .snapshots import RunManifest, read_manifest, read_snapshot, write_manifest, write_snapshot
from .walk import (
    EmissionEvent,
    EmissionSchedule,
    WalkDistribution,
    compile_schedule,
    initial_line,
    initial_parallel,
    normalization,
    published_parallel_step3,
    step_line,
    step_parallel,
    walk_table,
)

__version__ = "0.1.0"
