"""Leapfrog Maxwell stepping, absorbing boundaries, sources, snapshots.

One iteration advances H a half step from the curl of E, advances the
interior E a full step from the curl of H, injects the active soft
sources additively into Ez, and closes the six grid faces with a
first-order Mur condition on the tangential E components (face-edge
samples included, each updated along one owning axis).

Snapshots are xz planes of Ez through the source row.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np

from .constants import C0
from .errors import InvalidSourceError, ScheduleOverflowError, StabilityError
from .grid import YeeGrid, courant_dt
from .kernels import step_e_kernel, step_h_kernel
from .pulse import PulseSpec, pulse_value
from .walk import LINE, PARALLEL, EmissionSchedule

# slack for comparing a step against the exact Courant limit
_DT_TOLERANCE = 1.0 + 1e-9


@dataclass(frozen=True)
class FieldSnapshot:
    """Ez on an xz plane at one iteration."""

    plane: str
    fixed_index: int
    time: float
    step: int
    values: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class SourceEvent:
    """A pulse injected additively into Ez at one cell from start_time on."""

    cell: tuple[int, int, int]
    pulse: PulseSpec
    start_time: float = 0.0
    component: str = "Ez"

    def __post_init__(self):
        if self.start_time < 0.0:
            raise InvalidSourceError(f"start_time must be >= 0, got {self.start_time}")
        if self.component != "Ez":
            raise InvalidSourceError(f"only Ez sources are supported, got {self.component!r}")


def _check_source_cell(grid: YeeGrid, cell: tuple[int, int, int]) -> None:
    i, j, k = cell
    # Ez samples on the x/y faces belong to the boundary condition, so a
    # source must sit strictly inside in x and y.
    if not (1 <= i <= grid.nx - 1 and 1 <= j <= grid.ny - 1 and 0 <= k <= grid.nz - 1):
        raise InvalidSourceError(f"source cell {cell} is outside the grid interior")


def _require_stable(grid: YeeGrid, dt: float) -> None:
    limit = courant_dt(grid, 1.0)
    if dt > limit * _DT_TOLERANCE:
        raise StabilityError(f"dt {dt:.6e} exceeds the Courant limit {limit:.6e}")
    if dt <= 0.0:
        raise StabilityError(f"dt must be > 0, got {dt}")


def step_h(grid: YeeGrid, dt: float) -> None:
    """Advance all H components one half-step interval."""
    _require_stable(grid, dt)
    step_h_kernel(
        grid.ex, grid.ey, grid.ez, grid.hx, grid.hy, grid.hz,
        dt / grid.mux, dt / grid.muy, dt / grid.muz,
        grid.dx, grid.dy, grid.dz,
    )


def step_e(grid: YeeGrid, dt: float) -> None:
    """Advance interior E components one full step; faces are left to
    the boundary condition."""
    _require_stable(grid, dt)
    step_e_kernel(
        grid.ex, grid.ey, grid.ez, grid.hx, grid.hy, grid.hz,
        dt / grid.epsx, dt / grid.epsy, dt / grid.epsz,
        grid.dx, grid.dy, grid.dz,
    )


@dataclass
class BoundaryPlanes:
    """Tangential E on each face and its adjacent interior plane, saved
    before an E step for the Mur update."""

    ey_x: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    ez_x: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    ex_y: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    ez_y: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    ex_z: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    ey_z: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]


def capture_boundary(grid: YeeGrid) -> BoundaryPlanes:
    """Copy the twelve boundary-adjacent tangential-E planes."""

    def planes(a: np.ndarray, axis: int):
        lo0 = a.take(0, axis=axis).copy()
        lo1 = a.take(1, axis=axis).copy()
        hi0 = a.take(a.shape[axis] - 1, axis=axis).copy()
        hi1 = a.take(a.shape[axis] - 2, axis=axis).copy()
        return (lo0, lo1, hi0, hi1)

    return BoundaryPlanes(
        ey_x=planes(grid.ey, 0),
        ez_x=planes(grid.ez, 0),
        ex_y=planes(grid.ex, 1),
        ez_y=planes(grid.ez, 1),
        ex_z=planes(grid.ex, 2),
        ey_z=planes(grid.ey, 2),
    )


def apply_abc(grid: YeeGrid, previous: BoundaryPlanes, dt: float) -> None:
    """First-order Mur absorbing update on all six faces.

    E_new(face) = E_old(adjacent) + q * (E_new(adjacent) - E_old(face))
    with q = (c*dt - d)/(c*dt + d).  Samples on face edges are tangential
    to two faces and are updated once, along the lower-priority axis
    (x before y before z); all adjacent-plane reads come from one
    post-step snapshot so the face order cannot matter.  The faces are
    assumed to sit in vacuum.
    """
    qx = (C0 * dt - grid.dx) / (C0 * dt + grid.dx)
    qy = (C0 * dt - grid.dy) / (C0 * dt + grid.dy)
    qz = (C0 * dt - grid.dz) / (C0 * dt + grid.dz)

    def adjacent(a, axis):
        return (a.take(1, axis=axis).copy(), a.take(a.shape[axis] - 2, axis=axis).copy())

    ey_x_new = adjacent(grid.ey, 0)
    ez_x_new = adjacent(grid.ez, 0)
    ex_y_new = adjacent(grid.ex, 1)
    ez_y_new = adjacent(grid.ez, 1)
    ex_z_new = adjacent(grid.ex, 2)
    ey_z_new = adjacent(grid.ey, 2)

    # x faces own their edges: full planes of ey and ez
    lo0, lo1, hi0, hi1 = previous.ey_x
    grid.ey[0] = lo1 + qx * (ey_x_new[0] - lo0)
    grid.ey[-1] = hi1 + qx * (ey_x_new[1] - hi0)
    lo0, lo1, hi0, hi1 = previous.ez_x
    grid.ez[0] = lo1 + qx * (ez_x_new[0] - lo0)
    grid.ez[-1] = hi1 + qx * (ez_x_new[1] - hi0)

    # y faces: ex owns its y/z edges, ez minus the x-owned edges
    lo0, lo1, hi0, hi1 = previous.ex_y
    grid.ex[:, 0, :] = lo1 + qy * (ex_y_new[0] - lo0)
    grid.ex[:, -1, :] = hi1 + qy * (ex_y_new[1] - hi0)
    lo0, lo1, hi0, hi1 = previous.ez_y
    grid.ez[1:-1, 0, :] = lo1[1:-1, :] + qy * (ez_y_new[0][1:-1, :] - lo0[1:-1, :])
    grid.ez[1:-1, -1, :] = hi1[1:-1, :] + qy * (ez_y_new[1][1:-1, :] - hi0[1:-1, :])

    # z faces: remaining ex and ey samples
    lo0, lo1, hi0, hi1 = previous.ex_z
    grid.ex[:, 1:-1, 0] = lo1[:, 1:-1] + qz * (ex_z_new[0][:, 1:-1] - lo0[:, 1:-1])
    grid.ex[:, 1:-1, -1] = hi1[:, 1:-1] + qz * (ex_z_new[1][:, 1:-1] - hi0[:, 1:-1])
    lo0, lo1, hi0, hi1 = previous.ey_z
    grid.ey[1:-1, :, 0] = lo1[1:-1, :] + qz * (ey_z_new[0][1:-1, :] - lo0[1:-1, :])
    grid.ey[1:-1, :, -1] = hi1[1:-1, :] + qz * (ey_z_new[1][1:-1, :] - hi0[1:-1, :])


def inject_soft_source(grid: YeeGrid, event: SourceEvent, t: float) -> None:
    """Add the event's pulse value at local time t - start_time to Ez."""
    _check_source_cell(grid, event.cell)
    if t < event.start_time:
        return
    i, j, k = event.cell
    grid.ez[i, j, k] += pulse_value(event.pulse, t - event.start_time)


def _nearest_index(value: float) -> int:
    """Nearest integer with exact halves rounded up (deterministic)."""
    return math.floor(value + 0.5)


def default_snapshot_j(grid: YeeGrid) -> int:
    """Ez row index closest to the domain's y midplane."""
    return _nearest_index(grid.ny / 2.0)


def take_snapshot(grid: YeeGrid, j: int, step: int, dt: float) -> FieldSnapshot:
    return FieldSnapshot(
        plane="xz", fixed_index=j, time=step * dt, step=step,
        values=grid.ez[:, j, :].copy(),
    )


def run(
    grid: YeeGrid,
    events: list[SourceEvent],
    n_steps: int,
    snapshot_every: int,
    cfl: float = 0.9,
    snapshot_j: int | None = None,
) -> list[FieldSnapshot]:
    """Run the leapfrog loop and return the snapshot series.

    Each iteration: H step, E step, source injection at t = n*dt, Mur
    boundary.  Snapshots are taken every ``snapshot_every`` iterations on
    the xz plane through the first source's row (grid midplane when there
    are no sources).
    """
    if n_steps < 1:
        raise InvalidSourceError(f"n_steps must be >= 1, got {n_steps}")
    if snapshot_every < 1:
        raise InvalidSourceError(f"snapshot_every must be >= 1, got {snapshot_every}")
    for event in events:
        _check_source_cell(grid, event.cell)

    dt = courant_dt(grid, cfl)
    cex, cey, cez = dt / grid.epsx, dt / grid.epsy, dt / grid.epsz
    chx, chy, chz = dt / grid.mux, dt / grid.muy, dt / grid.muz
    if snapshot_j is None:
        snapshot_j = events[0].cell[1] if events else default_snapshot_j(grid)

    snapshots: list[FieldSnapshot] = []
    for n in range(1, n_steps + 1):
        step_h_kernel(
            grid.ex, grid.ey, grid.ez, grid.hx, grid.hy, grid.hz,
            chx, chy, chz, grid.dx, grid.dy, grid.dz,
        )
        previous = capture_boundary(grid)
        step_e_kernel(
            grid.ex, grid.ey, grid.ez, grid.hx, grid.hy, grid.hz,
            cex, cey, cez, grid.dx, grid.dy, grid.dz,
        )
        t = n * dt
        for event in events:
            if t >= event.start_time:
                i, j, k = event.cell
                grid.ez[i, j, k] += pulse_value(event.pulse, t - event.start_time)
        apply_abc(grid, previous, dt)
        if n % snapshot_every == 0:
            snapshots.append(take_snapshot(grid, snapshot_j, n, dt))
    return snapshots


# ---------------------------------------------------------------------------
# schedule -> grid mapping
# ---------------------------------------------------------------------------

def source_cells(
    grid: YeeGrid,
    topology: str,
    lattice_spacing: float,
    line_offset: float,
) -> dict:
    """Ez row indices and x/z anchors for walk-site placement.

    Sites sit every ``lattice_spacing`` along x about the domain centre.
    The line topology uses the row nearest the y midplane; the parallel
    topology uses two rows at -+``line_offset`` about the midplane.
    """
    i_center = _nearest_index(grid.nx / 2.0)
    k_center = _nearest_index(grid.nz / 2.0 - 0.5)
    y_mid = grid.ny * grid.dy / 2.0
    if topology == LINE:
        rows = {0: _nearest_index(y_mid / grid.dy)}
    elif topology == PARALLEL:
        rows = {
            1: _nearest_index((y_mid - line_offset) / grid.dy),
            2: _nearest_index((y_mid + line_offset) / grid.dy),
        }
    else:
        raise ScheduleOverflowError(f"unknown topology {topology!r}")
    return {"i_center": i_center, "k_center": k_center, "rows": rows}


def schedule_events(
    schedule: EmissionSchedule,
    grid: YeeGrid,
    base_pulse: PulseSpec,
    lattice_spacing: float,
    line_offset: float = 0.0,
) -> list[SourceEvent]:
    """Map emission events onto grid cells as amplitude-scaled sources.

    Site x lands at i_center + round(x * lattice_spacing / dx); a site
    mapping outside the grid interior raises ScheduleOverflowError.
    """
    anchors = source_cells(grid, schedule.topology, lattice_spacing, line_offset)
    i_center, k_center = anchors["i_center"], anchors["k_center"]
    rows = anchors["rows"]

    out: list[SourceEvent] = []
    for event in schedule.events:
        if schedule.topology == LINE:
            x = event.site
            j = rows[0]
        else:
            line, x = event.site
            j = rows[line]
        i = i_center + _nearest_index(x * lattice_spacing / grid.dx)
        cell = (i, j, k_center)
        try:
            _check_source_cell(grid, cell)
        except InvalidSourceError as exc:
            raise ScheduleOverflowError(
                f"walk site {event.site} maps to cell {cell} outside the grid"
            ) from exc
        out.append(
            SourceEvent(
                cell=cell,
                pulse=replace(base_pulse, amplitude=base_pulse.amplitude * event.amplitude_scale),
                start_time=event.start_time,
            )
        )
    return out
