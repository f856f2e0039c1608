"""Shared test utilities: quasi-1D harness and snapshot analysis."""

from __future__ import annotations

import numpy as np

from qwfdtd.engine import apply_abc, capture_boundary, step_e, step_h
from qwfdtd.grid import YeeGrid


def refresh_transverse(grid: YeeGrid) -> None:
    """Copy interior Ez rows onto the y-face rows so an x-propagating
    Ez/Hy plane wave stays transversely uniform (emulates an unbounded
    cross-section on a thin grid)."""
    grid.ez[:, 0, :] = grid.ez[:, 1, :]
    grid.ez[:, -1, :] = grid.ez[:, -2, :]


def run_quasi_1d(grid, dt, n_steps, src_i, src_value, probes, use_mur):
    """Drive the engine's own steps as a 1D line along x.

    ``src_value(t)`` is the Ez increment injected across the source
    column each iteration.  Returns {probe_i: [Ez(t)]}.
    """
    records = {p: [] for p in probes}
    for n in range(1, n_steps + 1):
        step_h(grid, dt)
        previous = capture_boundary(grid)
        step_e(grid, dt)
        grid.ez[src_i, 1:-1, :] += src_value(n * dt)
        if use_mur:
            apply_abc(grid, previous, dt)
        refresh_transverse(grid)
        for p in probes:
            records[p].append(grid.ez[p, 2, 2])
    return records


def connected_lobes(values: np.ndarray, threshold: float):
    """4-connected components of |values| >= threshold; returns a list of
    (cells, centroid_row) sorted by centroid row."""
    mask = np.abs(values) >= threshold
    seen = np.zeros_like(mask, dtype=bool)
    lobes = []
    rows, cols = mask.shape
    for i in range(rows):
        for k in range(cols):
            if mask[i, k] and not seen[i, k]:
                stack = [(i, k)]
                seen[i, k] = True
                cells = []
                while stack:
                    a, b = stack.pop()
                    cells.append((a, b))
                    for da, db in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                        na, nb = a + da, b + db
                        if 0 <= na < rows and 0 <= nb < cols and mask[na, nb] and not seen[na, nb]:
                            seen[na, nb] = True
                            stack.append((na, nb))
                centroid = sum(c[0] for c in cells) / len(cells)
                lobes.append((cells, centroid))
    return sorted(lobes, key=lambda item: item[1])


def refine_peak(values) -> float:
    """Peak of |series| refined by a parabola through the discrete
    maximum and its neighbours."""
    y = np.abs(np.asarray(values, dtype=float))
    m = int(np.argmax(y))
    if m == 0 or m == len(y) - 1:
        return float(y[m])
    y0, y1, y2 = y[m - 1], y[m], y[m + 1]
    denom = y0 - 2.0 * y1 + y2
    if denom == 0.0:
        return float(y1)
    delta = 0.5 * (y0 - y2) / denom
    return float(y1 - 0.25 * (y0 - y2) * delta)


def fit_phase_velocity(records, probes, dx, dt, omega, window):
    """Phase-slope fit of a propagated sinusoid over the trailing window.

    Least-squares quadrature amplitudes give the phase at each probe;
    the unwrapped phase-vs-position slope is -k and v_p = omega/k.
    """
    n_total = len(records[probes[0]])
    tgrid = dt * np.arange(n_total - window + 1, n_total + 1)
    design = np.column_stack([np.cos(omega * tgrid), np.sin(omega * tgrid)])
    phases = []
    for p in probes:
        y = np.asarray(records[p][-window:])
        a, b = np.linalg.lstsq(design, y, rcond=None)[0]
        phases.append(np.arctan2(a, b))
    phases = np.unwrap(np.array(phases))
    x = dx * np.asarray(probes, dtype=float)
    k_fit = -np.polyfit(x, phases, 1)[0]
    return omega / k_fit
