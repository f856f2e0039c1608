"""Yee lattice geometry, material assignment and the stability time step.

The grid covers nx*ny*nz cells.  Field components live on the standard
staggered sub-lattices, so their array extents differ by one along some
axes:

    ex: (nx,   ny+1, nz+1)   at ((i+1/2)dx, j dy,       k dz)
    ey: (nx+1, ny,   nz+1)   at (i dx,      (j+1/2)dy,  k dz)
    ez: (nx+1, ny+1, nz  )   at (i dx,      j dy,       (k+1/2)dz)
    hx: (nx+1, ny,   nz  )   at (i dx,      (j+1/2)dy,  (k+1/2)dz)
    hy: (nx,   ny+1, nz  )   at ((i+1/2)dx, j dy,       (k+1/2)dz)
    hz: (nx,   ny,   nz+1)   at ((i+1/2)dx, (j+1/2)dy,  k dz)

Permittivity is stored per electric component (epsx/epsy/epsz, same
extents as ex/ey/ez) and permeability per magnetic component.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import EPS0, MU0
from .errors import InvalidGeometryError, InvalidParameterError, InvalidRegionError


def _stagger_shapes(nx: int, ny: int, nz: int):
    return {
        "ex": (nx, ny + 1, nz + 1),
        "ey": (nx + 1, ny, nz + 1),
        "ez": (nx + 1, ny + 1, nz),
        "hx": (nx + 1, ny, nz),
        "hy": (nx, ny + 1, nz),
        "hz": (nx, ny, nz + 1),
    }


@dataclass
class YeeGrid:
    """Staggered E/H field state plus per-component material arrays.

    Single-owner mutable value: it may be handed between threads but must
    never be mutated concurrently.
    """

    nx: int
    ny: int
    nz: int
    dx: float
    dy: float
    dz: float
    ex: np.ndarray = field(repr=False)
    ey: np.ndarray = field(repr=False)
    ez: np.ndarray = field(repr=False)
    hx: np.ndarray = field(repr=False)
    hy: np.ndarray = field(repr=False)
    hz: np.ndarray = field(repr=False)
    epsx: np.ndarray = field(repr=False)
    epsy: np.ndarray = field(repr=False)
    epsz: np.ndarray = field(repr=False)
    mux: np.ndarray = field(repr=False)
    muy: np.ndarray = field(repr=False)
    muz: np.ndarray = field(repr=False)

    @property
    def cell_counts(self) -> tuple[int, int, int]:
        return (self.nx, self.ny, self.nz)

    @property
    def spacings(self) -> tuple[float, float, float]:
        return (self.dx, self.dy, self.dz)

    def e_fields(self):
        return (self.ex, self.ey, self.ez)

    def h_fields(self):
        return (self.hx, self.hy, self.hz)

    def max_wave_speed(self) -> float:
        """Fastest phase speed supported anywhere in the grid."""
        eps_min = min(self.epsx.min(), self.epsy.min(), self.epsz.min())
        mu_min = min(self.mux.min(), self.muy.min(), self.muz.min())
        return 1.0 / math.sqrt(eps_min * mu_min)


@dataclass(frozen=True)
class MaterialRegion:
    """Axis-aligned block of cells with a uniform relative permittivity.

    ``lo`` and ``hi`` are inclusive cell-index corners.
    """

    lo: tuple[int, int, int]
    hi: tuple[int, int, int]
    relative_permittivity: float

    def __post_init__(self):
        if any(l > h for l, h in zip(self.lo, self.hi)):
            raise InvalidRegionError(f"region lo {self.lo} exceeds hi {self.hi}")
        if self.relative_permittivity < 1.0:
            raise InvalidParameterError(
                f"relative permittivity must be >= 1, got {self.relative_permittivity}"
            )


def new_grid(nx: int, ny: int, nz: int, dx: float, dy: float, dz: float) -> YeeGrid:
    """Allocate a vacuum grid of nx*ny*nz cells with all fields zero."""
    if min(nx, ny, nz) < 2:
        raise InvalidGeometryError(f"cell counts must be >= 2, got {(nx, ny, nz)}")
    if min(dx, dy, dz) <= 0.0:
        raise InvalidGeometryError(f"cell spacings must be > 0, got {(dx, dy, dz)}")
    shapes = _stagger_shapes(nx, ny, nz)
    fields = {name: np.zeros(shape) for name, shape in shapes.items()}
    return YeeGrid(
        nx=nx, ny=ny, nz=nz, dx=dx, dy=dy, dz=dz,
        **fields,
        epsx=np.full(shapes["ex"], EPS0),
        epsy=np.full(shapes["ey"], EPS0),
        epsz=np.full(shapes["ez"], EPS0),
        mux=np.full(shapes["hx"], MU0),
        muy=np.full(shapes["hy"], MU0),
        muz=np.full(shapes["hz"], MU0),
    )


def _component_slices(component: str, lo, hi):
    """Index slices selecting the component samples inside a cell block.

    A sample belongs to the block when its staggered position lies within
    the closed interval [lo*d, (hi+1)*d] on every axis; samples on the
    block surface are included (no sub-cell averaging).
    """
    ix, iy, iz = slice(lo[0], hi[0] + 1), slice(lo[1], hi[1] + 1), slice(lo[2], hi[2] + 1)
    # staggered (+1/2) axes keep the cell range; node axes extend one sample
    nx_, ny_, nz_ = slice(lo[0], hi[0] + 2), slice(lo[1], hi[1] + 2), slice(lo[2], hi[2] + 2)
    if component == "ex":
        return ix, ny_, nz_
    if component == "ey":
        return nx_, iy, nz_
    if component == "ez":
        return nx_, ny_, iz
    raise ValueError(component)


def set_material(grid: YeeGrid, region: MaterialRegion) -> YeeGrid:
    """Assign a relative permittivity inside a cell block; permeability
    is left untouched.  Re-applying the same region is a no-op."""
    for axis, (lo, hi, n) in enumerate(zip(region.lo, region.hi, grid.cell_counts)):
        if lo < 0 or hi >= n:
            raise InvalidRegionError(
                f"region {region.lo}..{region.hi} exceeds grid {grid.cell_counts} on axis {axis}"
            )
    eps_value = region.relative_permittivity * EPS0
    for name, eps in (("ex", grid.epsx), ("ey", grid.epsy), ("ez", grid.epsz)):
        eps[_component_slices(name, region.lo, region.hi)] = eps_value
    return grid


def courant_dt(grid: YeeGrid, cfl_factor: float = 1.0) -> float:
    """Stable time step: cfl / (c_max * sqrt(1/dx^2 + 1/dy^2 + 1/dz^2))."""
    if not 0.0 < cfl_factor <= 1.0:
        raise InvalidParameterError(f"cfl_factor must be in (0, 1], got {cfl_factor}")
    diag = math.sqrt(1.0 / grid.dx**2 + 1.0 / grid.dy**2 + 1.0 / grid.dz**2)
    return cfl_factor / (grid.max_wave_speed() * diag)
