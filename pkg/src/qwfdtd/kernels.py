"""Field-update kernels: numba-compiled loops with a pure-numpy fallback.

The backend is chosen once at import time from the ``QWFDTD_BACKEND``
environment variable ("numba" or "numpy").  Default is numba when it
imports, numpy otherwise.  Both implementations use the same expression
tree per sample so they produce bit-identical fields; the update loops
are serial so runs are deterministic.

All kernels take precomputed coefficient arrays c = dt/eps (or dt/mu)
with the same extents as the component they update.
"""

from __future__ import annotations

import os


try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    HAS_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------

def step_h_numpy(ex, ey, ez, hx, hy, hz, chx, chy, chz, dx, dy, dz):
    """Advance all three H components one step from the curl of E."""
    hx += chx * ((ey[:, :, 1:] - ey[:, :, :-1]) / dz - (ez[:, 1:, :] - ez[:, :-1, :]) / dy)
    hy += chy * ((ez[1:, :, :] - ez[:-1, :, :]) / dx - (ex[:, :, 1:] - ex[:, :, :-1]) / dz)
    hz += chz * ((ex[:, 1:, :] - ex[:, :-1, :]) / dy - (ey[1:, :, :] - ey[:-1, :, :]) / dx)


def step_e_numpy(ex, ey, ez, hx, hy, hz, cex, cey, cez, dx, dy, dz):
    """Advance interior E samples one step from the curl of H.

    Tangential E on the six grid faces is left untouched; the boundary
    condition decides those samples.
    """
    ex[:, 1:-1, 1:-1] += cex[:, 1:-1, 1:-1] * (
        (hz[:, 1:, 1:-1] - hz[:, :-1, 1:-1]) / dy - (hy[:, 1:-1, 1:] - hy[:, 1:-1, :-1]) / dz
    )
    ey[1:-1, :, 1:-1] += cey[1:-1, :, 1:-1] * (
        (hx[1:-1, :, 1:] - hx[1:-1, :, :-1]) / dz - (hz[1:, :, 1:-1] - hz[:-1, :, 1:-1]) / dx
    )
    ez[1:-1, 1:-1, :] += cez[1:-1, 1:-1, :] * (
        (hy[1:, 1:-1, :] - hy[:-1, 1:-1, :]) / dx - (hx[1:-1, 1:, :] - hx[1:-1, :-1, :]) / dy
    )


# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

@njit(cache=True)
def step_h_numba(ex, ey, ez, hx, hy, hz, chx, chy, chz, dx, dy, dz):
    nxp, ny, nz = hx.shape
    for i in range(nxp):
        for j in range(ny):
            for k in range(nz):
                hx[i, j, k] += chx[i, j, k] * (
                    (ey[i, j, k + 1] - ey[i, j, k]) / dz - (ez[i, j + 1, k] - ez[i, j, k]) / dy
                )
    nx, nyp, nz = hy.shape
    for i in range(nx):
        for j in range(nyp):
            for k in range(nz):
                hy[i, j, k] += chy[i, j, k] * (
                    (ez[i + 1, j, k] - ez[i, j, k]) / dx - (ex[i, j, k + 1] - ex[i, j, k]) / dz
                )
    nx, ny, nzp = hz.shape
    for i in range(nx):
        for j in range(ny):
            for k in range(nzp):
                hz[i, j, k] += chz[i, j, k] * (
                    (ex[i, j + 1, k] - ex[i, j, k]) / dy - (ey[i + 1, j, k] - ey[i, j, k]) / dx
                )


@njit(cache=True)
def step_e_numba(ex, ey, ez, hx, hy, hz, cex, cey, cez, dx, dy, dz):
    nx, nyp, nzp = ex.shape
    for i in range(nx):
        for j in range(1, nyp - 1):
            for k in range(1, nzp - 1):
                ex[i, j, k] += cex[i, j, k] * (
                    (hz[i, j, k] - hz[i, j - 1, k]) / dy - (hy[i, j, k] - hy[i, j, k - 1]) / dz
                )
    nxp, ny, nzp = ey.shape
    for i in range(1, nxp - 1):
        for j in range(ny):
            for k in range(1, nzp - 1):
                ey[i, j, k] += cey[i, j, k] * (
                    (hx[i, j, k] - hx[i, j, k - 1]) / dz - (hz[i, j, k] - hz[i - 1, j, k]) / dx
                )
    nxp, nyp, nz = ez.shape
    for i in range(1, nxp - 1):
        for j in range(1, nyp - 1):
            for k in range(nz):
                ez[i, j, k] += cez[i, j, k] * (
                    (hy[i, j, k] - hy[i - 1, j, k]) / dx - (hx[i, j, k] - hx[i, j - 1, k]) / dy
                )


# ---------------------------------------------------------------------------
# backend selection
# ---------------------------------------------------------------------------

def _select_backend() -> str:
    requested = os.environ.get("QWFDTD_BACKEND", "").strip().lower()
    if requested in ("numba", "numpy"):
        if requested == "numba" and not HAS_NUMBA:
            raise ImportError("QWFDTD_BACKEND=numba but numba is not installed")
        return requested
    return "numba" if HAS_NUMBA else "numpy"


BACKEND = _select_backend()

if BACKEND == "numba":
    step_h_kernel = step_h_numba
    step_e_kernel = step_e_numba
else:
    step_h_kernel = step_h_numpy
    step_e_kernel = step_e_numpy
