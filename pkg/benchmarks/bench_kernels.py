"""Benchmark the numba field-update kernels against the numpy fallback.

Times full H+E update sweeps on the default scenario grid (110x29x39
cells).  The numba path is warmed up first so JIT compilation is not
counted.

Usage: python benchmarks/bench_kernels.py [--steps N] [--nx NX]
"""

import argparse
from timeit import default_timer as timer

import numpy as np

from qwfdtd.grid import MaterialRegion, courant_dt, new_grid, set_material
from qwfdtd.kernels import (
    HAS_NUMBA,
    step_e_numba,
    step_e_numpy,
    step_h_numba,
    step_h_numpy,
)


def scenario_grid(nx, ny, nz):
    g = new_grid(nx, ny, nz, 1e-8, 1e-8, 1e-8)
    set_material(
        g,
        MaterialRegion(
            (10, 10, 10), (nx - 11, ny - 11, nz - 11), 2.37
        ),
    )
    # a nonzero field so the sweep touches realistic data
    rng = np.random.default_rng(0)
    g.ez[:] = rng.standard_normal(g.ez.shape)
    return g


def time_backend(step_h_fn, step_e_fn, grid, steps):
    dt = courant_dt(grid, 0.9)
    chx, chy, chz = dt / grid.mux, dt / grid.muy, dt / grid.muz
    cex, cey, cez = dt / grid.epsx, dt / grid.epsy, dt / grid.epsz
    start = timer()
    for _ in range(steps):
        step_h_fn(
            grid.ex, grid.ey, grid.ez, grid.hx, grid.hy, grid.hz,
            chx, chy, chz, grid.dx, grid.dy, grid.dz,
        )
        step_e_fn(
            grid.ex, grid.ey, grid.ez, grid.hx, grid.hy, grid.hz,
            cex, cey, cez, grid.dx, grid.dy, grid.dz,
        )
    return timer() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=200)
    parser.add_argument("--nx", type=int, default=110)
    parser.add_argument("--ny", type=int, default=29)
    parser.add_argument("--nz", type=int, default=39)
    args = parser.parse_args()

    cells = args.nx * args.ny * args.nz
    print(f"grid {args.nx}x{args.ny}x{args.nz} = {cells} cells, {args.steps} steps")

    t_numpy = time_backend(step_h_numpy, step_e_numpy, scenario_grid(args.nx, args.ny, args.nz), args.steps)
    rate_numpy = cells * args.steps / t_numpy / 1e6
    print(f"numpy : {t_numpy:8.3f} s   {rate_numpy:8.1f} Mcell-steps/s")

    if not HAS_NUMBA:
        print("numba : not installed")
        return

    warm = scenario_grid(args.nx, args.ny, args.nz)
    time_backend(step_h_numba, step_e_numba, warm, 1)  # JIT warm-up
    t_numba = time_backend(step_h_numba, step_e_numba, scenario_grid(args.nx, args.ny, args.nz), args.steps)
    rate_numba = cells * args.steps / t_numba / 1e6
    print(f"numba : {t_numba:8.3f} s   {rate_numba:8.1f} Mcell-steps/s")
    print(f"speedup: {t_numpy / t_numba:.2f}x")


if __name__ == "__main__":
    main()
