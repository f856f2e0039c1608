import os
import subprocess
import sys

import numpy as np

from qwfdtd.grid import MaterialRegion, courant_dt, new_grid, set_material
from qwfdtd.kernels import (
    step_e_numba,
    step_e_numpy,
    step_h_numba,
    step_h_numpy,
)


def _random_grid(seed=7):
    rng = np.random.default_rng(seed)
    g = new_grid(18, 11, 13, 1e-8, 1.3e-8, 0.8e-8)
    set_material(g, MaterialRegion((3, 2, 2), (14, 8, 9), 2.37))
    for name in ("ex", "ey", "ez", "hx", "hy", "hz"):
        getattr(g, name)[:] = rng.standard_normal(getattr(g, name).shape)
    return g


def _steps(g, step_h_fn, step_e_fn, n):
    dt = courant_dt(g, 0.9)
    for _ in range(n):
        step_h_fn(
            g.ex, g.ey, g.ez, g.hx, g.hy, g.hz,
            dt / g.mux, dt / g.muy, dt / g.muz, g.dx, g.dy, g.dz,
        )
        step_e_fn(
            g.ex, g.ey, g.ez, g.hx, g.hy, g.hz,
            dt / g.epsx, dt / g.epsy, dt / g.epsz, g.dx, g.dy, g.dz,
        )


def test_numba_and_numpy_kernels_bitwise_equal():
    g1 = _random_grid()
    g2 = _random_grid()
    _steps(g1, step_h_numba, step_e_numba, 40)
    _steps(g2, step_h_numpy, step_e_numpy, 40)
    for name in ("ex", "ey", "ez", "hx", "hy", "hz"):
        assert np.array_equal(getattr(g1, name), getattr(g2, name)), name


def test_e_step_leaves_boundary_tangentials():
    g = _random_grid(seed=11)
    faces = [
        (g.ex, 1, 0), (g.ex, 1, -1), (g.ex, 2, 0), (g.ex, 2, -1),
        (g.ey, 0, 0), (g.ey, 0, -1), (g.ey, 2, 0), (g.ey, 2, -1),
        (g.ez, 0, 0), (g.ez, 0, -1), (g.ez, 1, 0), (g.ez, 1, -1),
    ]

    def face(a, axis, idx):
        return a.take(idx if idx >= 0 else a.shape[axis] - 1, axis=axis)

    before = [face(a, axis, idx).copy() for a, axis, idx in faces]
    dt = courant_dt(g, 0.9)
    step_e_numpy(
        g.ex, g.ey, g.ez, g.hx, g.hy, g.hz,
        dt / g.epsx, dt / g.epsy, dt / g.epsz, g.dx, g.dy, g.dz,
    )
    for (a, axis, idx), saved in zip(faces, before):
        assert np.array_equal(face(a, axis, idx), saved)


def test_backend_env_flag_selects_numpy():
    code = "import qwfdtd.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, QWFDTD_BACKEND="numpy")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "numpy"
    env = dict(os.environ, QWFDTD_BACKEND="numba")
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "numba"
