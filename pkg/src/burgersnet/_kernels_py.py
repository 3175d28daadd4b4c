"""NumPy implementation of the per-edge kernels; same contract as ``_kernels``."""

from __future__ import annotations

import numpy as np

from .flux import BURGERS


def kinetic_step(f1, f2, ghost_f2, ghost_f1, dt, dx, epsilon, v1, v2, flux=BURGERS):
    left = v1 * f1[0] + v2 * ghost_f2
    right = v1 * ghost_f1 + v2 * f2[-1]
    c1 = -v1 * dt / dx
    c2 = v2 * dt / dx
    a1 = f1 + c1 * (np.append(f1[1:], ghost_f1) - f1)
    a2 = f2 - c2 * (f2 - np.insert(f2[:-1], 0, ghost_f2))
    k = dt / epsilon
    u = a1 + a2
    F = flux.F(u)
    inv = 1.0 / (v2 - v1)
    f1[:] = (a1 + k * (v2 * u - F) * inv) / (1.0 + k)
    f2[:] = (a2 + k * (F - v1 * u) * inv) / (1.0 + k)
    return float(left), float(right)


def godunov_step(u, ghost_left, ghost_right, dt_dx, flux=BURGERS):
    ext = np.concatenate(([ghost_left], u, [ghost_right]))
    G = flux.godunov_array(ext[:-1], ext[1:])
    u -= dt_dx * np.diff(G)
    return float(G[0]), float(G[-1])
