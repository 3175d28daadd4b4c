"""Godunov scheme for ``u_t + (u^2)_x = 0`` on a network.

Node-adjacent interfaces use the coupling traces ``u_K`` as ghost states;
outer ends use either zero-gradient extrapolation or the trace resolved from a
prescribed kinetic inflow.
"""

from __future__ import annotations

import numpy as np

from .coupling import CouplingResolution, degenerate_node_check, resolve_left_boundary, \
    resolve_right_boundary, resolve_node
from .flux import BURGERS
from .kernels import get_backend
from .network import DEGENERATE_KINDS, INFLOW, LEFT, RIGHT, Scenario, build_grid


def godunov_flux(uL: float, uR: float) -> float:
    return BURGERS.godunov(uL, uR)


def burgers_step(u: np.ndarray, dt: float, dx: float, ghost_left: float, ghost_right: float,
                 cfl: float = 1.0, backend: str | None = None):
    """Conservative update of one edge in place; returns the end fluxes."""
    umax = max(np.max(np.abs(u)), abs(ghost_left), abs(ghost_right))
    if 2.0 * umax * dt > cfl * dx * (1 + 1e-12):
        raise ValueError(f"time step {dt} violates the CFL bound {cfl * dx / (2 * umax)}")
    return get_backend(backend).godunov_step(u, float(ghost_left), float(ghost_right), dt / dx)


def macro_outer_boundary(end: str, u_B: float, inflow: float, v: float) -> float:
    """Trace at an outer end fed by the kinetic datum ``inflow``."""
    if end == LEFT:
        return resolve_left_boundary(inflow, u_B, v).u_K
    if end == RIGHT:
        return resolve_right_boundary(inflow, u_B, v).u_K
    raise ValueError(f"end must be 'left' or 'right', got {end!r}")


class BurgersSolver:
    """Advances the macroscopic field of a scenario with adaptive CFL steps."""

    def __init__(self, scenario: Scenario, backend: str | None = None):
        self.scenario = scenario
        get_backend(backend)
        self.backend = backend
        self.u: dict[int, np.ndarray] = {}
        self.dx: dict[int, float] = {}
        for e in scenario.edges:
            _, dx = build_grid(e)
            self.u[e.id] = np.ascontiguousarray(e.initial_values())
            self.dx[e.id] = dx
        self.ghost = {eid: [0.0, 0.0] for eid in self.u}
        self.resolutions: dict[int, CouplingResolution] = {}
        self.t = 0.0
        self.steps = 0
        self.boundary_flux = 0.0
        self._outer = {(b.edge, b.end): b for b in scenario.boundaries}

    def mass(self) -> float:
        return float(sum(np.sum(u) * self.dx[e] for e, u in self.u.items()))

    def _u_B(self, e: int, end: str) -> float:
        return float(self.u[e][-1] if end == RIGHT else self.u[e][0])

    def fill_ghosts(self):
        v = self.scenario.params.v2
        for node in self.scenario.nodes:
            ends = node.ends()
            u_B = [self._u_B(e, end) for e, end in ends]
            if node.kind in DEGENERATE_KINDS:
                problems = degenerate_node_check(node.kind, u_B)
                if problems:
                    raise ValueError("; ".join(problems))
                u_K = [0.0] * len(ends)
            else:
                res = resolve_node(node.kind, u_B, v)
                self.resolutions[node.id] = res
                u_K = res.u_K
            for (e, end), val in zip(ends, u_K):
                self.ghost[e][1 if end == RIGHT else 0] = val
        for (e, end), b in self._outer.items():
            u_B = self._u_B(e, end)
            if b.kind == INFLOW:
                val = macro_outer_boundary(end, u_B, b.value, v)
            else:
                val = u_B
            self.ghost[e][1 if end == RIGHT else 0] = val

    def max_time_step(self) -> float:
        cfl = self.scenario.cfl
        dt = np.inf
        for e, u in self.u.items():
            umax = max(np.max(np.abs(u)), *map(abs, self.ghost[e]))
            if umax > 0:
                dt = min(dt, cfl * self.dx[e] / (2.0 * umax))
        return dt

    def step(self, t_cap: float = np.inf) -> float:
        """One adaptive step not passing ``t_cap``; returns the outer-boundary inflow."""
        self.fill_ghosts()
        dt = min(self.max_time_step(), t_cap - self.t)
        if not np.isfinite(dt):
            raise ValueError("zero state everywhere: pass a finite t_cap to bound the step")
        inflow = 0.0
        for e, u in self.u.items():
            gl, gr = self.ghost[e]
            left, right = burgers_step(u, dt, self.dx[e], gl, gr, self.scenario.cfl, self.backend)
            if (e, LEFT) in self._outer:
                inflow += dt * left
            if (e, RIGHT) in self._outer:
                inflow -= dt * right
            if not np.isfinite(u).all():
                raise FloatingPointError(f"non-finite Burgers state at t = {self.t + dt}")
        self.t += dt
        self.steps += 1
        self.boundary_flux += inflow
        return inflow

    def advance_to(self, t_target: float, on_step=None):
        while self.t < t_target * (1 - 1e-14):
            m0 = self.mass() if on_step else 0.0
            inflow = self.step(t_target)
            if on_step:
                on_step(self, m0, inflow)
        self.t = max(self.t, t_target)

    def traces(self) -> dict[int, CouplingResolution]:
        """Node resolutions for the current state."""
        self.fill_ghosts()
        return dict(self.resolutions)


def write_burgers_csv(path, x, u):
    np.savetxt(path, np.column_stack([x, u]), delimiter=",", header="x,u", comments="", fmt="%.17g")
