"""Two-velocity relaxation model on a network.

    d_t f1 + v1 d_x f1 = (M1(u) - f1) / eps
    d_t f2 + v2 d_x f2 = (M2(u) - f2) / eps,      u = f1 + f2

Each step fills ghost values from the node conditions and outer boundaries,
then applies first-order upwind transport and the exact implicit relaxation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .flux import BURGERS, ConvexFlux
from .kernels import _kernels_py, get_backend
from .network import DEGENERATE_KINDS, INFLOW, LEFT, RIGHT, Boundary, KineticParams, Scenario, build_grid


def equilibrium(u, params: KineticParams, flux: ConvexFlux = BURGERS):
    """Maxwellian ``(M1, M2)`` with ``M1 + M2 = u`` and ``v1 M1 + v2 M2 = F(u)``."""
    v1, v2 = params.v1, params.v2
    F = flux.F(u)
    return (v2 * u - F) / (v2 - v1), (F - v1 * u) / (v2 - v1)


def moments(f1, f2, params: KineticParams):
    """``(u, uhat) = (f1 + f2, v1 f1 + v2 f2)``."""
    return f1 + f2, params.v1 * f1 + params.v2 * f2


def from_moments(u, uhat, params: KineticParams):
    v1, v2 = params.v1, params.v2
    return (v2 * u - uhat) / (v2 - v1), (uhat - v1 * u) / (v2 - v1)


@dataclass
class KineticEdge:
    f1: np.ndarray
    f2: np.ndarray
    dx: float
    # incoming values: f2 entering at x = 0, f1 entering at x = length
    ghost_f2: float = 0.0
    ghost_f1: float = 0.0

    @property
    def u(self) -> np.ndarray:
        return self.f1 + self.f2

    def copy(self) -> "KineticEdge":
        return KineticEdge(self.f1.copy(), self.f2.copy(), self.dx, self.ghost_f2, self.ghost_f1)


@dataclass
class KineticField:
    params: KineticParams
    edges: dict[int, KineticEdge] = field(default_factory=dict)

    def copy(self) -> "KineticField":
        return KineticField(self.params, {e: s.copy() for e, s in self.edges.items()})

    def mass(self) -> float:
        return float(sum(np.sum(s.u) * s.dx for s in self.edges.values()))

    def is_finite(self) -> bool:
        return all(np.isfinite(s.f1).all() and np.isfinite(s.f2).all() for s in self.edges.values())


def max_time_step(field: KineticField, cfl: float) -> float:
    dx = min(s.dx for s in field.edges.values())
    return cfl * dx / field.params.vmax


def _check_cfl(field: KineticField, dt: float, cfl: float = 1.0):
    limit = max_time_step(field, cfl)
    if dt > limit * (1 + 1e-12):
        raise ValueError(f"time step {dt} violates the CFL bound {limit}")


def transport_step(field: KineticField, dt: float, cfl: float = 1.0) -> KineticField:
    """First-order upwind transport using the stored ghost values."""
    _check_cfl(field, dt, cfl)
    v1, v2 = field.params.v1, field.params.v2
    out = field.copy()
    for s in out.edges.values():
        c1, c2 = -v1 * dt / s.dx, v2 * dt / s.dx
        f1, f2 = s.f1.copy(), s.f2.copy()
        s.f1 = f1 + c1 * (np.append(f1[1:], s.ghost_f1) - f1)
        s.f2 = f2 - c2 * (f2 - np.insert(f2[:-1], 0, s.ghost_f2))
    return out


def relax_step(field: KineticField, dt: float, flux: ConvexFlux = BURGERS) -> KineticField:
    """Implicit Euler for the source; exact since relaxation leaves ``u`` unchanged."""
    eps = field.params.epsilon
    if not eps > 0:
        raise ValueError(f"epsilon must be positive, got {eps}")
    k = dt / eps
    out = field.copy()
    for s in out.edges.values():
        M1, M2 = equilibrium(s.u, field.params, flux)
        s.f1 = (s.f1 + k * M1) / (1 + k)
        s.f2 = (s.f2 + k * M2) / (1 + k)
    return out


def kinetic_node_fluxes(kind: str, traces):
    """Incoming kinetic values per role from the outgoing ``traces``.

    ``traces[r]`` is f2 at the right end of an in-edge and f1 at the left end
    of an out-edge; the result holds f1 for in-edges and f2 for out-edges.
    """
    if kind == "1-1":
        f2i, f1j = traces
        return (f1j, f2i)
    if kind == "1-2":
        f2i, f1j, f1k = traces
        return (0.5 * (f1j + f1k), 0.5 * (f2i + f1k), 0.5 * (f2i + f1j))
    if kind == "2-1":
        f2i, f2j, f1k = traces
        return (0.5 * (f2j + f1k), 0.5 * (f2i + f1k), 0.5 * (f2i + f2j))
    if kind in DEGENERATE_KINDS:
        raise ValueError(f"{kind} nodes carry only the zero state and have no kinetic coupling")
    raise ValueError(f"unknown node kind {kind!r}")


def kinetic_outer_boundary(boundary: Boundary, edge: KineticEdge) -> float:
    """Incoming ghost value at an outer end: the prescribed datum or a copy."""
    if boundary.kind == INFLOW:
        return float(boundary.value)
    return float(edge.f2[0] if boundary.end == LEFT else edge.f1[-1])


def initial_field(s: Scenario, flux: ConvexFlux = BURGERS) -> KineticField:
    """Equilibrium data for the scenario's initial ``u``."""
    edges = {}
    for e in s.edges:
        _, dx = build_grid(e)
        M1, M2 = equilibrium(e.initial_values(), s.params, flux)
        edges[e.id] = KineticEdge(np.ascontiguousarray(M1), np.ascontiguousarray(M2), dx)
    return KineticField(s.params, edges)


class KineticSolver:
    """Advances the kinetic field of a scenario.

    ``boundary_flux`` accumulates ``int (flux in) dt`` over all outer ends so
    that ``mass(t) - mass(0)`` can be checked against it.
    """

    def __init__(self, scenario: Scenario, backend: str | None = None, flux: ConvexFlux = BURGERS):
        self.scenario = scenario
        self.params = scenario.params
        self.flux = flux
        self.kernels = get_backend(backend) if flux is BURGERS else _kernels_py
        self.field = initial_field(scenario, flux)
        self.t = 0.0
        self.steps = 0
        self.boundary_flux = 0.0
        self.dt = max_time_step(self.field, scenario.cfl)
        self._outer = {(b.edge, b.end): b for b in scenario.boundaries}

    def fill_ghosts(self):
        edges = self.field.edges
        for node in self.scenario.nodes:
            ends = node.ends()
            if node.kind in DEGENERATE_KINDS:
                incoming = [0.0] * len(ends)
            else:
                traces = [edges[e].f2[-1] if end == RIGHT else edges[e].f1[0] for e, end in ends]
                incoming = kinetic_node_fluxes(node.kind, traces)
            for (e, end), val in zip(ends, incoming):
                if end == RIGHT:
                    edges[e].ghost_f1 = float(val)
                else:
                    edges[e].ghost_f2 = float(val)
        for (e, end), b in self._outer.items():
            val = kinetic_outer_boundary(b, edges[e])
            if end == LEFT:
                edges[e].ghost_f2 = val
            else:
                edges[e].ghost_f1 = val

    def step(self, dt: float | None = None) -> float:
        """One step; returns the net outer-boundary inflow of mass."""
        dt = self.dt if dt is None else dt
        _check_cfl(self.field, dt, self.scenario.cfl)
        self.fill_ghosts()
        p = self.params
        inflow = 0.0
        for eid, s in self.field.edges.items():
            if self.kernels is _kernels_py:
                left, right = _kernels_py.kinetic_step(s.f1, s.f2, s.ghost_f2, s.ghost_f1, dt, s.dx,
                                                       p.epsilon, p.v1, p.v2, self.flux)
            else:
                left, right = self.kernels.kinetic_step(s.f1, s.f2, s.ghost_f2, s.ghost_f1, dt, s.dx,
                                                        p.epsilon, p.v1, p.v2)
            if (eid, LEFT) in self._outer:
                inflow += dt * left
            if (eid, RIGHT) in self._outer:
                inflow -= dt * right
        if not self.field.is_finite():
            raise FloatingPointError(f"non-finite kinetic state at t = {self.t + dt}")
        self.t += dt
        self.steps += 1
        self.boundary_flux += inflow
        return inflow

    def advance_to(self, t_target: float, on_step=None):
        while self.t < t_target * (1 - 1e-14):
            dt = min(self.dt, t_target - self.t)
            m0 = self.field.mass() if on_step else 0.0
            inflow = self.step(dt)
            if on_step:
                on_step(self, m0, inflow)
        self.t = max(self.t, t_target)

    def macro(self) -> dict[int, np.ndarray]:
        return {e: s.u.copy() for e, s in self.field.edges.items()}


def write_kinetic_csv(path, x, edge: KineticEdge, params: KineticParams):
    u, uhat = moments(edge.f1, edge.f2, params)
    np.savetxt(path, np.column_stack([x, edge.f1, edge.f2, u, uhat]), delimiter=",",
               header="x,f1,f2,u,uhat", comments="", fmt="%.17g")
