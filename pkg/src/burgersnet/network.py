"""Network topology, grids, parameters and the scenario model.

An edge is the interval ``[0, length]``.  A node attaches to an edge either at
its right end (the edge is oriented *into* the node) or at its left end (the
edge is oriented *out of* the node).  The order of ``Node.edges`` fixes the
roles ``(i, j, k)`` used by the coupling tables: in-edges come first.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

LEFT = "left"
RIGHT = "right"

NODE_KINDS = {
    # kind: (number of in-edges, number of out-edges)
    "1-1": (1, 1),
    "1-2": (1, 2),
    "2-1": (2, 1),
    "3-0": (3, 0),
    "0-3": (0, 3),
}
DEGENERATE_KINDS = ("3-0", "0-3")

EXTRAPOLATE = "extrapolate"
INFLOW = "inflow"


@dataclass(frozen=True)
class KineticParams:
    v1: float = -2.0
    v2: float = 2.0
    epsilon: float = 5e-4

    @property
    def a(self) -> float:
        """Layer coefficient ``-v1 * v2``."""
        return -self.v1 * self.v2

    @property
    def symmetric(self) -> bool:
        return self.v2 == -self.v1

    @property
    def vmax(self) -> float:
        return max(-self.v1, self.v2)


@dataclass(frozen=True)
class Edge:
    id: int
    length: float
    cells: int
    # piecewise-constant initial data as (x0, x1, value) segments
    initial: tuple[tuple[float, float, float], ...]

    @classmethod
    def constant(cls, id: int, value: float, length: float = 1.0, cells: int = 1000) -> "Edge":
        return cls(id, float(length), int(cells), ((0.0, float(length), float(value)),))

    @property
    def dx(self) -> float:
        return self.length / self.cells

    def initial_values(self) -> np.ndarray:
        x, _ = build_grid(self)
        u = np.zeros_like(x)
        for x0, x1, value in self.initial:
            u[(x >= x0) & (x < x1)] = value
        return u


@dataclass(frozen=True)
class Node:
    id: int
    kind: str
    edges: tuple[int, ...]

    @property
    def n_in(self) -> int:
        return NODE_KINDS[self.kind][0]

    def ends(self) -> list[tuple[int, str]]:
        """``(edge id, end)`` per role; in-edges attach at their right end."""
        return [(e, RIGHT if r < self.n_in else LEFT) for r, e in enumerate(self.edges)]


@dataclass(frozen=True)
class Boundary:
    edge: int
    end: str
    kind: str = EXTRAPOLATE
    # incoming kinetic value: f2 at a left end, f1 at a right end
    value: float | None = None


@dataclass(frozen=True)
class Scenario:
    name: str
    params: KineticParams
    edges: tuple[Edge, ...]
    nodes: tuple[Node, ...] = ()
    boundaries: tuple[Boundary, ...] = ()
    t_final: float = 0.5
    cfl: float = 0.9
    output_times: tuple[float, ...] = ()
    description: str = ""

    def edge(self, edge_id: int) -> Edge:
        for e in self.edges:
            if e.id == edge_id:
                return e
        raise KeyError(edge_id)

    def end_attachments(self) -> dict[tuple[int, str], list]:
        """Map each ``(edge, end)`` to the list of nodes/boundaries using it."""
        table: dict[tuple[int, str], list] = {}
        for e in self.edges:
            table[(e.id, LEFT)] = []
            table[(e.id, RIGHT)] = []
        for node in self.nodes:
            if node.kind not in NODE_KINDS:
                continue
            for key in node.ends():
                table.setdefault(key, []).append(node)
        for b in self.boundaries:
            table.setdefault((b.edge, b.end), []).append(b)
        return table

    def replace(self, **changes) -> "Scenario":
        from dataclasses import replace

        return replace(self, **changes)

    def with_overrides(self, epsilon=None, cells=None, t_final=None) -> "Scenario":
        s = self
        if epsilon is not None:
            s = s.replace(params=KineticParams(s.params.v1, s.params.v2, float(epsilon)))
        if cells is not None:
            s = s.replace(edges=tuple(Edge(e.id, e.length, int(cells), e.initial) for e in s.edges))
        if t_final is not None:
            s = s.replace(t_final=float(t_final))
        return s


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str

    def __str__(self) -> str:
        return f"[{self.code}] {self.message}"


def build_grid(edge: Edge) -> tuple[np.ndarray, float]:
    """Cell centres ``(i + 1/2) dx`` and the uniform width ``dx``."""
    if edge.cells < 1 or not edge.length > 0:
        raise ValueError(f"edge {edge.id}: need positive cells and length, got "
                         f"cells={edge.cells}, length={edge.length}")
    dx = edge.length / edge.cells
    return (np.arange(edge.cells) + 0.5) * dx, dx


def validate_scenario(s: Scenario) -> list[Diagnostic]:
    """Return one diagnostic per broken invariant; empty when valid."""
    out: list[Diagnostic] = []
    p = s.params
    if not (p.v1 < 0 < p.v2):
        out.append(Diagnostic("speeds", f"need v1 < 0 < v2, got v1={p.v1}, v2={p.v2}"))
    if not p.epsilon > 0:
        out.append(Diagnostic("epsilon", f"epsilon must be positive, got {p.epsilon}"))
    if not (0 < s.cfl <= 1):
        out.append(Diagnostic("cfl", f"cfl must lie in (0, 1], got {s.cfl}"))
    if not s.t_final > 0:
        out.append(Diagnostic("t_final", f"final time must be positive, got {s.t_final}"))

    ids = [e.id for e in s.edges]
    if len(set(ids)) != len(ids):
        out.append(Diagnostic("edge-ids", f"duplicate edge ids in {ids}"))
    if not s.edges:
        out.append(Diagnostic("edges", "scenario has no edges"))

    umin, umax = np.inf, -np.inf
    for e in s.edges:
        if e.cells < 2:
            out.append(Diagnostic("cells", f"edge {e.id}: cells must be >= 2, got {e.cells}"))
        if not e.length > 0:
            out.append(Diagnostic("length", f"edge {e.id}: length must be positive, got {e.length}"))
            continue
        if not e.initial:
            out.append(Diagnostic("initial", f"edge {e.id}: no initial data"))
            continue
        pos = 0.0
        for x0, x1, value in e.initial:
            if x0 != pos or not x1 > x0:
                out.append(Diagnostic("initial", f"edge {e.id}: segments must tile [0, length] "
                                      f"in order, got ({x0}, {x1}) after {pos}"))
                break
            pos = x1
            umin, umax = min(umin, value), max(umax, value)
        else:
            if pos != e.length:
                out.append(Diagnostic("initial", f"edge {e.id}: segments end at {pos}, "
                                      f"edge length is {e.length}"))

    if np.isfinite(umin) and (p.v1 > 2 * umin or p.v2 < 2 * umax):
        out.append(Diagnostic(
            "subcharacteristic",
            f"need v1 <= 2 min(u) = {2 * umin} and v2 >= 2 max(u) = {2 * umax}; "
            f"got v1={p.v1}, v2={p.v2}"))

    known = set(ids)
    for node in s.nodes:
        if node.kind not in NODE_KINDS:
            out.append(Diagnostic("node-kind", f"node {node.id}: unknown kind {node.kind!r}"))
            continue
        if len(node.edges) != sum(NODE_KINDS[node.kind]):
            out.append(Diagnostic("node-degree", f"node {node.id}: kind {node.kind} needs "
                                  f"{sum(NODE_KINDS[node.kind])} edges, got {len(node.edges)}"))
        for e in node.edges:
            if e not in known:
                out.append(Diagnostic("node-edge", f"node {node.id}: unknown edge {e}"))
        if node.kind in ("1-2", "2-1") and not p.symmetric:
            out.append(Diagnostic("symmetric-speeds",
                                  f"node {node.id}: coupling tables need v2 = -v1"))
        if node.kind in DEGENERATE_KINDS:
            for e in node.edges:
                if e in known and any(val != 0 for _, _, val in s.edge(e).initial):
                    out.append(Diagnostic(
                        "degenerate-node",
                        f"node {node.id} ({node.kind}) admits only the zero state; "
                        f"edge {e} has nonzero initial data"))

    for b in s.boundaries:
        if b.end not in (LEFT, RIGHT):
            out.append(Diagnostic("boundary-end", f"boundary end must be left/right, got {b.end!r}"))
        if b.kind not in (EXTRAPOLATE, INFLOW):
            out.append(Diagnostic("boundary-kind", f"unknown boundary kind {b.kind!r}"))
        if b.kind == INFLOW and b.value is None:
            out.append(Diagnostic("boundary-value", f"edge {b.edge} {b.end}: inflow needs a value"))
        if b.edge not in known:
            out.append(Diagnostic("boundary-edge", f"boundary on unknown edge {b.edge}"))

    for (e, end), users in s.end_attachments().items():
        if e not in known:
            continue
        if len(users) != 1:
            what = "nothing" if not users else f"{len(users)} attachments"
            out.append(Diagnostic("attachment", f"edge {e} {end} end has {what}; "
                                  "need exactly one node or boundary"))

    for t in s.output_times:
        if not 0 <= t <= s.t_final:
            out.append(Diagnostic("output-times", f"output time {t} outside [0, {s.t_final}]"))
    return out
