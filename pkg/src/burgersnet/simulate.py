"""Scenario runs, kinetic-vs-Burgers comparison and snapshot output."""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

import numpy as np

from .burgers import BurgersSolver, write_burgers_csv
from .coupling import degenerate_node_check, resolve_node
from .kinetic import KineticSolver, write_kinetic_csv
from .network import DEGENERATE_KINDS, EXTRAPOLATE, LEFT, RIGHT, Scenario, build_grid, validate_scenario

MODELS = ("kinetic", "burgers", "both")
# per-step relative mass-balance residual regarded as a breach
MASS_TOLERANCE = 1e-10
# outermost cells of an extrapolated end should still hold the initial value;
# a breach is reported as a warning since extrapolation lets outgoing waves pass
OUTER_TOLERANCE = 1e-3


class ScenarioError(ValueError):
    pass


@dataclass
class RunReport:
    scenario: str
    model: str
    t_final: float
    margin: float
    l1: dict = field(default_factory=dict)
    # node id -> {"table": ..., "burgers": ..., "kinetic": ...}
    junction_traces: dict = field(default_factory=dict)
    mass_residual: dict = field(default_factory=dict)
    boundary_balance: dict = field(default_factory=dict)
    steps: dict = field(default_factory=dict)
    wall_clock: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    def max_mass_residual(self, model: str) -> float:
        r = self.mass_residual.get(model, [])
        return max(r) if r else 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def compare_fields(u_kinetic, u_burgers, dx: float, margin: float, length: float | None = None) -> float:
    """L1 distance over cells whose centre lies farther than ``margin`` from both ends."""
    a = np.asarray(u_kinetic, dtype=float)
    b = np.asarray(u_burgers, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"grid mismatch: {a.shape} vs {b.shape}")
    n = a.size
    length = n * dx if length is None else length
    x = (np.arange(n) + 0.5) * dx
    keep = (x > margin) & (length - x > margin)
    return float(np.sum(np.abs(a[keep] - b[keep])) * dx)


def probe_index(cells: int, dx: float, end: str, margin: float) -> int:
    """Index of the first cell whose centre is farther than ``margin`` from ``end``."""
    i = int(np.floor(margin / dx - 0.5)) + 1
    i = max(0, min(cells - 1, i))
    while (i + 0.5) * dx <= margin and i < cells - 1:
        i += 1
    return i if end == LEFT else cells - 1 - i


def _mass_scale(fields: dict, dx: dict) -> float:
    return float(sum(np.sum(np.abs(u)) * dx[e] for e, u in fields.items()))


def _preflight(s: Scenario):
    problems = [str(d) for d in validate_scenario(s)]
    for node in s.nodes:
        if node.kind in DEGENERATE_KINDS:
            vals = [val for e in node.edges for _, _, val in s.edge(e).initial]
            problems += degenerate_node_check(node.kind, vals)
    if problems:
        raise ScenarioError("invalid scenario:\n  " + "\n  ".join(problems))


def snapshot_name(model: str, edge: int, t: float) -> str:
    return f"{model}_edge{edge}_t{t:.6f}.csv"


def run_scenario(s: Scenario, model: str = "both", out_dir=None, backend: str | None = None,
                 margin: float | None = None) -> RunReport:
    """Advance the selected model(s) to ``s.t_final`` and collect metrics.

    Snapshots are written at ``s.output_times`` (default: the final time) when
    ``out_dir`` is given, together with ``report.json``.
    """
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}, got {model!r}")
    _preflight(s)
    margin = 50.0 * s.params.epsilon if margin is None else float(margin)
    report = RunReport(s.name, model, s.t_final, margin)
    times = sorted(set(s.output_times) | {s.t_final})
    out = Path(out_dir) if out_dir is not None else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
    grids = {e.id: build_grid(e) for e in s.edges}
    dx = {e: g[1] for e, g in grids.items()}
    closed = not s.boundaries

    def runner(name, solver, fields, write):
        residuals = []

        def on_step(sol, m0, inflow):
            f = fields(sol)
            m1 = float(sum(np.sum(u) * dx[e] for e, u in f.items()))
            scale = max(_mass_scale(f, dx), 1e-300)
            residuals.append(abs(m1 - m0 - inflow) / scale)

        m_start = float(sum(np.sum(u) * dx[e] for e, u in fields(solver).items()))
        t0 = time.perf_counter()
        for t in times:
            solver.advance_to(t, on_step)
            if out is not None:
                for e, (x, _) in grids.items():
                    write(out / snapshot_name(name, e, t), x, e, solver)
        report.wall_clock[name] = time.perf_counter() - t0
        report.steps[name] = solver.steps
        report.mass_residual[name] = residuals
        f = fields(solver)
        m_end = float(sum(np.sum(u) * dx[e] for e, u in f.items()))
        balance = m_end - m_start - solver.boundary_flux
        report.boundary_balance[name] = balance
        worst = max(residuals) if residuals else 0.0
        if worst > MASS_TOLERANCE:
            report.diagnostics.append(f"{name}: per-step mass residual {worst:.3e} exceeds {MASS_TOLERANCE}")
        if closed and abs(m_end - m_start) > MASS_TOLERANCE * max(_mass_scale(f, dx), 1.0):
            report.diagnostics.append(f"{name}: closed network lost mass {m_end - m_start:.3e}")
        _check_outer_ends(s, f, report, name)
        return f

    fields_k = fields_b = None
    if model in ("kinetic", "both"):
        ks = KineticSolver(s, backend=backend)
        fields_k = runner("kinetic", ks, lambda sol: sol.macro(),
                          lambda path, x, e, sol: write_kinetic_csv(path, x, sol.field.edges[e], s.params))
    if model in ("burgers", "both"):
        bs = BurgersSolver(s, backend=backend)
        fields_b = runner("burgers", bs, lambda sol: sol.u,
                          lambda path, x, e, sol: write_burgers_csv(path, x, sol.u[e]))
        final_res = bs.traces()

    for node in s.nodes:
        if node.kind in DEGENERATE_KINDS:
            continue
        ends = node.ends()
        initial = [s.edge(e).initial[-1][2] if end == RIGHT else s.edge(e).initial[0][2] for e, end in ends]
        entry = {"kind": node.kind, "edges": list(node.edges),
                 "table": resolve_node(node.kind, initial, s.params.v2).as_dict()}
        if fields_b is not None:
            entry["burgers"] = final_res[node.id].as_dict()
        if fields_k is not None:
            probes = []
            for e, end in ends:
                i = probe_index(s.edge(e).cells, dx[e], end, margin)
                probes.append(float(fields_k[e][i]))
            entry["kinetic"] = probes
        report.junction_traces[str(node.id)] = entry

    if fields_k is not None and fields_b is not None:
        for e in s.edges:
            report.l1[str(e.id)] = compare_fields(fields_k[e.id], fields_b[e.id], dx[e.id], margin, e.length)

    if out is not None:
        (out / "report.json").write_text(report.to_json())
    return report


def _check_outer_ends(s: Scenario, fields: dict, report: RunReport, name: str):
    """Warn when waves have reached extrapolated outer ends."""
    for b in s.boundaries:
        if b.kind != EXTRAPOLATE:
            continue
        e = s.edge(b.edge)
        u0 = e.initial[0][2] if b.end == LEFT else e.initial[-1][2]
        val = fields[b.edge][0 if b.end == LEFT else -1]
        if abs(val - u0) > OUTER_TOLERANCE:
            report.warnings.append(
                f"{name}: waves reached the extrapolated {b.end} end of edge {b.edge} "
                f"(u = {val:.6g}, initial {u0:.6g})")
