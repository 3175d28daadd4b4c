"""The packaged reproduction scenarios and a parallel suite runner."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from .network import EXTRAPOLATE, INFLOW, LEFT, RIGHT, Boundary, Edge, KineticParams, Node, Scenario
from .scenario_io import dumps, loads

PARAMS = KineticParams(-2.0, 2.0, 5e-4)
CELLS = 1000
T_FINAL = 0.5

# (label, u1, u2, u3) with edge 1 into the node and edges 2, 3 out of it
TRIPOD_1_2 = (
    ("rp1-1-1", -1.0, 0.75, 0.5),
    ("rp1-1-2", -1.0, 0.75, -0.5),
    ("rp2-1-1", 1.0, 0.75, 0.5),
    ("rp1-2-2", -1.0, -0.75, -0.5),
    ("rp2-1-2", 0.6, 0.75, -0.5),
    ("rp2-2-2", 0.8, -0.75, -0.5),
)
# edges 1, 2 into the node and edge 3 out of it
TRIPOD_2_1 = (
    ("rp1-1-1", -1.0, -0.75, 0.5),
    ("rp1-1-2", -1.0, -0.75, -0.5),
    ("rp2-1-1", 1.0, -0.75, 0.5),
    ("rp1-2-2", -1.0, 0.5, -0.6),
    ("rp2-2-1", 0.5, 0.4, 0.75),
    ("rp2-2-2", 0.5, 0.4, -0.3),
)


def boundary_layer_scenario(epsilon: float = PARAMS.epsilon, cells: int = CELLS) -> Scenario:
    return Scenario(
        name="boundary-layer",
        params=KineticParams(PARAMS.v1, PARAMS.v2, epsilon),
        edges=(Edge.constant(1, 0.5, cells=cells),),
        boundaries=(Boundary(1, LEFT, INFLOW, -0.25), Boundary(1, RIGHT, INFLOW, -9.0 / 64.0)),
        t_final=T_FINAL,
        description="single edge, u = 0.5, inflow f2 = -1/4 on the left and f1 = -9/64 on the right",
    )


def tripod_scenario(kind: str, values, name: str = "", epsilon: float = PARAMS.epsilon,
                    cells: int = CELLS) -> Scenario:
    """Three unit edges joined at one node; free ends extrapolate."""
    if kind not in ("1-2", "2-1"):
        raise ValueError(f"tripod kind must be 1-2 or 2-1, got {kind!r}")
    n_in = 1 if kind == "1-2" else 2
    edges = tuple(Edge.constant(r + 1, float(u), cells=cells) for r, u in enumerate(values))
    # free end: left end for in-edges, right end for out-edges
    boundaries = tuple(Boundary(r + 1, LEFT if r < n_in else RIGHT, EXTRAPOLATE) for r in range(3))
    return Scenario(
        name=name or f"tripod-{kind}",
        params=KineticParams(PARAMS.v1, PARAMS.v2, epsilon),
        edges=edges,
        nodes=(Node(1, kind, (1, 2, 3)),),
        boundaries=boundaries,
        t_final=T_FINAL,
        description=f"{kind} node, u = {tuple(values)}",
    )


def build_suite() -> list[Scenario]:
    out = [boundary_layer_scenario()]
    out += [tripod_scenario("1-2", v, f"tripod-1-2-{label}") for label, *v in TRIPOD_1_2]
    out += [tripod_scenario("2-1", v, f"tripod-2-1-{label}") for label, *v in TRIPOD_2_1]
    return out


def _scenario_dir():
    return resources.files("burgersnet") / "scenarios"


def scenario_suite() -> list[Scenario]:
    """The 13 packaged scenarios, read from the shipped YAML files."""
    files = sorted(p for p in _scenario_dir().iterdir() if p.name.endswith(".yaml"))
    return [loads(p.read_text()) for p in files]


def write_suite_files(directory):
    """Regenerate the packaged YAML files (ordered by a numeric prefix)."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for n, s in enumerate(build_suite()):
        (directory / f"{n:02d}-{s.name}.yaml").write_text(dumps(s))


def _run_one(args):
    from .simulate import run_scenario

    s, out, model, backend = args
    sub = None if out is None else Path(out) / s.name
    return run_scenario(s, model, sub, backend)


def run_suite(out_dir=None, scenarios=None, model: str = "both", workers: int | None = None,
              backend: str | None = None):
    """Run scenarios in parallel processes; reports come back in input order."""
    scenarios = scenario_suite() if scenarios is None else list(scenarios)
    jobs = [(s, out_dir, model, backend) for s in scenarios]
    workers = workers or os.cpu_count() or 1
    if workers == 1:
        return [_run_one(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_one, jobs))
