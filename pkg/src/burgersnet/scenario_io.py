"""YAML scenario files.

Layout (all keys shown; ``name``, ``description``, ``output_times``,
``nodes`` and ``boundaries`` are optional)::

    name: tripod-rp2-1-1
    description: free text
    params: {v1: -2.0, v2: 2.0, epsilon: 0.0005, cfl: 0.9, T: 0.5}
    output_times: [0.25, 0.5]
    edges:
      - {id: 1, length: 1.0, cells: 1000, u: 1.0}
      - {id: 2, length: 1.0, cells: 1000, u: [[0.0, 0.5, 0.75], [0.5, 1.0, 0.0]]}
    nodes:
      - {id: 1, kind: 1-2, edges: [1, 2, 3]}
    boundaries:
      - {edge: 1, end: left, type: extrapolate}
      - {edge: 2, end: right, type: inflow, value: -0.140625}

``u`` is either one value for the whole edge or a list of ``[x0, x1, value]``
segments.  Node edge lists give the roles in order, in-edges first.  Unknown
keys are rejected.
"""

from __future__ import annotations

from pathlib import Path

import yaml

from .network import Boundary, Edge, KineticParams, Node, Scenario

_TOP = {"name", "description", "params", "output_times", "edges", "nodes", "boundaries"}
_PARAMS = {"v1", "v2", "epsilon", "cfl", "T"}
_EDGE = {"id", "length", "cells", "u"}
_NODE = {"id", "kind", "edges"}
_BOUNDARY = {"edge", "end", "type", "value"}


class ScenarioFormatError(ValueError):
    pass


def _check_keys(where: str, mapping, allowed: set, required: set = frozenset()):
    if not isinstance(mapping, dict):
        raise ScenarioFormatError(f"{where}: expected a mapping, got {type(mapping).__name__}")
    unknown = set(mapping) - allowed
    if unknown:
        raise ScenarioFormatError(f"{where}: unknown keys {sorted(unknown)}; allowed {sorted(allowed)}")
    missing = set(required) - set(mapping)
    if missing:
        raise ScenarioFormatError(f"{where}: missing keys {sorted(missing)}")


def _edge(d) -> Edge:
    _check_keys("edge", d, _EDGE, _EDGE)
    length = float(d["length"])
    u = d["u"]
    if isinstance(u, list):
        segs = []
        for seg in u:
            if not (isinstance(seg, list) and len(seg) == 3):
                raise ScenarioFormatError(f"edge {d['id']}: segments must be [x0, x1, value]")
            segs.append(tuple(float(x) for x in seg))
        initial = tuple(segs)
    else:
        initial = ((0.0, length, float(u)),)
    return Edge(int(d["id"]), length, int(d["cells"]), initial)


def scenario_from_dict(data: dict) -> Scenario:
    _check_keys("scenario", data, _TOP, {"params", "edges"})
    p = data["params"]
    _check_keys("params", p, _PARAMS, {"epsilon", "T"})
    params = KineticParams(float(p.get("v1", -2.0)), float(p.get("v2", 2.0)), float(p["epsilon"]))
    edges = tuple(_edge(d) for d in data["edges"])
    nodes = []
    for d in data.get("nodes") or []:
        _check_keys("node", d, _NODE, _NODE)
        nodes.append(Node(int(d["id"]), str(d["kind"]), tuple(int(e) for e in d["edges"])))
    boundaries = []
    for d in data.get("boundaries") or []:
        _check_keys("boundary", d, _BOUNDARY, {"edge", "end", "type"})
        value = d.get("value")
        boundaries.append(Boundary(int(d["edge"]), str(d["end"]), str(d["type"]),
                                   None if value is None else float(value)))
    return Scenario(
        name=str(data.get("name", "")),
        params=params,
        edges=edges,
        nodes=tuple(nodes),
        boundaries=tuple(boundaries),
        t_final=float(p["T"]),
        cfl=float(p.get("cfl", 0.9)),
        output_times=tuple(float(t) for t in data.get("output_times") or ()),
        description=str(data.get("description", "")),
    )


def scenario_to_dict(s: Scenario) -> dict:
    def edge(e: Edge):
        if len(e.initial) == 1 and e.initial[0][:2] == (0.0, e.length):
            u = e.initial[0][2]
        else:
            u = [list(seg) for seg in e.initial]
        return {"id": e.id, "length": e.length, "cells": e.cells, "u": u}

    def boundary(b: Boundary):
        d = {"edge": b.edge, "end": b.end, "type": b.kind}
        if b.value is not None:
            d["value"] = b.value
        return d

    out = {"name": s.name}
    if s.description:
        out["description"] = s.description
    out["params"] = {"v1": s.params.v1, "v2": s.params.v2, "epsilon": s.params.epsilon,
                     "cfl": s.cfl, "T": s.t_final}
    if s.output_times:
        out["output_times"] = list(s.output_times)
    out["edges"] = [edge(e) for e in s.edges]
    if s.nodes:
        out["nodes"] = [{"id": n.id, "kind": n.kind, "edges": list(n.edges)} for n in s.nodes]
    if s.boundaries:
        out["boundaries"] = [boundary(b) for b in s.boundaries]
    return out


def loads(text: str) -> Scenario:
    data = yaml.safe_load(text)
    if data is None:
        raise ScenarioFormatError("empty scenario file")
    return scenario_from_dict(data)


def dumps(s: Scenario) -> str:
    return yaml.safe_dump(scenario_to_dict(s), sort_keys=False, default_flow_style=None)


def load_scenario(path) -> Scenario:
    return loads(Path(path).read_text())


def save_scenario(s: Scenario, path):
    Path(path).write_text(dumps(s))
