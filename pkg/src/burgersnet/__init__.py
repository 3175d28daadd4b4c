"""Kinetic two-velocity relaxation and Burgers solvers on networks, with
macroscopic coupling conditions obtained from kinetic layer analysis."""

from .coupling import (
    CouplingResolution,
    HalfRiemannSet,
    couple_1_1,
    couple_1_2,
    couple_2_1,
    degenerate_node_check,
    half_riemann_contains,
    resolve_left_boundary,
    resolve_node,
    resolve_right_boundary,
)
from .kernels import BACKEND
from .layer import LayerSolution, classify_layer, eval_layer, solve_C_ingoing
from .network import Boundary, Edge, KineticParams, Node, Scenario, build_grid, validate_scenario

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Boundary",
    "CouplingResolution",
    "Edge",
    "HalfRiemannSet",
    "KineticParams",
    "LayerSolution",
    "Node",
    "Scenario",
    "build_grid",
    "classify_layer",
    "couple_1_1",
    "couple_1_2",
    "couple_2_1",
    "degenerate_node_check",
    "eval_layer",
    "half_riemann_contains",
    "resolve_left_boundary",
    "resolve_node",
    "resolve_right_boundary",
    "solve_C_ingoing",
    "validate_scenario",
]
