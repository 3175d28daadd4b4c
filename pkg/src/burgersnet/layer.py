"""Closed-form solutions of the half-space layer equation

    a u'(x) = u(x)**2 - C,   x >= 0,

which describes the kinetic layer at a left boundary in the stretched
coordinate ``x / epsilon``.  ``C`` is the (constant) kinetic flux inside the
layer and ``a = -v1 v2``.  A layer at a right boundary, written in the distance
``y`` from that boundary, solves ``-a u'(y) = u**2 - C``; it is the image of a
left layer under ``u -> -u``.

For ``C > 0`` the fixpoints are ``+sqrt(C)`` (unstable) and ``-sqrt(C)``
(stable, attracting ``(-inf, sqrt(C))``).  Above ``sqrt(C)`` the solution
blows up at a finite distance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

UNSTABLE_FIXPOINT = "unstable-fixpoint"
STABLE_FIXPOINT = "stable-fixpoint"
TANH = "tanh-branch"
COTH = "coth-branch"
ZERO_C = "zero-C-branch"
DIVERGENT = "divergent"

_SNAP = 1e-12
_NEG_ROUNDOFF = 1e-14


def clamp_flux_constant(C: float) -> float:
    """Round tiny negative round-off in ``C`` to zero; reject real negatives."""
    if C < 0:
        if C > -_NEG_ROUNDOFF:
            return 0.0
        raise ValueError(f"flux constant must be non-negative, got {C}")
    return C


def artanh(z: float) -> float:
    if not -1 < z < 1:
        raise ValueError(f"artanh needs |z| < 1, got {z}")
    return 0.5 * (math.log1p(z) - math.log1p(-z))


def arcoth(z: float) -> float:
    if not abs(z) > 1:
        raise ValueError(f"arcoth needs |z| > 1, got {z}")
    return artanh(1.0 / z)


@dataclass(frozen=True)
class LayerSolution:
    C: float
    u0: float
    a: float
    branch: str
    asymptotic: float | None
    blowup_x: float | None
    # integration constant: u(x) = s tanh(-s (x + shift) / a), etc.
    shift: float | None
    side: str = "left"

    @property
    def sqrtC(self) -> float:
        return math.sqrt(self.C)


def classify_layer(C: float, u0: float, a: float, side: str = "left") -> LayerSolution:
    """Classify the layer started at ``u(0) = u0``.

    ``side="right"`` classifies the right-boundary layer (distance coordinate),
    using the reflection ``u -> -u``.
    """
    if C < 0:
        raise ValueError(f"no admissible layer for negative flux constant C={C}")
    if not a > 0:
        raise ValueError(f"layer coefficient must be positive, got a={a}")
    if side == "right":
        left = classify_layer(C, -u0, a)
        return LayerSolution(C, u0, a, left.branch,
                             None if left.asymptotic is None else -left.asymptotic,
                             left.blowup_x, left.shift, "right")
    if side != "left":
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    if C == 0:
        if u0 == 0:
            return LayerSolution(C, u0, a, UNSTABLE_FIXPOINT, 0.0, None, None)
        shift = -a / u0
        if u0 < 0:
            return LayerSolution(C, u0, a, ZERO_C, 0.0, None, shift)
        return LayerSolution(C, u0, a, DIVERGENT, None, a / u0, shift)

    s = math.sqrt(C)
    z = u0 / s
    if abs(z - 1) < _SNAP:
        return LayerSolution(C, u0, a, UNSTABLE_FIXPOINT, s, None, None)
    if abs(z + 1) < _SNAP:
        return LayerSolution(C, u0, a, STABLE_FIXPOINT, -s, None, None)
    if abs(z) < 1:
        return LayerSolution(C, u0, a, TANH, -s, None, -(a / s) * artanh(z))
    shift = -(a / s) * arcoth(z)
    if z < -1:
        return LayerSolution(C, u0, a, COTH, -s, None, shift)
    return LayerSolution(C, u0, a, DIVERGENT, None, -shift, shift)


def eval_layer(sol: LayerSolution, x):
    """Closed-form layer value at distance ``x >= 0`` from the boundary."""
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("layer is defined for x >= 0 only")
    if sol.blowup_x is not None and np.any(x >= sol.blowup_x):
        raise ValueError(f"layer diverges at x = {sol.blowup_x}")
    sign = -1.0 if sol.side == "right" else 1.0
    u0 = sign * sol.u0
    if sol.branch in (UNSTABLE_FIXPOINT, STABLE_FIXPOINT):
        val = np.full_like(x, u0)
    elif sol.C == 0:
        # -a / (x + shift), written to stay finite for u0 -> 0
        val = sol.a * u0 / (sol.a - u0 * x)
    else:
        s = sol.sqrtC
        arg = -s * (x + sol.shift) / sol.a
        val = s * np.tanh(arg) if sol.branch == TANH else s / np.tanh(arg)
    val = sign * val
    return float(val) if val.ndim == 0 else val


def layer_derivative(sol: LayerSolution, x):
    """Analytic derivative of :func:`eval_layer` with respect to distance."""
    x = np.asarray(x, dtype=float)
    sign = -1.0 if sol.side == "right" else 1.0
    u0 = sign * sol.u0
    if sol.branch in (UNSTABLE_FIXPOINT, STABLE_FIXPOINT):
        d = np.zeros_like(x)
    elif sol.C == 0:
        d = sol.a * u0 * u0 / (sol.a - u0 * x) ** 2
    else:
        s = sol.sqrtC
        arg = -s * (x + sol.shift) / sol.a
        # sech^2 and csch^2 through exp(-2|arg|), which cannot overflow
        t = np.exp(-2.0 * np.abs(arg))
        if sol.branch == TANH:
            d = -(sol.C / sol.a) * 4.0 * t / (1.0 + t) ** 2
        else:
            d = (sol.C / sol.a) * 4.0 * t / (1.0 - t) ** 2
    d = sign * d
    return float(d) if d.ndim == 0 else d


def layer_residual(sol: LayerSolution, x):
    """``|a u' - (u^2 - C)|`` for a left layer, ``|-a u' - (u^2 - C)|`` for a right one."""
    orient = -1.0 if sol.side == "right" else 1.0
    u = eval_layer(sol, x)
    return np.abs(orient * sol.a * layer_derivative(sol, x) - (np.square(u) - sol.C))


def solve_C_ingoing(f2_in: float, v: float) -> float:
    """Flux constant of the unstable layer fed by an incoming ``f2_in > 0``.

    Solves ``f2_in = (C + v sqrt(C)) / (2 v)`` for ``C > 0`` (speeds ``-v, v``).
    """
    if not f2_in > 0:
        raise ValueError(f"ingoing case needs f2_in > 0, got {f2_in}")
    if not v > 0:
        raise ValueError(f"v must be positive, got {v}")
    return ingoing_trace(f2_in, v) ** 2


def ingoing_trace(f2_in: float, v: float) -> float:
    """``sqrt(C) = (v/2)(-1 + sqrt(1 + 8 f2/v))`` in cancellation-free form."""
    return 4.0 * f2_in / (1.0 + math.sqrt(1.0 + 8.0 * f2_in / v))


def layer_profile(sol: LayerSolution, distance, epsilon: float):
    """Layer values at physical ``distance`` from the boundary (``x / epsilon`` scaling)."""
    return eval_layer(sol, np.asarray(distance, dtype=float) / epsilon)


def write_layer_csv(path, sol: LayerSolution, x, epsilon: float, boundary_x: float = 0.0):
    """Write ``x, y, u`` rows: physical position, stretched distance, layer value."""
    x = np.asarray(x, dtype=float)
    y = np.abs(x - boundary_x) / epsilon
    ok = np.ones_like(y, dtype=bool) if sol.blowup_x is None else y < sol.blowup_x
    u = np.full_like(y, np.nan)
    u[ok] = eval_layer(sol, y[ok])
    np.savetxt(path, np.column_stack([x, y, u]), delimiter=",", header="x,y,u",
               comments="", fmt="%.17g")
