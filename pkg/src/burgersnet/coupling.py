"""Macroscopic boundary and junction conditions for ``u_t + (u^2)_x = 0``.

Every resolution returns, per attached edge, the trace ``u_K`` that is imposed
as ghost state for the Godunov scheme, the flux constant ``C`` carried by the
kinetic layer (``C = u_K**2``) and, where it is determined, the foot value
``u0`` of that layer at the node.

Conventions.  An edge whose *left* end touches the node or boundary (an
out-edge) sees a left half-Riemann problem; an in-edge sees a right one.
``u_B`` is the macroscopic state in the cell next to the node.  A vanishing
``u_B`` is sorted into the RP1 branch on both sides.  On a switching surface
the first listed case with a weak inequality wins; neighbouring cases agree
there up to a stationary shock (``u_K = -u_B``), i.e. in the flux.

All node tables assume symmetric kinetic speeds ``v1 = -v2 = -v``.  Traces and
switching conditions do not depend on ``v``; layer foot values do.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .network import DEGENERATE_KINDS, LEFT, RIGHT

SQRT2 = math.sqrt(2.0)
INV_SQRT2 = 1.0 / SQRT2


@dataclass(frozen=True)
class HalfRiemannSet:
    """States ``u_K`` reachable from ``u_B`` with waves leaving the domain.

    left,  u_B >= 0:  [0, inf)
    left,  u_B <  0:  {u_B} U [-u_B, inf)
    right, u_B <= 0:  (-inf, 0]
    right, u_B >  0:  (-inf, -u_B] U {u_B}
    """

    side: str
    u_B: float

    @property
    def label(self) -> str:
        return "RP1" if rp1(self.side, self.u_B) else "RP2"


def rp1(side: str, u_B: float) -> bool:
    return u_B >= 0 if side == LEFT else u_B <= 0


def half_riemann_contains(hr: HalfRiemannSet, u_K: float) -> bool:
    u_B = hr.u_B
    if hr.side == LEFT:
        return u_K >= 0 if u_B >= 0 else (u_K == u_B or u_K >= -u_B)
    if hr.side == RIGHT:
        return u_K <= 0 if u_B <= 0 else (u_K == u_B or u_K <= -u_B)
    raise ValueError(f"side must be 'left' or 'right', got {hr.side!r}")


@dataclass(frozen=True)
class BoundaryResolution:
    u_K: float
    outgoing: float  # f1 at a left end, f2 at a right end
    case: str
    C: float
    u0: float


@dataclass(frozen=True)
class CouplingResolution:
    kind: str
    case: str
    subcase: str
    u_B: tuple[float, ...]
    u_K: tuple[float, ...]
    C: tuple[float, ...]
    u0: tuple[float | None, ...]

    @property
    def n_in(self) -> int:
        return {"1-1": 1, "1-2": 1, "2-1": 2}[self.kind]

    @property
    def sides(self) -> tuple[str, ...]:
        return tuple(RIGHT if r < self.n_in else LEFT for r in range(len(self.u_B)))

    @property
    def mass_balance(self) -> float:
        """Flux into the node minus flux out of it."""
        return sum(self.C[: self.n_in]) - sum(self.C[self.n_in:])

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "case": self.case,
            "subcase": self.subcase,
            "u_B": list(self.u_B),
            "u_K": list(self.u_K),
            "C": list(self.C),
            "u0": list(self.u0),
            "mass_balance": self.mass_balance,
        }


# ----------------------------------------------------------------------------
# outer boundaries


def resolve_left_boundary(f2_in: float, u_B: float, v: float) -> BoundaryResolution:
    """Trace at a left boundary fed by the kinetic inflow ``f2_in``."""
    if not v > 0:
        raise ValueError(f"v must be positive, got {v}")
    threshold = 0.5 * (u_B * u_B / v - u_B)
    if (u_B >= 0 and f2_in > 0) or (u_B < 0 and f2_in >= threshold):
        u_K = 4.0 * f2_in / (1.0 + math.sqrt(1.0 + 8.0 * f2_in / v))
        return BoundaryResolution(u_K, u_K - f2_in, "ingoing", u_K * u_K, u_K)
    if u_B >= 0:
        # transsonic: zero-flux layer from u0 = 2 f2 < 0 up to 0
        return BoundaryResolution(0.0, f2_in, "transsonic", 0.0, 2.0 * f2_in)
    f1 = f2_in - u_B * u_B / v
    return BoundaryResolution(u_B, f1, "outgoing", u_B * u_B, f1 + f2_in)


def resolve_right_boundary(f1_in: float, u_B: float, v: float) -> BoundaryResolution:
    """Trace at a right boundary fed by the kinetic inflow ``f1_in``."""
    if not v > 0:
        raise ValueError(f"v must be positive, got {v}")
    threshold = -u_B * u_B / (2.0 * v) - 0.5 * u_B
    if (u_B <= 0 and f1_in < 0) or (u_B > 0 and f1_in <= threshold):
        u_K = 4.0 * f1_in / (1.0 + math.sqrt(1.0 - 8.0 * f1_in / v))
        return BoundaryResolution(u_K, u_K - f1_in, "ingoing", u_K * u_K, u_K)
    if u_B <= 0:
        return BoundaryResolution(0.0, f1_in, "transsonic", 0.0, 2.0 * f1_in)
    f2 = f1_in + u_B * u_B / v
    return BoundaryResolution(u_B, f2, "outgoing", u_B * u_B, f1_in + f2)


# ----------------------------------------------------------------------------
# nodes


def couple_1_1(uBi: float, uBj: float) -> CouplingResolution:
    """Edge ``i`` into the node, ``j`` out: the Burgers Riemann solution at x = 0."""
    uB = (uBi, uBj)
    if uBi <= 0 and uBj >= 0:
        return CouplingResolution("1-1", "RP1-1", "", uB, (0.0, 0.0), (0.0, 0.0), (0.0, 0.0))
    if uBi <= 0:
        C = uBj * uBj
        return CouplingResolution("1-1", "RP1-2", "", uB, (uBj, uBj), (C, C), (uBj, uBj))
    if uBj >= 0:
        C = uBi * uBi
        return CouplingResolution("1-1", "RP2-1", "", uB, (uBi, uBi), (C, C), (uBi, uBi))
    if uBi == -uBj:
        # stationary shock sitting on the node
        C = uBi * uBi
        return CouplingResolution("1-1", "RP2-2", "SS", uB, (uBi, uBj), (C, C), (None, None))
    if uBi > -uBj:
        C = uBi * uBi
        return CouplingResolution("1-1", "RP2-2", "SU", uB, (uBi, uBi), (C, C), (uBi, uBi))
    C = uBj * uBj
    return CouplingResolution("1-1", "RP2-2", "US", uB, (uBj, uBj), (C, C), (uBj, uBj))


def _split_even(i: float, v: float):
    """In-flow ``i > 0`` split evenly into both out-edges (1-2, layer pattern SUU)."""
    w = INV_SQRT2 * i
    C = i * i
    return ((i, w, w), (C, 0.5 * C, 0.5 * C), (C / (2.0 * v) + w, w, w))


def couple_1_2(uBi: float, uBj: float, uBk: float, v: float = 2.0) -> CouplingResolution:
    """Edge ``i`` into the node, ``j`` and ``k`` out of it."""
    if not v > 0:
        raise ValueError(f"v must be positive, got {v}")
    i, j, k = uBi, uBj, uBk
    uB = (i, j, k)
    label = "RP%d-%d-%d" % (1 if i <= 0 else 2, 1 if j >= 0 else 2, 1 if k >= 0 else 2)
    v3 = 3.0 * v

    def res(sub, uK, C, u0):
        return CouplingResolution("1-2", label, sub, uB, tuple(uK), tuple(C), tuple(u0))

    if label == "RP1-1-1":
        return res("SSS", (0.0, 0.0, 0.0), (0.0, 0.0, 0.0), (0.0, 0.0, 0.0))
    if label == "RP1-1-2":
        kk = k * k
        return res("USS", (k, 0.0, k), (kk, 0.0, kk), (k, -kk / v3 + k, -2 * kk / v3 + k))
    if label == "RP1-2-1":
        jj = j * j
        return res("USS", (j, j, 0.0), (jj, jj, 0.0), (j, -2 * jj / v3 + j, -jj / v3 + j))
    if label == "RP2-1-1":
        return res("SUU", *_split_even(i, v))
    if label == "RP1-2-2":
        jj, kk = j * j, k * k
        r = math.sqrt(jj + kk)
        return res("USS", (-r, j, k), (jj + kk, jj, kk),
                   (-r, -(2 * jj + kk) / v3 - r, -(jj + 2 * kk) / v3 - r))

    ii = i * i
    if label == "RP2-1-2":
        if i >= -SQRT2 * k:
            return res("SUU", *_split_even(i, v))
        kk = k * k
        if i >= -k:
            s = math.sqrt(ii - kk)
            return res("SUS", (i, s, k), (ii, ii - kk, kk),
                       ((2 * ii - kk) / v3 + s, s, (ii - 2 * kk) / v3 + s))
        return res("USS", (k, 0.0, k), (kk, 0.0, kk), (k, -kk / v3 + k, -2 * kk / v3 + k))
    if label == "RP2-2-1":
        if i >= -SQRT2 * j:
            return res("SUU", *_split_even(i, v))
        jj = j * j
        if i >= -j:
            s = math.sqrt(ii - jj)
            return res("SSU", (i, j, s), (ii, jj, ii - jj),
                       ((2 * ii - jj) / v3 + s, (ii - 2 * jj) / v3 + s, s))
        return res("USS", (j, j, 0.0), (jj, jj, 0.0), (j, -2 * jj / v3 + j, -jj / v3 + j))

    # RP2-2-2
    jj, kk = j * j, k * k
    r = math.sqrt(jj + kk)
    if i >= -SQRT2 * j and i >= -SQRT2 * k:
        return res("SUU", *_split_even(i, v))
    if -SQRT2 * j > i >= r:
        s = math.sqrt(ii - jj)
        return res("SSU", (i, j, s), (ii, jj, ii - jj),
                   ((2 * ii - jj) / v3 + s, (ii - 2 * jj) / v3 + s, s))
    if -SQRT2 * k > i >= r:
        s = math.sqrt(ii - kk)
        return res("SUS", (i, s, k), (ii, ii - kk, kk),
                   ((2 * ii - kk) / v3 + s, s, (ii - 2 * kk) / v3 + s))
    return res("USS", (-r, j, k), (jj + kk, jj, kk),
               (-r, -(2 * jj + kk) / v3 - r, -(jj + 2 * kk) / v3 - r))


def _merge_even(c: float, v: float):
    """Out-flow ``c < 0`` fed evenly by both in-edges (2-1, layer pattern UUS)."""
    w = INV_SQRT2 * c
    C = c * c
    return ((w, w, c), (0.5 * C, 0.5 * C, C), (w, w, -C / (2.0 * v) + w))


def couple_2_1(uBi: float, uBj: float, uBk: float, v: float = 2.0) -> CouplingResolution:
    """Edges ``i`` and ``j`` into the node, ``k`` out of it."""
    if not v > 0:
        raise ValueError(f"v must be positive, got {v}")
    a, b, c = uBi, uBj, uBk
    uB = (a, b, c)
    label = "RP%d-%d-%d" % (1 if a <= 0 else 2, 1 if b <= 0 else 2, 1 if c >= 0 else 2)
    v3 = 3.0 * v

    def res(sub, uK, C, u0):
        return CouplingResolution("2-1", label, sub, uB, tuple(uK), tuple(C), tuple(u0))

    # the single-inflow patterns, one for each in-edge
    def from_j(b):
        bb = b * b
        return ("SSU", (0.0, b, b), (0.0, bb, bb), (bb / v3 + b, 2 * bb / v3 + b, b))

    def from_i(a):
        aa = a * a
        return ("SSU", (a, 0.0, a), (aa, 0.0, aa), (2 * aa / v3 + a, aa / v3 + a, a))

    if label == "RP1-1-1":
        return res("SSS", (0.0, 0.0, 0.0), (0.0, 0.0, 0.0), (0.0, 0.0, 0.0))
    if label == "RP1-1-2":
        return res("UUS", *_merge_even(c, v))
    if label == "RP1-2-1":
        return res(*from_j(b))
    if label == "RP2-1-1":
        return res(*from_i(a))
    if label == "RP2-2-1":
        aa, bb = a * a, b * b
        r = math.sqrt(aa + bb)
        return res("SSU", (a, b, r), (aa, bb, aa + bb),
                   ((2 * aa + bb) / v3 + r, (aa + 2 * bb) / v3 + r, r))

    cc = c * c
    if label == "RP1-2-2":
        if c <= -SQRT2 * b:
            return res("UUS", *_merge_even(c, v))
        if c <= -b:
            bb = b * b
            s = math.sqrt(cc - bb)
            return res("USS", (-s, b, c), (cc - bb, bb, cc),
                       (-s, -(cc - 2 * bb) / v3 - s, -(2 * cc - bb) / v3 - s))
        return res(*from_j(b))
    if label == "RP2-1-2":
        if c <= -SQRT2 * a:
            return res("UUS", *_merge_even(c, v))
        if c <= -a:
            aa = a * a
            s = math.sqrt(cc - aa)
            return res("SUS", (a, -s, c), (aa, cc - aa, cc),
                       (-(cc - 2 * aa) / v3 - s, -s, -(2 * cc - aa) / v3 - s))
        return res(*from_i(a))

    # RP2-2-2
    aa, bb = a * a, b * b
    r = math.sqrt(aa + bb)
    if c <= -SQRT2 * a and c <= -SQRT2 * b:
        return res("UUS", *_merge_even(c, v))
    if -SQRT2 * a < c <= -r:
        s = math.sqrt(cc - aa)
        return res("SUS", (a, -s, c), (aa, cc - aa, cc),
                   (-(cc - 2 * aa) / v3 - s, -s, -(2 * cc - aa) / v3 - s))
    if -SQRT2 * b < c <= -r:
        s = math.sqrt(cc - bb)
        return res("USS", (-s, b, c), (cc - bb, bb, cc),
                   (-s, -(cc - 2 * bb) / v3 - s, -(2 * cc - bb) / v3 - s))
    return res("SSU", (a, b, r), (aa, bb, aa + bb),
               ((2 * aa + bb) / v3 + r, (aa + 2 * bb) / v3 + r, r))


def resolve_node(kind: str, u_B, v: float = 2.0) -> CouplingResolution:
    if kind == "1-1":
        return couple_1_1(*u_B)
    if kind == "1-2":
        return couple_1_2(*u_B, v=v)
    if kind == "2-1":
        return couple_2_1(*u_B, v=v)
    raise ValueError(f"no coupling table for node kind {kind!r}")


def degenerate_node_check(kind: str, u_B) -> list[str]:
    """Diagnostics for a 3-0 / 0-3 node: only the zero state conserves mass.

    Returns an empty list when every edge state vanishes.
    """
    if kind not in DEGENERATE_KINDS:
        raise ValueError(f"degenerate_node_check expects 3-0 or 0-3, got {kind!r}")
    bad = [(r, u) for r, u in enumerate(u_B) if u != 0]
    return [f"{kind} node: mass conservation sum(u^2) = 0 forces u = 0, "
            f"role {r} carries u = {u}" for r, u in bad]
