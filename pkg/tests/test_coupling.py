import math

import pytest

from burgersnet.burgers import godunov_flux, macro_outer_boundary
from burgersnet.coupling import (HalfRiemannSet, couple_1_1, couple_1_2, couple_2_1,
                                 degenerate_node_check, half_riemann_contains,
                                 resolve_left_boundary, resolve_node, resolve_right_boundary)

R2 = math.sqrt(2.0)


def approx(values, abs=1e-12):
    return pytest.approx(list(values), abs=abs)


# -- half-Riemann sets ------------------------------------------------------

@pytest.mark.parametrize("side,uB,uK,expected", [
    ("left", 0.5, 0.0, True),
    ("left", -0.5, -0.3, False),
    ("left", -0.5, -0.5, True),
    ("left", -0.5, 0.5, True),
    ("left", 0.5, -1e-9, False),
    ("left", 0.0, 0.0, True),
    ("right", -0.5, 0.0, True),
    ("right", 0.5, 0.3, False),
    ("right", 0.5, 0.5, True),
    ("right", 0.5, -0.5, True),
    ("right", 0.0, 1e-9, False),
])
def test_half_riemann_membership(side, uB, uK, expected):
    hr = HalfRiemannSet(side, uB)
    assert half_riemann_contains(hr, uK) is expected


def test_half_riemann_labels():
    assert HalfRiemannSet("left", 0.0).label == "RP1"
    assert HalfRiemannSet("right", 0.0).label == "RP1"
    assert HalfRiemannSet("left", -1.0).label == "RP2"
    with pytest.raises(ValueError):
        half_riemann_contains(HalfRiemannSet("up", 0.0), 0.0)


# -- outer boundaries -------------------------------------------------------

def test_left_boundary_examples():
    r = resolve_left_boundary(-0.25, 0.5, 2.0)
    assert (r.u_K, r.outgoing, r.case) == (0.0, -0.25, "transsonic")
    r = resolve_left_boundary(0.25, 0.5, 2.0)
    assert r.case == "ingoing"
    assert r.u_K == pytest.approx(R2 - 1, abs=1e-14)
    assert r.outgoing == pytest.approx(R2 - 1 - 0.25, abs=1e-14)
    r = resolve_left_boundary(0.0, -0.5, 2.0)
    assert (r.u_K, r.outgoing, r.case) == (-0.5, -0.125, "outgoing")


def test_right_boundary_examples():
    r = resolve_right_boundary(-9 / 64, 0.5, 2.0)
    assert (r.u_K, r.outgoing, r.case) == (0.5, -1 / 64, "outgoing")
    r = resolve_right_boundary(0.1, -0.5, 2.0)
    assert (r.u_K, r.outgoing, r.case) == (0.0, 0.1, "transsonic")
    r = resolve_right_boundary(-0.25, -0.5, 2.0)
    assert r.case == "ingoing" and r.u_K == pytest.approx(1 - R2, abs=1e-14)


def test_macro_outer_boundary_delegates():
    assert macro_outer_boundary("left", 0.5, -0.25, 2.0) == 0.0
    assert macro_outer_boundary("right", 0.5, -9 / 64, 2.0) == 0.5
    assert macro_outer_boundary("left", 0.5, 0.25, 2.0) == pytest.approx(R2 - 1)
    with pytest.raises(ValueError):
        macro_outer_boundary("middle", 0.0, 0.0, 2.0)


def test_boundary_case_thresholds():
    v, uB = 2.0, -0.5
    thr = 0.5 * (uB * uB / v - uB)
    # ties go to the ingoing case, both formulas agree there up to a stationary shock
    a = resolve_left_boundary(thr, uB, v)
    b = resolve_left_boundary(thr - 1e-13, uB, v)
    assert a.case == "ingoing" and b.case == "outgoing"
    assert a.u_K == pytest.approx(-uB, abs=1e-12) and b.u_K == uB
    assert a.C == pytest.approx(b.C, abs=1e-12)
    with pytest.raises(ValueError):
        resolve_left_boundary(0.1, 0.1, 0.0)


def test_boundary_kinetic_consistency():
    """Outgoing kinetic value and trace reproduce the layer flux constant."""
    v = 2.0
    for f2, uB in [(0.3, 0.2), (-0.1, 0.4), (0.05, -0.6), (0.9, -0.6)]:
        r = resolve_left_boundary(f2, uB, v)
        uhat = v * (f2 - r.outgoing)
        assert uhat == pytest.approx(r.C, abs=1e-14)
        assert r.u0 == pytest.approx(f2 + r.outgoing, abs=1e-14)
    for f1, uB in [(-0.3, -0.2), (0.1, -0.4), (-0.05, 0.6), (-0.9, 0.6)]:
        r = resolve_right_boundary(f1, uB, v)
        assert v * (r.outgoing - f1) == pytest.approx(r.C, abs=1e-14)


# -- nodes ------------------------------------------------------------------

def test_1_1_examples():
    assert couple_1_1(-1.0, 1.0).u_K == (0.0, 0.0)
    assert couple_1_1(0.3, -0.2).u_K == (0.3, 0.3)
    r = couple_1_1(0.3, -0.3)
    assert r.u_K == (0.3, -0.3) and r.subcase == "SS"
    assert couple_1_1(-0.3, -0.5).u_K == (-0.5, -0.5)
    assert couple_1_1(0.2, 0.7).u_K == (0.2, 0.2)


def test_1_1_is_burgers_riemann_solution():
    """Trace equals the self-similar solution at x = 0 (up to a standing shock)."""
    from oracles import exact_riemann
    for uL, uR in [(-1, 1), (0.3, -0.2), (-0.3, -0.5), (0.2, 0.7), (-0.6, 0.2), (0.5, -0.9)]:
        r = couple_1_1(uL, uR)
        u_at_0 = float(exact_riemann(uL, uR, [0.0], 1.0)[0])
        assert r.C == pytest.approx((u_at_0 ** 2,) * 2, abs=1e-14)


def test_1_2_examples():
    assert couple_1_2(-1.0, 0.75, 0.5).u_K == (0.0, 0.0, 0.0)
    r = couple_1_2(1.0, 0.75, 0.5)
    assert r.u_K == approx([1.0, 1 / R2, 1 / R2])
    r = couple_1_2(0.8, -0.75, -0.5)
    assert (r.case, r.subcase) == ("RP2-2-2", "USS")
    assert r.u_K == approx([-0.901388, -0.75, -0.5], abs=1e-6)


def test_1_2_table_rows():
    v = 2.0
    r = couple_1_2(-0.2, 0.3, -0.6, v)  # RP1-1-2
    assert r.u_K == approx([-0.6, 0.0, -0.6]) and r.C == approx([0.36, 0.0, 0.36])
    assert r.u0 == approx([-0.6, -0.36 / 6 - 0.6, -0.72 / 6 - 0.6])
    r = couple_1_2(-0.2, -0.6, 0.3, v)  # RP1-2-1
    assert r.u_K == approx([-0.6, -0.6, 0.0])
    r = couple_1_2(-0.2, -0.3, -0.4, v)  # RP1-2-2
    assert r.u_K == approx([-0.5, -0.3, -0.4]) and r.C == approx([0.25, 0.09, 0.16])
    r = couple_1_2(0.5, 0.1, -0.4, v)  # RP2-1-2 (b): -sqrt2 k > i >= -k
    assert r.subcase == "SUS"
    assert r.u_K == approx([0.5, 0.3, -0.4])
    r = couple_1_2(0.3, 0.1, -0.4, v)  # RP2-1-2 (c)
    assert r.subcase == "USS" and r.u_K == approx([-0.4, 0.0, -0.4])
    r = couple_1_2(0.5, -0.4, 0.1, v)  # RP2-2-1 (b)
    assert r.subcase == "SSU" and r.u_K == approx([0.5, -0.4, 0.3])
    r = couple_1_2(0.9, -0.3, -0.2, v)  # RP2-2-2 (a)
    assert r.subcase == "SUU" and r.u_K == approx([0.9, 0.9 / R2, 0.9 / R2])
    r = couple_1_2(0.7, -0.6, -0.1, v)  # RP2-2-2 (b)
    assert r.subcase == "SSU" and r.u_K == approx([0.7, -0.6, math.sqrt(0.13)])
    r = couple_1_2(0.7, -0.1, -0.6, v)  # RP2-2-2 (c)
    assert r.subcase == "SUS" and r.u_K == approx([0.7, math.sqrt(0.13), -0.6])


def test_2_1_examples():
    r = couple_2_1(0.5, 0.4, 0.75)
    assert r.u_K == approx([0.5, 0.4, math.sqrt(0.41)]) and r.case == "RP2-2-1"
    r = couple_2_1(0.5, 0.4, -0.3)
    assert (r.case, r.subcase) == ("RP2-2-2", "SSU")
    assert r.u_K == approx([0.5, 0.4, 0.640312], abs=1e-6)
    assert couple_2_1(-1.0, -0.75, 0.5).u_K == (0.0, 0.0, 0.0)


def test_2_1_table_rows():
    r = couple_2_1(-0.2, -0.3, -0.6)  # RP1-1-2
    assert r.u_K == approx([-0.6 / R2, -0.6 / R2, -0.6])
    r = couple_2_1(-0.2, 0.3, 0.6)  # RP1-2-1
    assert r.u_K == approx([0.0, 0.3, 0.3])
    r = couple_2_1(0.3, -0.2, 0.6)  # RP2-1-1
    assert r.u_K == approx([0.3, 0.0, 0.3])
    r = couple_2_1(-1.0, 0.5, -0.6)  # RP1-2-2 (b)
    assert r.subcase == "USS" and r.u_K == approx([-math.sqrt(0.11), 0.5, -0.6])
    r = couple_2_1(-1.0, 0.5, -0.8)  # RP1-2-2 (a)
    assert r.subcase == "UUS" and r.u_K == approx([-0.8 / R2, -0.8 / R2, -0.8])
    r = couple_2_1(0.5, -1.0, -0.6)  # RP2-1-2 (b)
    assert r.subcase == "SUS" and r.u_K == approx([0.5, -math.sqrt(0.11), -0.6])
    r = couple_2_1(0.5, -1.0, -0.3)  # RP2-1-2 (c)
    assert r.subcase == "SSU" and r.u_K == approx([0.5, 0.0, 0.5])


def test_resolve_node_dispatch_and_errors():
    assert resolve_node("1-1", (0.3, -0.2)).u_K == (0.3, 0.3)
    with pytest.raises(ValueError):
        resolve_node("3-0", (0.0, 0.0, 0.0))
    with pytest.raises(ValueError):
        couple_1_2(0.1, 0.2, 0.3, v=0.0)


def test_degenerate_nodes():
    assert degenerate_node_check("3-0", (0.0, 0.0, 0.0)) == []
    assert len(degenerate_node_check("0-3", (0.0, 0.2, -0.1))) == 2
    with pytest.raises(ValueError):
        degenerate_node_check("1-2", (0.0, 0.0, 0.0))


def test_godunov_flux_examples():
    assert godunov_flux(1.0, -1.0) == 1.0
    assert godunov_flux(-1.0, 1.0) == 0.0
    assert godunov_flux(0.5, 0.5) == 0.25
