import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from burgersnet.coupling import couple_1_1, couple_1_2, couple_2_1
from burgersnet.layer import classify_layer
from coupling_checks import (COUPLE, PREDICATES, admissible, equivalent, interface_fluxes, label,
                             one_sided_trace_limits, same_traces, surface_brackets, zero_state_pairs)
from oracles import kinetic_junction_oracle

# states whose square underflows are flushed to zero: they would otherwise
# produce C = 0 next to a nonzero trace through floating-point underflow only
state = st.floats(-2.0, 2.0, allow_nan=False).map(lambda x: 0.0 if abs(x) < 1e-150 else x)
speed = st.floats(1.0, 10.0)


@pytest.mark.parametrize("kind", ["1-2", "2-1"])
def test_partition_and_labels(kind):
    rng = np.random.default_rng(11)
    fn, preds = COUPLE[kind], PREDICATES[kind]
    seen = set()
    for x in rng.uniform(-1, 1, (20_000, 3)):
        fired = [key for key, ok in preds(*x).items() if ok]
        assert len(fired) == 1, (x, fired)
        assert label(fn(*x)) == fired[0]
        seen.add(fired[0])
    assert len(seen) == len(preds(0.1, 0.1, 0.1))


@settings(max_examples=500, deadline=None)
@given(kind=st.sampled_from(["1-2", "2-1"]), a=state, b=state, c=state, v=speed)
def test_balance_admissibility_flux(kind, a, b, c, v):
    res = COUPLE[kind](a, b, c, v=v)
    scale = max(res.C) or 1.0
    assert abs(res.mass_balance) <= 1e-14 * scale
    assert all(C >= 0 for C in res.C)
    assert admissible(res)
    assert interface_fluxes(res) == pytest.approx(list(res.C), abs=1e-14 * scale)
    assert all(u * u == pytest.approx(C, abs=1e-14 * scale) for u, C in zip(res.u_K, res.C))


@settings(max_examples=300, deadline=None)
@given(kind=st.sampled_from(["1-2", "2-1"]), a=state, b=state, c=state)
def test_traces_independent_of_v(kind, a, b, c):
    r2, r4 = COUPLE[kind](a, b, c, v=2.0), COUPLE[kind](a, b, c, v=4.0)
    assert np.round(r2.u_K, 12).tolist() == np.round(r4.u_K, 12).tolist()
    assert r2.C == r4.C


@settings(max_examples=300, deadline=None)
@given(a=state, b=state)
def test_1_1_balance(a, b):
    res = couple_1_1(a, b)
    assert res.C[0] == res.C[1]
    assert admissible(res)


@settings(max_examples=500, deadline=None)
@given(kind=st.sampled_from(["1-2", "2-1"]), a=state, b=state, c=state, v=speed)
def test_layer_asymptotes_are_traces(kind, a, b, c, v):
    res = COUPLE[kind](a, b, c, v=v)
    for side, C, u0, uK in zip(res.sides, res.C, res.u0, res.u_K):
        sol = classify_layer(C, u0, v * v, side)
        assert sol.asymptotic == pytest.approx(uK, abs=1e-12)


@settings(max_examples=500, deadline=None)
@given(a=state, b=state, c=state, v=speed)
def test_2_1_is_mirror_of_1_2(a, b, c, v):
    """x -> -x, u -> -u turns a 2-1 node into a 1-2 node."""
    r = couple_2_1(a, b, c, v=v)
    m = couple_1_2(-c, -a, -b, v=v)
    assert r.u_K == pytest.approx([-m.u_K[1], -m.u_K[2], -m.u_K[0]], abs=1e-14)
    assert r.C == pytest.approx([m.C[1], m.C[2], m.C[0]], abs=1e-14)
    assert r.u0 == pytest.approx([-m.u0[1], -m.u0[2], -m.u0[0]], abs=1e-13)


@pytest.mark.parametrize("kind", ["1-2", "2-1"])
def test_continuity_across_switching_surfaces(kind):
    rng = np.random.default_rng(12)
    fn = COUPLE[kind]
    checked = 0
    for p, q in surface_brackets(kind, 300, rng):
        r1, r2 = fn(*p), fn(*q)
        # flux constants and interface fluxes are Lipschitz across every surface
        assert max(abs(a - b) for a, b in zip(r1.C, r2.C)) < 1e-9
        assert max(abs(a - b) for a, b in zip(interface_fluxes(r1), interface_fluxes(r2))) < 1e-9
        limits = one_sided_trace_limits(kind, p, q)
        if limits is None:
            continue
        assert same_traces(r1.u_B, *limits), (p, q, limits)
        checked += 1
    assert checked > 250
    for r1, r2 in zero_state_pairs(kind, 100, rng):
        assert equivalent(r1, r2), (r1, r2)


@pytest.mark.parametrize("kind,point,other", [
    # radicand-zero surfaces, hit exactly: i = -k, i = -j (1-2); c = -b, c = -a (2-1)
    ("1-2", (0.4, 0.3, -0.4), (0.4 - 1e-9, 0.3, -0.4)),
    ("1-2", (0.4, -0.4, 0.3), (0.4 - 1e-9, -0.4, 0.3)),
    ("2-1", (-0.2, 0.4, -0.4), (-0.2, 0.4, -0.4 + 1e-9)),
    ("2-1", (0.4, -0.2, -0.4), (0.4, -0.2, -0.4 + 1e-9)),
])
def test_exact_surface_values(kind, point, other):
    """On the surface the dispatched case equals the neighbouring case up to a standing shock."""
    r1, r2 = COUPLE[kind](*point), COUPLE[kind](*other)
    assert label(r1) != label(r2)
    assert same_traces(r1.u_B, r1.u_K, r2.u_K, tol=1e-8)
    assert r1.C == pytest.approx(list(r2.C), abs=1e-8)


@pytest.mark.parametrize("kind", ["1-2", "2-1"])
def test_kinetic_oracle_small(kind):
    rng = np.random.default_rng(13)
    fn = COUPLE[kind]
    converged = 0
    for _ in range(40):
        uB = rng.uniform(-1, 1, 3)
        v = rng.uniform(1.5, 4.0)
        o = kinetic_junction_oracle(kind, uB, v, rng=rng)
        if o is None:
            continue
        converged += 1
        res = fn(*uB, v=v)
        assert o[0] == pytest.approx(list(res.C), abs=1e-6)
        assert o[1] == pytest.approx(list(res.u_K), abs=1e-6)
        assert [x for x, y in zip(o[2], res.u0) if y is not None] == \
            pytest.approx([y for y in res.u0 if y is not None], abs=1e-6)
    assert converged >= 30
