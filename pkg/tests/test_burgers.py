import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from burgersnet.burgers import BurgersSolver, burgers_step, godunov_flux, write_burgers_csv
from burgersnet.network import Boundary, Edge, KineticParams, Node, Scenario
from burgersnet.suite import tripod_scenario
from oracles import brute_godunov, exact_riemann

P = KineticParams(-2.0, 2.0, 1e-3)


def test_flux_matches_brute_force():
    rng = np.random.default_rng(0)
    for uL, uR in rng.uniform(-2, 2, (2000, 2)):
        assert abs(godunov_flux(uL, uR) - brute_godunov(uL, uR)) <= abs(uL - uR) * 1e-3 + 1e-15


@settings(max_examples=300, deadline=None)
@given(u=st.floats(-3, 3))
def test_flux_consistency(u):
    assert godunov_flux(u, u) == u * u


def test_constant_field_unchanged():
    u = np.full(10, 0.3)
    burgers_step(u, 0.01, 0.1, 0.3, 0.3)
    assert np.all(u == 0.3)


def test_cfl_rejected():
    with pytest.raises(ValueError):
        burgers_step(np.ones(4), 0.06, 0.1, 1.0, 1.0)


def riemann_edge(uL, uR, cells=400):
    e = Edge(1, 1.0, cells, ((0.0, 0.5, uL), (0.5, 1.0, uR)))
    return Scenario("rp", P, (e,), boundaries=(Boundary(1, "left"), Boundary(1, "right")), t_final=0.2)


def test_rarefaction_against_exact():
    errs = []
    for n in (200, 400, 800):
        b = BurgersSolver(riemann_edge(-1.0, 1.0, cells=n))
        m0 = b.mass()
        b.advance_to(0.2)
        x = (np.arange(n) + 0.5) / n
        errs.append(np.sum(np.abs(b.u[1] - exact_riemann(-1, 1, x, 0.2, 0.5))) / n)
        assert abs(b.mass() - m0 - b.boundary_flux) < 1e-14
    # first order away from the fan corners
    assert errs[1] < 1e-2
    assert errs[2] / errs[1] < 0.65 and errs[1] / errs[0] < 0.65


def test_stationary_shock():
    b = BurgersSolver(riemann_edge(1.0, -1.0))
    b.advance_to(0.2)
    assert np.all(b.u[1][:200] == 1.0) and np.all(b.u[1][200:] == -1.0)


def test_moving_shock_speed():
    b = BurgersSolver(riemann_edge(1.0, 0.0))
    b.advance_to(0.2)
    x = (np.arange(400) + 0.5) / 400
    # Rankine-Hugoniot speed uL + uR = 1
    assert np.sum(np.abs(b.u[1] - exact_riemann(1.0, 0.0, x, 0.2, 0.5))) / 400 < 5e-3


def test_maximum_principle():
    b = BurgersSolver(tripod_scenario("1-2", (0.8, -0.75, -0.5), cells=200))
    b.advance_to(0.5)
    assert all(np.all(np.abs(u) <= 1.0 + 1e-12) for u in b.u.values())


@pytest.mark.parametrize("kind,vals", [("1-2", (1.0, 0.75, 0.5)), ("2-1", (0.5, 0.4, 0.75)),
                                       ("1-2", (0.8, -0.75, -0.5)), ("2-1", (-1.0, 0.5, -0.6))])
def test_node_fluxes_balance(kind, vals):
    s = tripod_scenario(kind, vals, cells=100)
    b = BurgersSolver(s)
    for _ in range(50):
        m0 = b.mass()
        inflow = b.step(np.inf)
        assert abs(b.mass() - m0 - inflow) < 1e-14


def test_1_1_node_is_riemann_problem():
    """Two edges through a 1-1 node behave like one edge."""
    edges = (Edge.constant(1, -0.6, 0.5, 200), Edge.constant(2, 0.9, 0.5, 200))
    s = Scenario("two", P, edges, (Node(1, "1-1", (1, 2)),),
                 (Boundary(1, "left"), Boundary(2, "right")), t_final=0.2)
    b = BurgersSolver(s)
    b.advance_to(0.2)
    one = BurgersSolver(riemann_edge(-0.6, 0.9, cells=400))
    one.advance_to(0.2)
    assert np.allclose(np.concatenate([b.u[1], b.u[2]]), one.u[1], atol=1e-13)


def test_zero_state_needs_time_cap():
    s = riemann_edge(0.0, 0.0)
    b = BurgersSolver(s)
    with pytest.raises(ValueError):
        b.step()
    b.advance_to(0.2)
    assert np.all(b.u[1] == 0) and b.t == 0.2


def test_csv(tmp_path):
    write_burgers_csv(tmp_path / "b.csv", np.array([0.5]), np.array([0.25]))
    assert (tmp_path / "b.csv").read_text().splitlines() == ["x,u", "0.5,0.25"]
