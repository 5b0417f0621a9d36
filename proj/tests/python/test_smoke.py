"""Smoke tests for the compiled module: one concrete check per surface."""

import numpy as np
import pytest

import agora


def uniform_triangle():
    third = np.full((3, 3), 1.0 / 3.0)
    return agora.Economy(third, np.ones((3, 3)))


def showcase_economy():
    spending = np.array([[1.0, 0.01, 0.5], [0.0, 0.97, 0.01], [0.0, 0.02, 0.49]])
    utility = np.array([[0.0, 1.0, 1.0], [9.8, 0.0, 1.0], [1.0, 1.0, 2.0]])
    return agora.Economy(spending, utility)


def test_validation_and_structure():
    economy = uniform_triangle()
    assert agora.validate(economy).ok
    assert agora.is_irreducible(economy)
    assert agora.sufficient_irreducibility_check(economy)

    lopsided = agora.Economy(np.eye(2), np.ones((2, 2)), np.array([3.0, 1.0]))
    assert lopsided.initial_currency[0] == pytest.approx(0.75)


def test_stationary_and_closed_form():
    economy = uniform_triangle()
    x = agora.stationary_distribution(economy)
    assert x.values == pytest.approx([1 / 3, 1 / 3, 1 / 3])
    closed = agora.stationary_three_agent_closed_form(economy)
    assert closed.values == pytest.approx(x.values, abs=1e-12)

    with pytest.raises(agora.SolverError):
        agora.stationary_distribution(agora.Economy(np.eye(2), np.ones((2, 2))))


def test_simulation_trace():
    trace = agora.simulate(uniform_triangle(), 1000, 1e-10)
    assert trace.converged
    assert trace.cesaro_average.values == pytest.approx([1 / 3, 1 / 3, 1 / 3])
    csv = agora.trace_to_csv(trace)
    assert csv.startswith("episode,x_1,x_2,x_3\n")


def test_best_response_prefers_the_recycling_supplier():
    economy = showcase_economy()
    brute = agora.best_response_brute_force(economy, 0, 100)
    assert brute.column == pytest.approx([0.0, 0.0, 1.0])
    grid = agora.best_response_grid_lp(economy, 0, 201)
    assert grid.column[2] > 0.99
    on3 = agora.rescore_by_dynamics(economy, 0, np.array([0.0, 0.0, 1.0]))
    on2 = agora.rescore_by_dynamics(economy, 0, np.array([0.0, 1.0, 0.0]))
    assert on3 - on2 > 1e-3


def test_two_agent_catalog():
    catalog = agora.classify_equilibria(agora.TwoAgentGame(1, 3, 3, 1))
    assert len(catalog.entries) == 3
    partial = catalog.entries[1]
    assert partial.scenario == agora.TwoAgentScenario.bilateral_partial
    assert (partial.point.p, partial.point.q) == (0.5, 0.5)
    assert agora.verify_two_agent_point(agora.TwoAgentGame(1, 3, 3, 1), partial.point, 1e-6)
    assert catalog.distance(agora.TwoAgentStrategy(0.5, 0.5)) == 0.0


def test_scenarios_and_verification():
    triangle = agora.make_scenario(agora.ScenarioSpec(agora.ScenarioName.symmetric_triangle))
    report = agora.verify_equilibrium(triangle, 50)
    assert report.is_equilibrium

    rotation = agora.make_scenario(agora.ScenarioSpec(agora.ScenarioName.rotation))
    failed = agora.verify_equilibrium(rotation, 50)
    assert not failed.is_equilibrium
    assert failed.per_agent[0].gap == pytest.approx(1 / 6, abs=1e-7)


def test_economy_files_round_trip(tmp_path):
    economy = showcase_economy()
    path = tmp_path / "economy.json"
    agora.save_economy(economy, path)
    loaded = agora.load_economy(path)
    assert np.array_equal(loaded.spending, economy.spending)
    assert np.array_equal(loaded.utility, economy.utility)


def test_lp_surface():
    lp = agora.LinearProgram(np.array([1.0, 0.0]), np.array([[1.0, 1.0]]), np.array([1.0]))
    solution = agora.solve_lp(lp)
    assert solution.status == agora.LpStatus.optimal
    assert solution.objective == pytest.approx(1.0)
