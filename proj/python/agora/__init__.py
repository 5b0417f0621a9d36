"""Solvers for currency-flow trading games between self-interested agents.

The heavy lifting lives in the compiled extension; this package re-exports
its surface. See the project README for the model and the CLI.
"""

from ._core import (
    AgentDeviationReport,
    BestResponseMethod,
    BestResponseResult,
    CurrencyDistribution,
    Economy,
    EquilibriumCatalog,
    EquilibriumEntry,
    EquilibriumReport,
    LinearProgram,
    LpSolution,
    LpStatus,
    ScenarioName,
    ScenarioSpec,
    SimulationTrace,
    SolverError,
    TwoAgentGame,
    TwoAgentScenario,
    TwoAgentStrategy,
    UtilityProfile,
    ValidationReport,
    Violation,
    asymptotic_utilities,
    best_response_brute_force,
    best_response_grid_lp,
    cesaro_limit,
    check_segregation_necessity,
    classify_equilibria,
    episode_values,
    is_irreducible,
    load_economy,
    long_run_distribution,
    make_scenario,
    per_dollar_utilities,
    rescore_by_dynamics,
    save_economy,
    simulate,
    solve_lp,
    stationary_currency,
    stationary_distribution,
    stationary_response_lp,
    stationary_three_agent_closed_form,
    sufficient_irreducibility_check,
    three_agent_determinant,
    trace_to_csv,
    validate,
    verify_collaboration,
    verify_equilibrium,
    verify_two_agent_point,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
