#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "agora/best_response.hpp"
#include "agora/dynamics.hpp"
#include "agora/economy.hpp"
#include "agora/io.hpp"
#include "agora/lp.hpp"
#include "agora/nash.hpp"
#include "agora/two_agent.hpp"

namespace py = pybind11;
using namespace agora;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Solvers for currency-flow trading games: stationary distributions, "
              "long-run utilities, best responses and Nash verification.";

    py::register_exception<SolverError>(m, "SolverError");

    // economy
    py::class_<CurrencyDistribution>(m, "CurrencyDistribution")
        .def(py::init<Eigen::VectorXd>(), py::arg("values"))
        .def_property_readonly("values", &CurrencyDistribution::values)
        .def("__len__", &CurrencyDistribution::size)
        .def("__getitem__",
             [](const CurrencyDistribution& d, Eigen::Index i) {
                 if (i < 0 || i >= d.size()) throw py::index_error();
                 return d[i];
             })
        .def("__repr__", [](const CurrencyDistribution& d) {
            std::ostringstream out;
            out << "CurrencyDistribution(" << d.values().transpose() << ")";
            return out.str();
        });

    py::class_<Violation>(m, "Violation")
        .def_readonly("constraint", &Violation::constraint)
        .def_readonly("index", &Violation::index)
        .def_readonly("observed", &Violation::observed);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("ok", &ValidationReport::ok)
        .def_readonly("violations", &ValidationReport::violations);

    py::class_<Economy>(m, "Economy")
        .def(py::init<Eigen::MatrixXd, Eigen::MatrixXd>(), py::arg("spending"),
             py::arg("utility"))
        .def(py::init<Eigen::MatrixXd, Eigen::MatrixXd, Eigen::VectorXd>(), py::arg("spending"),
             py::arg("utility"), py::arg("initial_currency"))
        .def_property_readonly("n", &Economy::size)
        .def_property_readonly("spending", &Economy::spending)
        .def_property_readonly("utility", &Economy::utility)
        .def_property_readonly("initial_currency", &Economy::initial_currency)
        .def("with_column", &Economy::with_column, py::arg("agent"), py::arg("column"));

    m.def("validate", &validate, py::arg("economy"));
    m.def("is_irreducible", &is_irreducible, py::arg("economy"));
    m.def("sufficient_irreducibility_check", &sufficient_irreducibility_check,
          py::arg("economy"));

    // dynamics
    py::class_<SimulationTrace>(m, "SimulationTrace")
        .def_readonly("episodes", &SimulationTrace::episodes)
        .def_readonly("trajectory", &SimulationTrace::trajectory)
        .def_readonly("cesaro_average", &SimulationTrace::cesaro_average)
        .def_readonly("converged", &SimulationTrace::converged)
        .def_readonly("final_delta", &SimulationTrace::final_delta);

    py::class_<UtilityProfile>(m, "UtilityProfile")
        .def_readonly("per_agent", &UtilityProfile::per_agent);

    m.def("stationary_distribution", &stationary_distribution, py::arg("economy"));
    m.def("stationary_three_agent_closed_form", &stationary_three_agent_closed_form,
          py::arg("economy"));
    m.def("three_agent_determinant", &three_agent_determinant, py::arg("economy"));
    m.def("simulate", &simulate, py::arg("economy"), py::arg("episodes") = kDefaultEpisodes,
          py::arg("convergence_tol") = kDefaultConvergenceTol);
    m.def("cesaro_limit", &cesaro_limit, py::arg("economy"));
    m.def("long_run_distribution", &long_run_distribution, py::arg("economy"));
    m.def("asymptotic_utilities", &asymptotic_utilities, py::arg("economy"));

    // linear programming
    py::enum_<LpStatus>(m, "LpStatus")
        .value("optimal", LpStatus::optimal)
        .value("infeasible", LpStatus::infeasible)
        .value("unbounded", LpStatus::unbounded);

    py::class_<LinearProgram>(m, "LinearProgram")
        .def(py::init([](Eigen::VectorXd objective, Eigen::MatrixXd eq_lhs,
                         Eigen::VectorXd eq_rhs) {
                 return LinearProgram{std::move(objective), std::move(eq_lhs), std::move(eq_rhs)};
             }),
             py::arg("objective"), py::arg("eq_lhs"), py::arg("eq_rhs"))
        .def_readwrite("objective", &LinearProgram::objective)
        .def_readwrite("eq_lhs", &LinearProgram::eq_lhs)
        .def_readwrite("eq_rhs", &LinearProgram::eq_rhs);

    py::class_<LpSolution>(m, "LpSolution")
        .def_readonly("status", &LpSolution::status)
        .def_readonly("values", &LpSolution::values)
        .def_readonly("objective", &LpSolution::objective);

    m.def("solve_lp", &solve_lp, py::arg("lp"));

    // best responses
    py::enum_<BestResponseMethod>(m, "BestResponseMethod")
        .value("grid_lp", BestResponseMethod::grid_lp)
        .value("brute_force", BestResponseMethod::brute_force)
        .value("dynamics_rescored", BestResponseMethod::dynamics_rescored);

    py::class_<BestResponseResult>(m, "BestResponseResult")
        .def_readonly("agent", &BestResponseResult::agent)
        .def_readonly("column", &BestResponseResult::column)
        .def_readonly("stationary", &BestResponseResult::stationary)
        .def_readonly("utility", &BestResponseResult::utility)
        .def_readonly("method", &BestResponseResult::method);

    m.def("stationary_response_lp", &stationary_response_lp, py::arg("economy"), py::arg("agent"),
          py::arg("mass"));
    m.def("best_response_grid_lp", &best_response_grid_lp, py::arg("economy"), py::arg("agent"),
          py::arg("grid_points") = kDefaultGridPoints);
    m.def("best_response_brute_force", &best_response_brute_force, py::arg("economy"),
          py::arg("agent"), py::arg("resolution") = kDefaultLatticeResolution);
    m.def("rescore_by_dynamics", &rescore_by_dynamics, py::arg("economy"), py::arg("agent"),
          py::arg("column"));

    // two-agent analytics
    py::class_<TwoAgentGame>(m, "TwoAgentGame")
        .def(py::init([](double a, double b, double c, double d) {
                 return TwoAgentGame{a, b, c, d};
             }),
             py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def_readwrite("a", &TwoAgentGame::a)
        .def_readwrite("b", &TwoAgentGame::b)
        .def_readwrite("c", &TwoAgentGame::c)
        .def_readwrite("d", &TwoAgentGame::d);

    py::class_<TwoAgentStrategy>(m, "TwoAgentStrategy")
        .def(py::init([](double p, double q) { return TwoAgentStrategy{p, q}; }), py::arg("p"),
             py::arg("q"))
        .def_readwrite("p", &TwoAgentStrategy::p)
        .def_readwrite("q", &TwoAgentStrategy::q);

    py::enum_<TwoAgentScenario>(m, "TwoAgentScenario")
        .value("no_adoption", TwoAgentScenario::no_adoption)
        .value("bilateral_partial", TwoAgentScenario::bilateral_partial)
        .value("bilateral_full", TwoAgentScenario::bilateral_full)
        .value("unilateral_full_A", TwoAgentScenario::unilateral_full_A)
        .value("unilateral_full_B", TwoAgentScenario::unilateral_full_B);

    py::class_<EquilibriumEntry>(m, "EquilibriumEntry")
        .def_readonly("scenario", &EquilibriumEntry::scenario)
        .def_readonly("point", &EquilibriumEntry::point)
        .def_readonly("is_interval", &EquilibriumEntry::is_interval)
        .def_readonly("interval_lo", &EquilibriumEntry::interval_lo)
        .def_readonly("interval_hi", &EquilibriumEntry::interval_hi)
        .def_readonly("condition", &EquilibriumEntry::condition)
        .def_readonly("flag", &EquilibriumEntry::flag)
        .def("samples", &EquilibriumEntry::samples)
        .def("distance", &EquilibriumEntry::distance, py::arg("strategy"));

    py::class_<EquilibriumCatalog>(m, "EquilibriumCatalog")
        .def_readonly("game", &EquilibriumCatalog::game)
        .def_readonly("entries", &EquilibriumCatalog::entries)
        .def("distance", &EquilibriumCatalog::distance, py::arg("strategy"));

    m.def("per_dollar_utilities", &per_dollar_utilities, py::arg("game"), py::arg("strategy"));
    m.def("stationary_currency", &stationary_currency, py::arg("strategy"));
    m.def("episode_values", &episode_values, py::arg("game"), py::arg("strategy"),
          py::arg("initial_currency_a") = 0.5);
    m.def("classify_equilibria", &classify_equilibria, py::arg("game"));
    m.def("verify_two_agent_point", &verify_two_agent_point, py::arg("game"), py::arg("strategy"),
          py::arg("tol"), py::arg("grid_points") = 1001);

    // nash verification and scenarios
    py::class_<AgentDeviationReport>(m, "AgentDeviationReport")
        .def_readonly("agent", &AgentDeviationReport::agent)
        .def_readonly("current_utility", &AgentDeviationReport::current_utility)
        .def_readonly("best_deviation_column", &AgentDeviationReport::best_deviation_column)
        .def_readonly("deviation_utility", &AgentDeviationReport::deviation_utility)
        .def_readonly("gap", &AgentDeviationReport::gap);

    py::class_<EquilibriumReport>(m, "EquilibriumReport")
        .def_readonly("is_equilibrium", &EquilibriumReport::is_equilibrium)
        .def_readonly("per_agent", &EquilibriumReport::per_agent)
        .def_readonly("tolerance", &EquilibriumReport::tolerance);

    py::enum_<ScenarioName>(m, "ScenarioName")
        .value("autarky", ScenarioName::autarky)
        .value("isolated_dominant", ScenarioName::isolated_dominant)
        .value("symmetric_triangle", ScenarioName::symmetric_triangle)
        .value("rotation", ScenarioName::rotation)
        .value("collaboration", ScenarioName::collaboration)
        .value("segregation_four", ScenarioName::segregation_four);

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def(py::init([](ScenarioName name, std::vector<double> parameters) {
                 return ScenarioSpec{name, std::move(parameters)};
             }),
             py::arg("name"), py::arg("parameters") = std::vector<double>{})
        .def_readwrite("name", &ScenarioSpec::name)
        .def_readwrite("parameters", &ScenarioSpec::parameters);

    m.def("make_scenario", &make_scenario, py::arg("spec"));
    m.def("verify_equilibrium", &verify_equilibrium, py::arg("economy"),
          py::arg("resolution") = kDefaultDeviationResolution,
          py::arg("tol") = kDefaultEquilibriumTol);
    m.def("verify_collaboration", &verify_collaboration, py::arg("economy"),
          py::arg("tol") = kDefaultEquilibriumTol,
          py::arg("resolution") = kDefaultDeviationResolution);
    m.def("check_segregation_necessity", &check_segregation_necessity, py::arg("economy"),
          py::arg("candidate"), py::arg("tol") = 0.0);

    // files
    m.def("load_economy", &load_economy, py::arg("path"));
    m.def("save_economy", &save_economy, py::arg("economy"), py::arg("path"));
    m.def("trace_to_csv", &trace_to_csv, py::arg("trace"));
}
