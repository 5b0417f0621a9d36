// Command-line front door for the agora solvers: loads economy files,
// dispatches to the library and emits human-readable tables or JSON.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "agora/best_response.hpp"
#include "agora/dynamics.hpp"
#include "agora/economy.hpp"
#include "agora/io.hpp"
#include "agora/nash.hpp"
#include "agora/two_agent.hpp"

namespace {

using agora::ErrorCode;
using nlohmann::json;

// Exit codes: 0 success, 1 internal, 2 parse, 3 validation/dimension,
// 4 verb/economy mismatch, 5 precondition (incl. reducible or singular).
int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::parse_error: return 2;
        case ErrorCode::invalid_economy:
        case ErrorCode::dimension_mismatch: return 3;
        case ErrorCode::reducible_chain:
        case ErrorCode::singular_system:
        case ErrorCode::precondition_failed: return 5;
        case ErrorCode::internal: return 1;
    }
    return 1;
}

struct Options {
    std::string input;
    std::string output;
    long agent = 1;  // 1-based on the command line
    int grid_points = agora::kDefaultGridPoints;
    int resolution = agora::kDefaultLatticeResolution;
    long episodes = agora::kDefaultEpisodes;
    double tol = 0.0;  // per-verb default applied at use
    bool as_json = false;
};

void emit(const json& doc, const Options& opt) {
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) {
            throw agora::SolverError(ErrorCode::parse_error, "cannot write " + opt.output);
        }
        out << doc.dump(2) << "\n";
        return;
    }
    std::cout << doc.dump(2) << std::endl;
}

void print_vector(const Eigen::VectorXd& v, const std::string& label) {
    std::cout << label << " (";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        std::cout << (i ? ", " : "") << v(i);
    }
    std::cout << ")\n";
}

agora::Economy load_input(const Options& opt) {
    return agora::load_economy(opt.input);
}

int run_validate(const Options& opt) {
    agora::Economy economy = load_input(opt);
    agora::ValidationReport report = agora::validate(economy);
    if (opt.as_json) {
        emit(agora::to_json(report), opt);
    } else if (report.ok) {
        std::cout << "ok: " << economy.size() << "-agent economy passes validation\n";
    } else {
        std::cout << "invalid: " << report.violations.size() << " violation(s)\n";
        for (const auto& v : report.violations) {
            std::cout << "  " << v.constraint << " at index " << v.index << " (observed "
                      << v.observed << ")\n";
        }
    }
    return report.ok ? 0 : 3;
}

int run_stationary(const Options& opt) {
    agora::Economy economy = load_input(opt);
    agora::require_valid(economy);
    agora::CurrencyDistribution solved = agora::stationary_distribution(economy);
    json doc = agora::to_json(solved);
    doc["method"] = "linear_solve";
    if (economy.size() == 3) {
        // Cross-check against the closed form whenever it is well posed.
        try {
            agora::CurrencyDistribution closed =
                agora::stationary_three_agent_closed_form(economy);
            doc["closed_form"] = agora::to_json(closed)["values"];
            doc["closed_form_max_diff"] =
                (closed.values() - solved.values()).cwiseAbs().maxCoeff();
        } catch (const agora::SolverError&) {
            doc["closed_form"] = nullptr;
        }
    }
    if (opt.as_json) {
        emit(doc, opt);
    } else {
        print_vector(solved.values(), "stationary currency");
        if (doc.contains("closed_form_max_diff")) {
            std::cout << "closed-form cross-check max diff: "
                      << doc["closed_form_max_diff"].get<double>() << "\n";
        }
    }
    return 0;
}

int run_simulate(const Options& opt) {
    agora::Economy economy = load_input(opt);
    const double tol = opt.tol > 0.0 ? opt.tol : agora::kDefaultConvergenceTol;
    agora::SimulationTrace trace = agora::simulate(economy, opt.episodes, tol);
    if (opt.as_json) {
        json doc{{"episodes", trace.episodes},
                 {"converged", trace.converged},
                 {"final_delta", trace.final_delta},
                 {"cesaro_average", agora::to_json(trace.cesaro_average)["values"]}};
        emit(doc, opt);
        return 0;
    }
    const std::string csv = agora::trace_to_csv(trace);
    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        if (!out) {
            throw agora::SolverError(ErrorCode::parse_error, "cannot write " + opt.output);
        }
        out << csv;
        std::cout << "wrote " << trace.trajectory.size() << " rows to " << opt.output << "\n";
        print_vector(trace.cesaro_average.values(), "cesaro average");
        std::cout << (trace.converged ? "converged" : "not converged") << " after "
                  << trace.episodes << " episodes (delta " << trace.final_delta << ")\n";
    } else {
        std::cout << csv;
    }
    return 0;
}

int run_best_response(const Options& opt) {
    agora::Economy economy = load_input(opt);
    const Eigen::Index agent = static_cast<Eigen::Index>(opt.agent) - 1;
    agora::BestResponseResult grid = agora::best_response_grid_lp(economy, agent, opt.grid_points);
    const double rescored = agora::rescore_by_dynamics(economy, agent, grid.column);

    json doc{{"grid_lp", agora::to_json(grid)}, {"grid_lp_rescored_utility", rescored}};
    const bool small = economy.size() <= 4;
    if (small) {
        agora::BestResponseResult brute =
            agora::best_response_brute_force(economy, agent, opt.resolution);
        doc["brute_force"] = agora::to_json(brute);
        doc["method_agreement_gap"] = std::abs(grid.utility - brute.utility);
    }
    if (opt.as_json) {
        emit(doc, opt);
        return 0;
    }
    print_vector(grid.column, "grid-LP best column");
    std::cout << "grid-LP utility (optimistic): " << grid.utility
              << ", dynamics-rescored: " << rescored << "\n";
    if (small) {
        std::cout << "brute-force utility: " << doc["brute_force"]["utility"].get<double>()
                  << " (agreement gap " << doc["method_agreement_gap"].get<double>() << ")\n";
    }
    return 0;
}

int run_classify2(const Options& opt) {
    agora::Economy economy = load_input(opt);
    if (economy.size() != 2) {
        std::cerr << "error: classify2 needs a two-agent economy (got " << economy.size()
                  << ")\n";
        return 4;
    }
    const auto& U = economy.utility();
    agora::TwoAgentGame game{U(0, 0), U(1, 0), U(0, 1), U(1, 1)};
    agora::EquilibriumCatalog catalog = agora::classify_equilibria(game);
    if (opt.as_json) {
        emit(agora::to_json(catalog), opt);
        return 0;
    }
    std::cout << "game a=" << game.a << " b=" << game.b << " c=" << game.c << " d=" << game.d
              << "\n";
    for (const auto& entry : catalog.entries) {
        std::cout << "  " << agora::scenario_name(entry.scenario);
        if (entry.is_interval) {
            const bool family_a = entry.scenario == agora::TwoAgentScenario::unilateral_full_A;
            std::cout << (family_a ? ": p*=1, q* in [" : ": q*=1, p* in [") << entry.interval_lo
                      << ", " << entry.interval_hi << ")";
        } else {
            std::cout << ": (p*, q*) = (" << entry.point.p << ", " << entry.point.q << ")";
        }
        std::cout << "  [" << entry.condition << "]";
        if (!entry.flag.empty()) {
            std::cout << " {" << entry.flag << "}";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_verify(const Options& opt) {
    agora::Economy economy = load_input(opt);
    const double tol = opt.tol > 0.0 ? opt.tol : agora::kDefaultEquilibriumTol;
    agora::EquilibriumReport report = agora::verify_equilibrium(economy, opt.resolution, tol);
    if (opt.as_json) {
        emit(agora::to_json(report), opt);
        return 0;
    }
    std::cout << (report.is_equilibrium ? "equilibrium" : "NOT an equilibrium")
              << " (tolerance " << report.tolerance << ")\n";
    for (const auto& row : report.per_agent) {
        std::cout << "  agent " << (row.agent + 1) << ": current " << row.current_utility
                  << ", best deviation " << row.deviation_utility << " (gap " << row.gap << ")\n";
    }
    return 0;
}

int run_scenario(const std::string& name, const std::vector<double>& params, const Options& opt) {
    agora::ScenarioSpec spec;
    if (name == "autarky") spec.name = agora::ScenarioName::autarky;
    else if (name == "isolated_dominant") spec.name = agora::ScenarioName::isolated_dominant;
    else if (name == "symmetric_triangle") spec.name = agora::ScenarioName::symmetric_triangle;
    else if (name == "rotation") spec.name = agora::ScenarioName::rotation;
    else if (name == "collaboration") spec.name = agora::ScenarioName::collaboration;
    else if (name == "segregation_four") spec.name = agora::ScenarioName::segregation_four;
    else {
        std::cerr << "error: unknown scenario \"" << name << "\"\n";
        return 4;
    }
    spec.parameters = params;
    agora::Economy economy = agora::make_scenario(spec);
    if (!opt.output.empty()) {
        agora::save_economy(economy, opt.output);
        if (!opt.as_json) {
            std::cout << "wrote " << name << " economy to " << opt.output << "\n";
            return 0;
        }
    }
    if (opt.as_json) {
        emit(agora::economy_to_json(economy), opt.output.empty() ? opt : Options{});
    } else {
        std::cout << agora::economy_to_json(economy).dump(2) << "\n";
    }
    return 0;
}

// End-to-end showcase: the seller with the highest per-dollar utility is not
// always the best supplier, because the choice also shapes the long-run
// currency distribution.
int run_demo(const Options& opt) {
    Eigen::MatrixXd spending(3, 3);
    spending << 1.0, 0.01, 0.5,
                0.0, 0.97, 0.01,
                0.0, 0.02, 0.49;
    Eigen::MatrixXd utility(3, 3);
    utility << 0.0, 1.0, 1.0,
               9.8, 0.0, 1.0,
               1.0, 1.0, 2.0;
    agora::Economy economy(std::move(spending), std::move(utility));

    agora::BestResponseResult grid = agora::best_response_grid_lp(economy, 0, opt.grid_points);
    agora::BestResponseResult brute = agora::best_response_brute_force(economy, 0, opt.resolution);
    Eigen::VectorXd all_on_two(3), all_on_three(3);
    all_on_two << 0.0, 1.0, 0.0;
    all_on_three << 0.0, 0.0, 1.0;
    const double rescored_three = agora::rescore_by_dynamics(economy, 0, all_on_three);
    const double rescored_two = agora::rescore_by_dynamics(economy, 0, all_on_two);

    if (opt.as_json) {
        json doc{{"grid_lp", agora::to_json(grid)},
                 {"brute_force", agora::to_json(brute)},
                 {"utility_all_on_agent_3", rescored_three},
                 {"utility_all_on_agent_2", rescored_two},
                 {"note",
                  "agent 1's best response sends everything to agent 3 even though agent 2 "
                  "offers 9.8 per dollar: agent 3 recycles far more currency back to agent 1"}};
        emit(doc, opt);
        return 0;
    }
    std::cout << "Agent 1 picks a supplier. Agent 2 pays 9.8 utility per dollar, agent 3 only "
                 "1.0,\nbut agent 3 sends half of its own spending back to agent 1.\n\n";
    print_vector(brute.column, "best response (brute force)");
    print_vector(grid.column, "best response (grid LP)");
    std::cout << "long-run utility all-on-3: " << rescored_three
              << "\nlong-run utility all-on-2: " << rescored_two << "\n";
    std::cout << "=> the 9.8-per-dollar seller is ignored; currency flow beats sticker price\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"solvers for currency-flow trading games between self-interested agents"};
    app.require_subcommand(1);

    Options opt;
    std::string scenario;
    std::vector<double> scenario_params;

    auto add_common = [&opt](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("input", opt.input, "economy JSON file")->required();
        }
        cmd->add_flag("--json", opt.as_json, "emit machine-readable JSON");
        cmd->add_option("--output", opt.output, "write the result to a file");
    };

    auto* validate_cmd = app.add_subcommand("validate", "check economy invariants");
    add_common(validate_cmd, true);

    auto* stationary_cmd =
        app.add_subcommand("stationary", "unique stationary currency distribution");
    add_common(stationary_cmd, true);

    auto* simulate_cmd = app.add_subcommand("simulate", "iterate the currency update, emit CSV");
    add_common(simulate_cmd, true);
    simulate_cmd->add_option("--episodes", opt.episodes, "episode budget");
    simulate_cmd->add_option("--tol", opt.tol, "convergence tolerance");

    auto* best_cmd = app.add_subcommand("best-response", "optimal spending column for one agent");
    add_common(best_cmd, true);
    best_cmd->add_option("--agent", opt.agent, "1-based agent index")->required();
    best_cmd->add_option("--grid", opt.grid_points, "grid points for the LP search");
    best_cmd->add_option("--resolution", opt.resolution, "lattice resolution for brute force");

    auto* classify_cmd = app.add_subcommand("classify2", "two-agent equilibrium catalog");
    add_common(classify_cmd, true);

    auto* verify_cmd = app.add_subcommand("verify", "Nash check by unilateral deviation search");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--resolution", opt.resolution, "deviation lattice resolution");
    verify_cmd->add_option("--tol", opt.tol, "equilibrium tolerance");

    auto* scenario_cmd = app.add_subcommand("scenario", "generate a named benchmark economy");
    add_common(scenario_cmd, false);
    scenario_cmd->add_option("--name", scenario, "scenario name")->required();
    scenario_cmd->add_option("--params", scenario_params, "scenario parameters");

    auto* demo_cmd = app.add_subcommand("demo", "three-agent supplier-choice showcase");
    add_common(demo_cmd, false);
    demo_cmd->add_option("--grid", opt.grid_points, "grid points for the LP search");
    demo_cmd->add_option("--resolution", opt.resolution, "lattice resolution for brute force");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate_cmd->parsed()) return run_validate(opt);
        if (stationary_cmd->parsed()) return run_stationary(opt);
        if (simulate_cmd->parsed()) return run_simulate(opt);
        if (best_cmd->parsed()) return run_best_response(opt);
        if (classify_cmd->parsed()) return run_classify2(opt);
        if (verify_cmd->parsed()) return run_verify(opt);
        if (scenario_cmd->parsed()) return run_scenario(scenario, scenario_params, opt);
        if (demo_cmd->parsed()) return run_demo(opt);
    } catch (const agora::SolverError& e) {
        json err{{"error", {{"code", agora::error_code_name(e.code())}, {"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
