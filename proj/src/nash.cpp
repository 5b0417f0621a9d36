#include "agora/nash.hpp"

#include <cmath>
#include <sstream>

#include "agora/best_response.hpp"
#include "agora/dynamics.hpp"
#include "agora/two_agent.hpp"

namespace agora {

const char* scenario_label(ScenarioName name) {
    switch (name) {
        case ScenarioName::autarky: return "autarky";
        case ScenarioName::isolated_dominant: return "isolated_dominant";
        case ScenarioName::symmetric_triangle: return "symmetric_triangle";
        case ScenarioName::rotation: return "rotation";
        case ScenarioName::collaboration: return "collaboration";
        case ScenarioName::segregation_four: return "segregation_four";
    }
    return "unknown";
}

namespace {

[[noreturn]] void fail_precondition(const std::string& message) {
    throw SolverError(ErrorCode::precondition_failed, message);
}

std::vector<double> with_defaults(const std::vector<double>& given,
                                  std::vector<double> defaults) {
    if (given.empty()) {
        return defaults;
    }
    if (given.size() != defaults.size()) {
        std::ostringstream msg;
        msg << "scenario expects " << defaults.size() << " parameters, got " << given.size();
        fail_precondition(msg.str());
    }
    return given;
}

// Where a scenario embeds a two-agent sub-game, it is placed at the
// bilateral-partial equilibrium when both doubling conditions hold strictly,
// and at no-adoption otherwise.
TwoAgentStrategy preferred_pair_equilibrium(const TwoAgentGame& game) {
    if (game.b > 2.0 * game.a && game.c > 2.0 * game.d) {
        return {game.d / (game.c - game.d), game.a / (game.b - game.a)};
    }
    return {0.0, 0.0};
}

Economy make_autarky(const std::vector<double>& params) {
    auto p = with_defaults(params, {3.0, 1.0, 3.0});
    const auto n = static_cast<Eigen::Index>(p[0]);
    const double self_utility = p[1];
    const double cross_utility = p[2];
    if (n < 2 || p[0] != std::floor(p[0])) {
        fail_precondition("autarky scenario needs an integer agent count of at least 2");
    }
    if (self_utility < 0.0 || cross_utility < 0.0) {
        fail_precondition("utilities must be nonnegative");
    }
    Eigen::MatrixXd utility = Eigen::MatrixXd::Constant(n, n, cross_utility);
    utility.diagonal().setConstant(self_utility);
    return Economy(Eigen::MatrixXd::Identity(n, n), std::move(utility));
}

Economy make_isolated_dominant(const std::vector<double>& params) {
    auto p = with_defaults(params, {2.0, 1.0, 3.0, 3.0, 1.0});
    const double self_one = p[0];
    const TwoAgentGame pair{p[1], p[2], p[3], p[4]};
    if (!(self_one > 1.0)) {
        fail_precondition(
            "isolated dominant scenario: agent 1's self-utility must strictly exceed the unit "
            "utility other agents provide it");
    }
    TwoAgentStrategy s = preferred_pair_equilibrium(pair);

    Eigen::MatrixXd spending = Eigen::MatrixXd::Zero(3, 3);
    spending(0, 0) = 1.0;
    spending(1, 1) = 1.0 - s.p;
    spending(2, 1) = s.p;
    spending(1, 2) = s.q;
    spending(2, 2) = 1.0 - s.q;

    Eigen::MatrixXd utility = Eigen::MatrixXd::Ones(3, 3);
    utility(0, 0) = self_one;
    utility(1, 1) = pair.a;
    utility(2, 1) = pair.b;
    utility(1, 2) = pair.c;
    utility(2, 2) = pair.d;
    return Economy(std::move(spending), std::move(utility));
}

Economy make_symmetric_triangle() {
    Eigen::MatrixXd spending = Eigen::MatrixXd::Constant(3, 3, 0.5);
    spending.diagonal().setZero();
    Eigen::MatrixXd utility = Eigen::MatrixXd::Ones(3, 3);
    utility.diagonal().setZero();
    return Economy(std::move(spending), std::move(utility));
}

Economy make_rotation() {
    Eigen::MatrixXd spending = Eigen::MatrixXd::Zero(3, 3);
    spending(1, 0) = 1.0;  // agent 1 buys from agent 2
    spending(2, 1) = 1.0;  // agent 2 buys from agent 3
    spending(0, 2) = 1.0;  // agent 3 buys from agent 1
    Eigen::MatrixXd utility = Eigen::MatrixXd::Ones(3, 3);
    utility.diagonal().setZero();
    return Economy(std::move(spending), std::move(utility));
}

Economy make_collaboration(const std::vector<double>& params) {
    auto p = with_defaults(params, {1.0, 3.0, 3.0, 1.0});
    const double a = p[0], b = p[1], c = p[2], d = p[3];
    if (!(a > 0.0 && d > 0.0)) {
        fail_precondition("collaboration scenario: a and d must be positive");
    }
    if (!(b > 2.0 * a)) {
        fail_precondition("collaboration scenario: b must exceed 2a");
    }
    if (!(c > 2.0 * d)) {
        fail_precondition("collaboration scenario: c must exceed 2d");
    }
    const double hub_share = d / (2.0 * (c - d));   // agent 1's spend on each of 2 and 3
    const double spoke_share = a / (b - a);         // agents 2 and 3's spend on agent 1
    if (!(hub_share > 0.0 && hub_share < 0.5 && spoke_share > 0.0 && spoke_share < 1.0)) {
        fail_precondition("collaboration scenario: generated fractions must lie in (0, 1)");
    }

    Eigen::MatrixXd spending(3, 3);
    spending << 1.0 - 2.0 * hub_share, spoke_share, spoke_share,
                hub_share, 1.0 - spoke_share, 0.0,
                hub_share, 0.0, 1.0 - spoke_share;
    Eigen::MatrixXd utility(3, 3);
    utility << a, c, c,
               b, d, 0.0,
               b, 0.0, d;
    return Economy(std::move(spending), std::move(utility));
}

Economy make_segregation_four(const std::vector<double>& params) {
    auto p = with_defaults(params, {1.0, 3.0, 3.0, 1.0, 0.2, 0.5, 0.5, 0.2});
    const TwoAgentGame strong{p[0], p[1], p[2], p[3]};
    const TwoAgentGame weak{p[4], p[5], p[6], p[7]};
    const double strong_floor = std::min(std::min(strong.a, strong.b), std::min(strong.c, strong.d));
    const double weak_ceiling = std::max(std::max(weak.a, weak.b), std::max(weak.c, weak.d));
    if (!(strong_floor > weak_ceiling)) {
        fail_precondition(
            "segregation scenario: every powerful seller utility must strictly exceed every "
            "less-capable seller utility");
    }
    TwoAgentStrategy s1 = preferred_pair_equilibrium(strong);
    TwoAgentStrategy s2 = preferred_pair_equilibrium(weak);

    Eigen::MatrixXd spending = Eigen::MatrixXd::Zero(4, 4);
    spending(0, 0) = 1.0 - s1.p;
    spending(1, 0) = s1.p;
    spending(0, 1) = s1.q;
    spending(1, 1) = 1.0 - s1.q;
    spending(2, 2) = 1.0 - s2.p;
    spending(3, 2) = s2.p;
    spending(2, 3) = s2.q;
    spending(3, 3) = 1.0 - s2.q;

    // Sellers 1 and 2 (rows 0, 1) outclass sellers 3 and 4 for every buyer.
    Eigen::MatrixXd utility(4, 4);
    utility.topRows(2).setConstant(strong_floor);
    utility.bottomRows(2).setConstant(weak_ceiling);
    utility(0, 0) = strong.a;
    utility(1, 0) = strong.b;
    utility(0, 1) = strong.c;
    utility(1, 1) = strong.d;
    utility(2, 2) = weak.a;
    utility(3, 2) = weak.b;
    utility(2, 3) = weak.c;
    utility(3, 3) = weak.d;
    return Economy(std::move(spending), std::move(utility));
}

}  // namespace

Economy make_scenario(const ScenarioSpec& spec) {
    Economy economy = [&spec] {
        switch (spec.name) {
            case ScenarioName::autarky: return make_autarky(spec.parameters);
            case ScenarioName::isolated_dominant: return make_isolated_dominant(spec.parameters);
            case ScenarioName::symmetric_triangle: return make_symmetric_triangle();
            case ScenarioName::rotation: return make_rotation();
            case ScenarioName::collaboration: return make_collaboration(spec.parameters);
            case ScenarioName::segregation_four: return make_segregation_four(spec.parameters);
        }
        fail_precondition("unknown scenario");
    }();
    require_valid(economy);
    return economy;
}

EquilibriumReport verify_equilibrium(const Economy& economy, int resolution, double tol) {
    require_valid(economy);
    if (resolution < 10) {
        fail_precondition("deviation search resolution must be at least 10");
    }
    if (!(tol > 0.0)) {
        fail_precondition("tolerance must be positive");
    }
    const Eigen::Index n = economy.size();
    const Eigen::VectorXd current = asymptotic_utilities(economy).per_agent;

    EquilibriumReport report;
    report.tolerance = tol;
    report.is_equilibrium = true;
    for (Eigen::Index j = 0; j < n; ++j) {
        Eigen::VectorXd deviation_column;
        double deviation_utility = 0.0;
        if (n <= 4) {
            BestResponseResult best = best_response_brute_force(economy, j, resolution);
            deviation_column = std::move(best.column);
            deviation_utility = best.utility;
        } else {
            // The exhaustive lattice is impractical here; take the grid-LP
            // column and rescore it by the dynamics so the verdict uses the
            // same scoring as the small-n path.
            BestResponseResult best = best_response_grid_lp(economy, j, resolution + 1);
            deviation_utility = rescore_by_dynamics(economy, j, best.column);
            deviation_column = std::move(best.column);
        }
        const double gap = deviation_utility - current(j);
        if (gap > tol) {
            report.is_equilibrium = false;
        }
        report.per_agent.push_back(
            {j, current(j), std::move(deviation_column), deviation_utility, gap});
    }
    return report;
}

EquilibriumReport verify_collaboration(const Economy& economy, double tol, int resolution) {
    require_valid(economy);
    if (economy.size() != 3) {
        fail_precondition("collaboration verification applies to exactly three agents");
    }
    if (resolution < 10) {
        fail_precondition("deviation search resolution must be at least 10");
    }
    if (!(tol > 0.0)) {
        fail_precondition("tolerance must be positive");
    }
    const auto& P = economy.spending();
    if (P(1, 2) != 0.0 || P(2, 1) != 0.0) {
        fail_precondition("collaboration structure: agents 2 and 3 must not trade with each other");
    }
    if (std::abs(P(0, 1) - P(0, 2)) > 1e-12) {
        fail_precondition(
            "collaboration structure: agents 2 and 3 must send equal proportions to agent 1");
    }

    const Eigen::VectorXd current = asymptotic_utilities(economy).per_agent;
    EquilibriumReport report;
    report.tolerance = tol;
    report.is_equilibrium = true;

    // Agent 1 faces every unilateral deviation.
    BestResponseResult hub = best_response_brute_force(economy, 0, resolution);
    const double hub_gap = hub.utility - current(0);
    if (hub_gap > tol) {
        report.is_equilibrium = false;
    }
    report.per_agent.push_back({0, current(0), std::move(hub.column), hub.utility, hub_gap});

    // The coalition moves jointly within its stated family: both members send
    // the same share to agent 1, keep the rest at home, and maximize the
    // combined utility. One-dimensional scan over the shared share.
    const double current_combined = current(1) + current(2);
    double best_combined = current_combined;
    double best_share = P(0, 1);
    for (int g = 0; g <= resolution; ++g) {
        const double share = static_cast<double>(g) / static_cast<double>(resolution);
        Eigen::VectorXd spoke(3);
        spoke << share, 1.0 - share, 0.0;
        Economy joint = economy.with_column(1, spoke);
        spoke << share, 0.0, 1.0 - share;
        joint = joint.with_column(2, spoke);
        const Eigen::VectorXd utilities = asymptotic_utilities(joint).per_agent;
        const double combined = utilities(1) + utilities(2);
        if (combined > best_combined) {
            best_combined = combined;
            best_share = share;
        }
    }
    Eigen::VectorXd coalition_column(3);
    coalition_column << best_share, 1.0 - best_share, 0.0;
    const double coalition_gap = best_combined - current_combined;
    if (coalition_gap > tol) {
        report.is_equilibrium = false;
    }
    report.per_agent.push_back(
        {-1, current_combined, std::move(coalition_column), best_combined, coalition_gap});
    return report;
}

bool check_segregation_necessity(const Economy& economy, const Economy& candidate, double tol) {
    require_valid(economy);
    require_valid(candidate);
    if (economy.size() != 4 || candidate.size() != 4) {
        fail_precondition("segregation check applies to exactly four agents");
    }
    if (tol < 0.0) {
        fail_precondition("tolerance must be nonnegative");
    }
    const auto& U = economy.utility();
    const double strong_floor = U.topRows(2).minCoeff();
    const double weak_ceiling = U.bottomRows(2).maxCoeff();
    if (!(strong_floor > weak_ceiling)) {
        fail_precondition(
            "segregation check: every powerful seller utility must strictly exceed every "
            "less-capable seller utility");
    }
    const auto& P = candidate.spending();
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            const bool cross_group = (i < 2) != (j < 2);
            if (cross_group && P(i, j) > tol) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace agora
