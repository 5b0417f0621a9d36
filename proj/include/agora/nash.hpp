#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "agora/economy.hpp"

namespace agora {

inline constexpr double kDefaultEquilibriumTol = 1e-6;
inline constexpr int kDefaultDeviationResolution = 200;

/// Outcome of a unilateral-deviation search for one agent. agent == -1 marks
/// the coalition row produced by verify_collaboration.
struct AgentDeviationReport {
    Eigen::Index agent = 0;
    double current_utility = 0.0;
    Eigen::VectorXd best_deviation_column;
    double deviation_utility = 0.0;
    double gap = 0.0;  // deviation_utility - current_utility
};

struct EquilibriumReport {
    bool is_equilibrium = false;
    std::vector<AgentDeviationReport> per_agent;
    double tolerance = kDefaultEquilibriumTol;
};

enum class ScenarioName {
    autarky,
    isolated_dominant,
    symmetric_triangle,
    rotation,
    collaboration,
    segregation_four,
};

const char* scenario_label(ScenarioName name);

/// Scenario generators and their parameter lists (defaults applied when
/// `parameters` is empty):
///   autarky           [n, self_utility, cross_utility]  (3, 1, 3)
///   isolated_dominant [s1, a, b, c, d]                  (2, 1, 3, 3, 1)
///       s1: agent 1's self-utility, which must strictly exceed what agents
///       2 and 3 provide it (pinned at 1); (a,b,c,d): the game between
///       agents 2 and 3, placed at their bilateral-partial equilibrium when
///       b > 2a and c > 2d, else at no-adoption.
///   symmetric_triangle []   three agents, half on each neighbor, unit
///       cross utilities, zero self utility
///   rotation          []    spending permutation 1->2->3->1, same utilities
///   collaboration     [a, b, c, d]                      (1, 3, 3, 1)
///       agent 1 spends d/(2(c-d)) on each of agents 2 and 3; agents 2 and 3
///       each spend a/(b-a) on agent 1; requires a,d > 0, b > 2a, c > 2d.
///   segregation_four  [a1, b1, c1, d1, a2, b2, c2, d2]  (1, 3, 3, 1, 0.2, 0.5, 0.5, 0.2)
///       pair {1,2} plays game 1, pair {3,4} plays game 2, no cross-group
///       spending; every utility entry sold by {1,2} must strictly exceed
///       every entry sold by {3,4}.
struct ScenarioSpec {
    ScenarioName name = ScenarioName::autarky;
    std::vector<double> parameters;
};

/// Builds the exact spending/utility matrices the scenario describes.
/// Parameters violating a scenario's hypotheses throw
/// ErrorCode::precondition_failed naming the hypothesis.
Economy make_scenario(const ScenarioSpec& spec);

/// Unilateral-deviation Nash check: for each agent, the current
/// dynamics-scored utility is compared against the best deviation found by
/// exhaustive lattice search (n <= 4) or grid-LP search with dynamics
/// rescoring (n > 4). Deviation scoring always uses the dynamics from the
/// initial currency, matching how collapsed stationary mass punishes
/// disconnecting deviations.
EquilibriumReport verify_equilibrium(const Economy& economy,
                                     int resolution = kDefaultDeviationResolution,
                                     double tol = kDefaultEquilibriumTol);

/// Equilibrium check for the collaboration structure: agent 1 is verified
/// against all unilateral deviations, while agents 2 and 3 are treated as a
/// coalition restricted to the stated family — equal proportions sent to
/// agent 1, no trade between 2 and 3, combined utility objective — searched
/// one-dimensionally over the shared proportion. The coalition row reports
/// agent == -1 and agent 2's column.
EquilibriumReport verify_collaboration(const Economy& economy, double tol = kDefaultEquilibriumTol,
                                       int resolution = kDefaultDeviationResolution);

/// For the four-agent powerful/less-capable structure (groups {1,2} and
/// {3,4}): returns true iff every cross-group spending entry of `candidate`
/// is zero (entries > tol count as nonzero). `economy` supplies the utility
/// structure, whose strict-dominance hypothesis is validated.
bool check_segregation_necessity(const Economy& economy, const Economy& candidate,
                                 double tol = 0.0);

}  // namespace agora
