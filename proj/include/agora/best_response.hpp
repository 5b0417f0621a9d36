#pragma once

#include <Eigen/Dense>
#include <functional>

#include "agora/dynamics.hpp"
#include "agora/economy.hpp"
#include "agora/lp.hpp"

namespace agora {

inline constexpr int kDefaultGridPoints = 1001;
inline constexpr int kDefaultLatticeResolution = 200;

enum class BestResponseMethod { grid_lp, brute_force, dynamics_rescored };

const char* method_name(BestResponseMethod method);

struct BestResponseResult {
    Eigen::Index agent = 0;
    Eigen::VectorXd column;           // the optimizing spending column for `agent`
    CurrencyDistribution stationary;  // the supporting currency vector
    double utility = 0.0;
    BestResponseMethod method = BestResponseMethod::grid_lp;
};

/// The inner linear program of the grid search: with x_agent pinned to
/// `mass`, the stationary conditions become linear in the remaining currency
/// entries and in the agent's own column. Variables are ordered
/// [x_i for i != agent] then [column entries c_0..c_{n-1}], all >= 0;
/// the objective is mass * sum_i U(i, agent) c_i.
LinearProgram stationary_response_lp(const Economy& economy, Eigen::Index agent, double mass);

/// One-dimensional search over the agent's stationary mass on a uniform
/// grid over [0, 1] (endpoints included), solving the inner LP at each grid
/// value and keeping the best. The reported utility is the winning LP
/// objective; it is optimistic on deviations that disconnect the chain,
/// because the LP may pick any stationary vector while the dynamics are tied
/// to the initial currency (see rescore_by_dynamics).
///
/// Ties within 1e-9 prefer the larger self-spend column entry, then the
/// lexicographically smaller column.
BestResponseResult best_response_grid_lp(const Economy& economy, Eigen::Index agent,
                                         int grid_points = kDefaultGridPoints);

/// Independent oracle: enumerates every spending column on the simplex
/// lattice with entries in multiples of 1/resolution, scores each by the
/// dynamics (stationary when irreducible, Cesaro average otherwise) and
/// returns the maximizer under the same tie rule. Exhaustive, so intended
/// for small n (<= 4).
BestResponseResult best_response_brute_force(const Economy& economy, Eigen::Index agent,
                                             int resolution = kDefaultLatticeResolution);

/// Utility of `agent` after substituting `column` as its spending column,
/// scored by the dynamics from initial_currency. Reconciles the LP's
/// optimistic stationary choice on reducible deviations.
double rescore_by_dynamics(const Economy& economy, Eigen::Index agent,
                           const Eigen::VectorXd& column);

/// Visits every length-n column with entries k/resolution summing to 1, in
/// lexicographic order of the leading entries.
void for_each_simplex_column(Eigen::Index n, int resolution,
                             const std::function<void(const Eigen::VectorXd&)>& visit);

}  // namespace agora
