#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "agora/economy.hpp"

namespace agora {

inline constexpr long kDefaultEpisodes = 100000;
inline constexpr double kDefaultConvergenceTol = 1e-10;

/// Record of one run of the currency update x^{t+1} = P x^t.
///
/// cesaro_average estimates the long-run time average of the trajectory. It
/// is computed over doubling windows [2^k, 2^{k+1}): successive window
/// averages share the Cesaro limit but converge geometrically on aperiodic
/// chains and are exact on even-period cycles, where the plain running mean
/// decays only like 1/T. converged is set when two consecutive window
/// averages differ by less than the requested tolerance in L1; final_delta
/// is that last difference.
struct SimulationTrace {
    long episodes = 0;  // update steps actually performed
    std::vector<std::pair<long, Eigen::VectorXd>> trajectory;  // thinned (episode, x)
    CurrencyDistribution cesaro_average;
    bool converged = false;
    double final_delta = 0.0;
};

/// per_agent[j] = x_j * sum_i spending(i, j) * utility(i, j).
struct UtilityProfile {
    Eigen::VectorXd per_agent;
};

/// The unique x with Px = x, x >= 0, sum 1. Requires an irreducible economy;
/// reducible ones throw ErrorCode::reducible_chain directing callers to the
/// Cesaro average. Solved directly via (I - P)x = 0 with one redundant row
/// replaced by the normalization sum(x) = 1.
CurrencyDistribution stationary_distribution(const Economy& economy);

/// Closed-form stationary vector for n == 3, valid when the reduced 2x2
/// system's determinant is nonzero:
///
///   delta = (P12+P32+P23)(P21+P31+P13) - (P12-P13)(P21-P23)
///   x1 = (P13(P12+P32+P23) + P23(P12-P13)) / delta
///   x2 = (P23(P21+P31+P13) + P13(P21-P23)) / delta
///   x3 = 1 - x1 - x2
///
/// (1-based indices). |delta| below 1e-12 throws ErrorCode::singular_system;
/// n != 3 throws ErrorCode::dimension_mismatch.
CurrencyDistribution stationary_three_agent_closed_form(const Economy& economy);

/// Determinant of the reduced stationary system for n == 3.
double three_agent_determinant(const Economy& economy);

/// Iterates the currency update from initial_currency for at most `episodes`
/// steps (stopping early once converged). Each iterate is renormalized to
/// total exactly 1, so currency conservation holds to machine precision.
SimulationTrace simulate(const Economy& economy, long episodes = kDefaultEpisodes,
                         double convergence_tol = kDefaultConvergenceTol);

/// Exact Cesaro limit of the currency trajectory from initial_currency,
/// computed structurally: currency is absorbed into the closed classes of
/// the support graph, and the time average inside each class is that class's
/// stationary vector scaled by the absorbed mass. Transient agents end at
/// zero. Agrees with simulate()'s estimate but is exact to roundoff.
CurrencyDistribution cesaro_limit(const Economy& economy);

/// The distribution that weights long-run utilities: the stationary vector
/// when the chain is irreducible, otherwise the Cesaro limit of the
/// trajectory started from initial_currency.
CurrencyDistribution long_run_distribution(const Economy& economy);

/// Asymptotic utility per episode of every agent under long_run_distribution.
UtilityProfile asymptotic_utilities(const Economy& economy);

}  // namespace agora
