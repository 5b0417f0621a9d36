#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "agora/error.hpp"

namespace agora {

/// Admission tolerance for column sums and currency normalization.
inline constexpr double kStochasticTol = 1e-9;

/// A nonnegative currency allocation over the agents, normalized to total 1.
///
/// Entries coming out of linear solves may carry roundoff of order 1e-15;
/// the constructor clamps negatives within kStochasticTol to zero and
/// renormalizes, and rejects anything worse.
class CurrencyDistribution {
  public:
    explicit CurrencyDistribution(Eigen::VectorXd values);

    const Eigen::VectorXd& values() const { return values_; }
    double operator[](Eigen::Index i) const { return values_(i); }
    Eigen::Index size() const { return values_.size(); }

  private:
    Eigen::VectorXd values_;
};

struct Violation {
    std::string constraint;  // e.g. "column_sum", "negative_utility"
    Eigen::Index index;      // offending row or column, -1 when global
    double observed;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// The full game state: a spending matrix, a utility matrix and the initial
/// currency split.
///
/// spending(i, j) is the fraction of agent j's currency spent purchasing from
/// agent i (self-production when i == j); columns must sum to 1.
/// utility(i, j) is the per-dollar utility agent i provides agent j.
///
/// Construction checks shapes only (mismatches throw ErrorCode::
/// dimension_mismatch); value constraints are reported by validate() so that
/// malformed economies can be inspected rather than rejected outright.
/// Instances are immutable and safe to share across threads.
class Economy {
  public:
    /// Initial currency defaults to the uniform split 1/n.
    Economy(Eigen::MatrixXd spending, Eigen::MatrixXd utility);

    /// initial_currency is normalized to total 1 on construction when its sum
    /// is positive; a non-positive sum is left as-is for validate() to flag.
    Economy(Eigen::MatrixXd spending, Eigen::MatrixXd utility, Eigen::VectorXd initial_currency);

    Eigen::Index size() const { return spending_.rows(); }
    const Eigen::MatrixXd& spending() const { return spending_; }
    const Eigen::MatrixXd& utility() const { return utility_; }
    const Eigen::VectorXd& initial_currency() const { return initial_currency_; }

    /// Copy of this economy with agent's spending column replaced.
    Economy with_column(Eigen::Index agent, const Eigen::VectorXd& column) const;

  private:
    Eigen::MatrixXd spending_;
    Eigen::MatrixXd utility_;
    Eigen::VectorXd initial_currency_;
};

/// Reports every violated Economy invariant; a valid economy yields ok=true
/// and an empty list.
ValidationReport validate(const Economy& economy);

/// Throws SolverError(invalid_economy) listing the violations, if any.
void require_valid(const Economy& economy);

/// True iff the support graph (edge j -> i whenever spending(i, j) > 0) is
/// strongly connected. Entry positivity is a strict comparison: spending
/// fractions are inputs, not computed quantities.
bool is_irreducible(const Economy& economy);

/// The two-part sufficient condition for irreducibility: for every agent j,
/// (1) the support graph with j deleted stays strongly connected, and
/// (2) some k != j buys from j while j buys from some l != k.
/// A true result implies is_irreducible; false is inconclusive. A 1x1 deleted
/// submatrix (n == 2) counts as trivially strongly connected.
bool sufficient_irreducibility_check(const Economy& economy);

/// Tarjan SCCs of a directed graph given as adjacency lists.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& graph);

/// Adjacency lists of the spending support graph: adj[j] holds every i with
/// spending(i, j) > 0, i.e. the agents j's currency flows to.
std::vector<std::vector<int>> support_graph(const Eigen::MatrixXd& spending);

}  // namespace agora
