#include "agora/best_response.hpp"

#include <cmath>
#include <optional>
#include <sstream>

namespace agora {

const char* method_name(BestResponseMethod method) {
    switch (method) {
        case BestResponseMethod::grid_lp: return "grid_lp";
        case BestResponseMethod::brute_force: return "brute_force";
        case BestResponseMethod::dynamics_rescored: return "dynamics_rescored";
    }
    return "unknown";
}

namespace {

constexpr double kTieTol = 1e-9;

void check_agent(const Economy& economy, Eigen::Index agent) {
    if (agent < 0 || agent >= economy.size()) {
        throw SolverError(ErrorCode::dimension_mismatch, "agent index out of range");
    }
}

// Argmax tie rule: higher utility wins; within a 1e-9 band, prefer the larger
// self-spend entry, then the lexicographically smaller column. The rule is a
// pure comparison, so the reduction is order-independent up to exact ties.
bool candidate_improves(double utility, const Eigen::VectorXd& column, Eigen::Index agent,
                        double best_utility, const Eigen::VectorXd& best_column) {
    if (best_column.size() == 0) return true;
    if (utility > best_utility + kTieTol) return true;
    if (utility < best_utility - kTieTol) return false;
    if (column(agent) > best_column(agent) + 1e-12) return true;
    if (column(agent) < best_column(agent) - 1e-12) return false;
    for (Eigen::Index i = 0; i < column.size(); ++i) {
        if (column(i) < best_column(i) - 1e-12) return true;
        if (column(i) > best_column(i) + 1e-12) return false;
    }
    return false;
}

Eigen::VectorXd cleaned_column(const Eigen::VectorXd& column) {
    Eigen::VectorXd cleaned = column.cwiseMax(0.0);
    cleaned /= cleaned.sum();
    return cleaned;
}

}  // namespace

LinearProgram stationary_response_lp(const Economy& economy, Eigen::Index agent, double mass) {
    check_agent(economy, agent);
    if (!(mass >= 0.0 && mass <= 1.0)) {
        throw SolverError(ErrorCode::precondition_failed, "stationary mass must lie in [0, 1]");
    }
    const Eigen::Index n = economy.size();
    const auto& P = economy.spending();
    const auto& U = economy.utility();
    const Eigen::Index vars = 2 * n - 1;
    const Eigen::Index column_offset = n - 1;
    auto x_pos = [agent](Eigen::Index i) { return i < agent ? i : i - 1; };

    LinearProgram lp;
    lp.eq_lhs = Eigen::MatrixXd::Zero(n + 2, vars);
    lp.eq_rhs = Eigen::VectorXd::Zero(n + 2);
    lp.objective = Eigen::VectorXd::Zero(vars);

    // Balance rows: sum_i P(k, i) x_i = x_k with x_agent pinned to `mass` and
    // the agent's own column entries as variables (their products with
    // x_agent are linear because the mass is fixed).
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == agent) continue;
            lp.eq_lhs(k, x_pos(i)) += P(k, i);
        }
        if (k != agent) {
            lp.eq_lhs(k, x_pos(k)) -= 1.0;
        }
        lp.eq_lhs(k, column_offset + k) += mass;
        lp.eq_rhs(k) = (k == agent) ? mass : 0.0;
    }
    // Total currency: sum of the free entries is 1 - mass.
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i != agent) lp.eq_lhs(n, x_pos(i)) = 1.0;
    }
    lp.eq_rhs(n) = 1.0 - mass;
    // The column is a spending distribution.
    lp.eq_lhs.row(n + 1).segment(column_offset, n).setOnes();
    lp.eq_rhs(n + 1) = 1.0;

    for (Eigen::Index i = 0; i < n; ++i) {
        lp.objective(column_offset + i) = mass * U(i, agent);
    }
    return lp;
}

BestResponseResult best_response_grid_lp(const Economy& economy, Eigen::Index agent,
                                         int grid_points) {
    require_valid(economy);
    check_agent(economy, agent);
    if (grid_points < 2) {
        throw SolverError(ErrorCode::precondition_failed, "grid search needs at least two points");
    }
    const Eigen::Index n = economy.size();

    double best_utility = 0.0;
    Eigen::VectorXd best_column;
    Eigen::VectorXd best_x;
    for (int g = 0; g < grid_points; ++g) {
        const double mass = static_cast<double>(g) / static_cast<double>(grid_points - 1);
        LpSolution sol = solve_lp(stationary_response_lp(economy, agent, mass));
        if (sol.status != LpStatus::optimal) {
            continue;
        }
        Eigen::VectorXd column = cleaned_column(sol.values.segment(n - 1, n));
        if (candidate_improves(sol.objective, column, agent, best_utility, best_column)) {
            best_utility = sol.objective;
            best_column = std::move(column);
            best_x.resize(n);
            for (Eigen::Index i = 0, pos = 0; i < n; ++i) {
                best_x(i) = (i == agent) ? mass : sol.values(pos++);
            }
        }
    }
    if (best_column.size() == 0) {
        // The full self-spend column with mass 1 is always stationary-feasible
        // for a validated economy, so an empty sweep indicates a solver defect.
        throw SolverError(ErrorCode::internal,
                          "every grid LP was infeasible for a validated economy");
    }
    return BestResponseResult{agent, std::move(best_column), CurrencyDistribution(std::move(best_x)),
                              best_utility, BestResponseMethod::grid_lp};
}

BestResponseResult best_response_brute_force(const Economy& economy, Eigen::Index agent,
                                             int resolution) {
    require_valid(economy);
    check_agent(economy, agent);
    if (resolution < 1) {
        throw SolverError(ErrorCode::precondition_failed, "lattice resolution must be at least 1");
    }
    const Eigen::VectorXd own_utilities = economy.utility().col(agent);

    double best_utility = 0.0;
    Eigen::VectorXd best_column;
    std::optional<CurrencyDistribution> best_x;
    for_each_simplex_column(economy.size(), resolution, [&](const Eigen::VectorXd& column) {
        Economy swapped = economy.with_column(agent, column);
        CurrencyDistribution x = long_run_distribution(swapped);
        const double utility = x[agent] * column.dot(own_utilities);
        if (candidate_improves(utility, column, agent, best_utility, best_column)) {
            best_utility = utility;
            best_column = column;
            best_x = std::move(x);
        }
    });
    return BestResponseResult{agent, std::move(best_column), std::move(*best_x), best_utility,
                              BestResponseMethod::brute_force};
}

double rescore_by_dynamics(const Economy& economy, Eigen::Index agent,
                           const Eigen::VectorXd& column) {
    require_valid(economy);
    check_agent(economy, agent);
    if (column.size() != economy.size()) {
        throw SolverError(ErrorCode::dimension_mismatch, "spending column has wrong length");
    }
    if (column.minCoeff() < -kStochasticTol || std::abs(column.sum() - 1.0) > kStochasticTol) {
        std::ostringstream msg;
        msg << "spending column is not a distribution (min " << column.minCoeff() << ", sum "
            << column.sum() << ")";
        throw SolverError(ErrorCode::precondition_failed, msg.str());
    }
    Eigen::VectorXd cleaned = cleaned_column(column);
    Economy swapped = economy.with_column(agent, cleaned);
    return long_run_distribution(swapped)[agent] * cleaned.dot(economy.utility().col(agent));
}

void for_each_simplex_column(Eigen::Index n, int resolution,
                             const std::function<void(const Eigen::VectorXd&)>& visit) {
    if (n < 1 || resolution < 1) {
        throw SolverError(ErrorCode::precondition_failed,
                          "simplex lattice needs n >= 1 and resolution >= 1");
    }
    std::vector<int> counts(static_cast<size_t>(n), 0);
    Eigen::VectorXd column(n);
    auto emit = [&]() {
        for (Eigen::Index i = 0; i < n; ++i) {
            column(i) = static_cast<double>(counts[static_cast<size_t>(i)]) /
                        static_cast<double>(resolution);
        }
        visit(column);
    };
    auto recurse = [&](auto&& self, Eigen::Index pos, int remaining) -> void {
        if (pos == n - 1) {
            counts[static_cast<size_t>(pos)] = remaining;
            emit();
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            counts[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, remaining - k);
        }
    };
    recurse(recurse, 0, resolution);
}

}  // namespace agora
