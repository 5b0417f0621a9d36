#include "agora/economy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace agora {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::dimension_mismatch: return "dimension_mismatch";
        case ErrorCode::invalid_economy: return "invalid_economy";
        case ErrorCode::reducible_chain: return "reducible_chain";
        case ErrorCode::singular_system: return "singular_system";
        case ErrorCode::precondition_failed: return "precondition_failed";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

CurrencyDistribution::CurrencyDistribution(Eigen::VectorXd values) : values_(std::move(values)) {
    if (values_.size() == 0) {
        throw SolverError(ErrorCode::dimension_mismatch, "currency distribution is empty");
    }
    for (Eigen::Index i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_(i)) || values_(i) < -kStochasticTol) {
            std::ostringstream msg;
            msg << "currency distribution entry " << i << " is " << values_(i);
            throw SolverError(ErrorCode::invalid_economy, msg.str());
        }
        values_(i) = std::max(values_(i), 0.0);
    }
    double total = values_.sum();
    if (std::abs(total - 1.0) > kStochasticTol) {
        std::ostringstream msg;
        msg << "currency distribution sums to " << total << ", expected 1";
        throw SolverError(ErrorCode::invalid_economy, msg.str());
    }
    values_ /= total;
}

namespace {

void check_shapes(const Eigen::MatrixXd& spending, const Eigen::MatrixXd& utility,
                  const Eigen::VectorXd& initial_currency) {
    const Eigen::Index n = spending.rows();
    if (n == 0 || spending.cols() != n) {
        throw SolverError(ErrorCode::dimension_mismatch, "spending matrix must be square and nonempty");
    }
    if (utility.rows() != n || utility.cols() != n) {
        throw SolverError(ErrorCode::dimension_mismatch,
                          "utility matrix shape does not match the spending matrix");
    }
    if (initial_currency.size() != n) {
        throw SolverError(ErrorCode::dimension_mismatch,
                          "initial currency length does not match the agent count");
    }
}

Eigen::VectorXd normalized_currency(Eigen::VectorXd x) {
    double total = x.sum();
    if (std::isfinite(total) && total > 0.0) {
        x /= total;
    }
    return x;
}

}  // namespace

Economy::Economy(Eigen::MatrixXd spending, Eigen::MatrixXd utility)
    : spending_(std::move(spending)), utility_(std::move(utility)) {
    const Eigen::Index n = std::max<Eigen::Index>(spending_.rows(), 1);
    initial_currency_ = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
    check_shapes(spending_, utility_, initial_currency_);
}

Economy::Economy(Eigen::MatrixXd spending, Eigen::MatrixXd utility, Eigen::VectorXd initial_currency)
    : spending_(std::move(spending)),
      utility_(std::move(utility)),
      initial_currency_(std::move(initial_currency)) {
    check_shapes(spending_, utility_, initial_currency_);
    initial_currency_ = normalized_currency(std::move(initial_currency_));
}

Economy Economy::with_column(Eigen::Index agent, const Eigen::VectorXd& column) const {
    if (agent < 0 || agent >= size()) {
        throw SolverError(ErrorCode::dimension_mismatch, "agent index out of range");
    }
    if (column.size() != size()) {
        throw SolverError(ErrorCode::dimension_mismatch, "spending column has wrong length");
    }
    Eigen::MatrixXd spending = spending_;
    spending.col(agent) = column;
    return Economy(std::move(spending), utility_, initial_currency_);
}

ValidationReport validate(const Economy& economy) {
    ValidationReport report;
    const Eigen::Index n = economy.size();
    const auto& P = economy.spending();
    const auto& U = economy.utility();
    const auto& x0 = economy.initial_currency();

    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!(P(i, j) >= 0.0 && P(i, j) <= 1.0)) {
                report.violations.push_back({"spending_entry_range", i * n + j, P(i, j)});
            }
            if (!(U(i, j) >= 0.0)) {
                report.violations.push_back({"negative_utility", i * n + j, U(i, j)});
            }
        }
        double column_sum = P.col(j).sum();
        if (std::abs(column_sum - 1.0) > kStochasticTol) {
            report.violations.push_back({"column_sum", j, column_sum});
        }
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(x0(i) >= 0.0)) {
            report.violations.push_back({"negative_initial_currency", i, x0(i)});
        }
    }
    double currency_sum = x0.sum();
    if (std::abs(currency_sum - 1.0) > kStochasticTol) {
        report.violations.push_back({"initial_currency_sum", -1, currency_sum});
    }

    report.ok = report.violations.empty();
    return report;
}

void require_valid(const Economy& economy) {
    ValidationReport report = validate(economy);
    if (report.ok) {
        return;
    }
    std::ostringstream msg;
    msg << "economy fails validation:";
    for (const auto& v : report.violations) {
        msg << " [" << v.constraint << " at " << v.index << ", observed " << v.observed << "]";
    }
    throw SolverError(ErrorCode::invalid_economy, msg.str());
}

std::vector<std::vector<int>> support_graph(const Eigen::MatrixXd& spending) {
    const Eigen::Index n = spending.rows();
    std::vector<std::vector<int>> adjacency(static_cast<size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            if (spending(i, j) > 0.0) {
                adjacency[static_cast<size_t>(j)].push_back(static_cast<int>(i));
            }
        }
    }
    return adjacency;
}

namespace {

void tarjan_dfs(const std::vector<std::vector<int>>& graph, int vertex,
                std::vector<int>& dfs_numbers, std::vector<int>& dfs_minima,
                std::vector<int>& stack_indices, std::vector<int>& stack, int& next_dfs_number,
                std::vector<std::vector<int>>& sccs) {
    const int own_number = next_dfs_number++;
    dfs_numbers[vertex] = dfs_minima[vertex] = own_number;
    stack_indices[vertex] = static_cast<int>(stack.size());
    stack.push_back(vertex);

    for (int succ : graph[static_cast<size_t>(vertex)]) {
        if (dfs_numbers[succ] == -1) {
            tarjan_dfs(graph, succ, dfs_numbers, dfs_minima, stack_indices, stack, next_dfs_number,
                       sccs);
            dfs_minima[vertex] = std::min(dfs_minima[vertex], dfs_minima[succ]);
        } else if (dfs_numbers[succ] < own_number && stack_indices[succ] != -1) {
            dfs_minima[vertex] = std::min(dfs_minima[vertex], dfs_numbers[succ]);
        }
    }

    if (dfs_minima[vertex] == own_number) {
        std::vector<int> component;
        const int base = stack_indices[vertex];
        for (size_t i = static_cast<size_t>(base); i < stack.size(); ++i) {
            component.push_back(stack[i]);
            stack_indices[stack[i]] = -1;
        }
        stack.erase(stack.begin() + base, stack.end());
        sccs.push_back(std::move(component));
    }
}

}  // namespace

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& graph) {
    const int node_count = static_cast<int>(graph.size());
    std::vector<int> dfs_numbers(static_cast<size_t>(node_count), -1);
    std::vector<int> dfs_minima(static_cast<size_t>(node_count), -1);
    std::vector<int> stack_indices(static_cast<size_t>(node_count), -1);
    std::vector<int> stack;
    int next_dfs_number = 0;

    std::vector<std::vector<int>> sccs;
    for (int v = 0; v < node_count; ++v) {
        if (dfs_numbers[v] == -1) {
            tarjan_dfs(graph, v, dfs_numbers, dfs_minima, stack_indices, stack, next_dfs_number,
                       sccs);
        }
    }
    return sccs;
}

bool is_irreducible(const Economy& economy) {
    require_valid(economy);
    auto sccs = strongly_connected_components(support_graph(economy.spending()));
    return sccs.size() == 1;
}

namespace {

bool subgraph_strongly_connected(const Eigen::MatrixXd& spending, Eigen::Index excluded) {
    const Eigen::Index n = spending.rows();
    // Remap the surviving agents to 0..n-2 and run SCC on the induced graph.
    std::vector<int> index(static_cast<size_t>(n), -1);
    int next = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (i != excluded) {
            index[static_cast<size_t>(i)] = next++;
        }
    }
    std::vector<std::vector<int>> adjacency(static_cast<size_t>(next));
    for (Eigen::Index j = 0; j < n; ++j) {
        if (j == excluded) continue;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (i == excluded || spending(i, j) <= 0.0) continue;
            adjacency[static_cast<size_t>(index[static_cast<size_t>(j)])].push_back(
                index[static_cast<size_t>(i)]);
        }
    }
    return strongly_connected_components(adjacency).size() == 1;
}

}  // namespace

bool sufficient_irreducibility_check(const Economy& economy) {
    require_valid(economy);
    const Eigen::Index n = economy.size();
    if (n < 2) {
        throw SolverError(ErrorCode::precondition_failed,
                          "the sufficient irreducibility check needs at least two agents");
    }
    const auto& P = economy.spending();
    for (Eigen::Index j = 0; j < n; ++j) {
        // Part 1: the support graph without agent j stays strongly connected
        // (a single remaining agent counts as trivially connected).
        if (!subgraph_strongly_connected(P, j)) {
            return false;
        }
        // Part 2: some k != j buys from j, and j buys from some l != k.
        bool part_two = false;
        for (Eigen::Index k = 0; k < n && !part_two; ++k) {
            if (k == j || P(j, k) <= 0.0) continue;
            for (Eigen::Index l = 0; l < n; ++l) {
                if (l != k && P(l, j) > 0.0) {
                    part_two = true;
                    break;
                }
            }
        }
        if (!part_two) {
            return false;
        }
    }
    return true;
}

}  // namespace agora
