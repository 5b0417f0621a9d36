#include "agora/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace agora {

CurrencyDistribution stationary_distribution(const Economy& economy) {
    if (!is_irreducible(economy)) {
        throw SolverError(ErrorCode::reducible_chain,
                          "the spending graph is not strongly connected, so there is no unique "
                          "stationary distribution; use the Cesaro average from simulate()");
    }
    const Eigen::Index n = economy.size();
    const auto& P = economy.spending();

    // (I - P) x = 0 has rank n-1 for an irreducible chain and its rows sum to
    // zero, so any single row may be replaced by the normalization sum(x) = 1.
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - P;
    system.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;

    Eigen::VectorXd x = system.fullPivLu().solve(rhs);
    double residual = (P * x - x).lpNorm<1>();
    if (!std::isfinite(residual) || residual > kStochasticTol) {
        std::ostringstream msg;
        msg << "stationary solve residual " << residual << " exceeds tolerance";
        throw SolverError(ErrorCode::internal, msg.str());
    }
    return CurrencyDistribution(std::move(x));
}

double three_agent_determinant(const Economy& economy) {
    if (economy.size() != 3) {
        throw SolverError(ErrorCode::dimension_mismatch,
                          "the closed-form stationary solution applies to exactly three agents");
    }
    const auto& P = economy.spending();
    const double p12 = P(0, 1), p13 = P(0, 2);
    const double p21 = P(1, 0), p23 = P(1, 2);
    const double p31 = P(2, 0), p32 = P(2, 1);
    return (p12 + p32 + p23) * (p21 + p31 + p13) - (p12 - p13) * (p21 - p23);
}

CurrencyDistribution stationary_three_agent_closed_form(const Economy& economy) {
    require_valid(economy);
    const double delta = three_agent_determinant(economy);
    if (std::abs(delta) < 1e-12) {
        std::ostringstream msg;
        msg << "reduced stationary system is singular (determinant " << delta << ")";
        throw SolverError(ErrorCode::singular_system, msg.str());
    }
    const auto& P = economy.spending();
    const double p12 = P(0, 1), p13 = P(0, 2);
    const double p21 = P(1, 0), p23 = P(1, 2);
    const double p31 = P(2, 0), p32 = P(2, 1);

    Eigen::VectorXd x(3);
    x(0) = (p13 * (p12 + p32 + p23) + p23 * (p12 - p13)) / delta;
    x(1) = (p23 * (p21 + p31 + p13) + p13 * (p21 - p23)) / delta;
    x(2) = 1.0 - x(0) - x(1);
    return CurrencyDistribution(std::move(x));
}

SimulationTrace simulate(const Economy& economy, long episodes, double convergence_tol) {
    require_valid(economy);
    if (episodes < 1) {
        throw SolverError(ErrorCode::precondition_failed, "episodes must be at least 1");
    }
    if (!(convergence_tol > 0.0)) {
        throw SolverError(ErrorCode::precondition_failed, "convergence tolerance must be positive");
    }
    const auto& P = economy.spending();
    Eigen::VectorXd x = economy.initial_currency();

    const long stride = std::max<long>(1, episodes / 1000);
    std::vector<std::pair<long, Eigen::VectorXd>> trajectory;
    trajectory.emplace_back(0, x);

    // Doubling-window time averages: window k covers the 2^k iterates
    // t in (2^k - 1, 2^{k+1} - 1]. Successive window averages converge to the
    // Cesaro limit geometrically on aperiodic chains and cancel exactly on
    // even-period cycles.
    Eigen::VectorXd window_sum = Eigen::VectorXd::Zero(x.size());
    long window_length = 1;
    long in_window = 0;
    Eigen::VectorXd previous_average = x;  // x^0 seeds the first comparison
    Eigen::VectorXd cesaro = x;
    bool converged = false;
    double final_delta = 0.0;
    bool have_delta = false;

    long t = 0;
    while (t < episodes && !converged) {
        x = P * x;
        x /= x.sum();  // currency is conserved; pin the total at exactly 1
        ++t;
        if (t % stride == 0) {
            trajectory.emplace_back(t, x);
        }
        window_sum += x;
        ++in_window;
        if (in_window == window_length) {
            Eigen::VectorXd average = window_sum / static_cast<double>(window_length);
            final_delta = (average - previous_average).lpNorm<1>();
            have_delta = true;
            cesaro = average;
            if (final_delta < convergence_tol) {
                converged = true;
            }
            previous_average = std::move(average);
            window_sum.setZero();
            in_window = 0;
            window_length *= 2;
        }
    }
    if (trajectory.back().first != t) {
        trajectory.emplace_back(t, x);
    }

    SimulationTrace trace{t, std::move(trajectory), CurrencyDistribution(std::move(cesaro)),
                          converged, have_delta ? final_delta : 0.0};
    return trace;
}

namespace {

// Stationary vector of an irreducible column-stochastic block, one redundant
// row replaced by the normalization.
Eigen::VectorXd stationary_of_block(const Eigen::MatrixXd& block) {
    const Eigen::Index n = block.rows();
    if (n == 1) {
        return Eigen::VectorXd::Ones(1);
    }
    Eigen::MatrixXd system = Eigen::MatrixXd::Identity(n, n) - block;
    system.row(n - 1).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    rhs(n - 1) = 1.0;
    return system.fullPivLu().solve(rhs);
}

}  // namespace

CurrencyDistribution cesaro_limit(const Economy& economy) {
    require_valid(economy);
    const Eigen::Index n = economy.size();
    const auto& P = economy.spending();

    const auto sccs = strongly_connected_components(support_graph(P));

    // A class is closed when no member spends outside it; everything else is
    // transient and drains to zero mass.
    std::vector<int> class_of(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> closed_classes;
    for (const auto& component : sccs) {
        bool closed = true;
        for (int j : component) {
            for (Eigen::Index i = 0; i < n && closed; ++i) {
                if (P(i, j) > 0.0 &&
                    std::find(component.begin(), component.end(), static_cast<int>(i)) ==
                        component.end()) {
                    closed = false;
                }
            }
            if (!closed) break;
        }
        if (closed) {
            for (int j : component) {
                class_of[static_cast<size_t>(j)] = static_cast<int>(closed_classes.size());
            }
            closed_classes.push_back(component);
        }
    }
    std::vector<int> transients;
    for (Eigen::Index j = 0; j < n; ++j) {
        if (class_of[static_cast<size_t>(j)] < 0) {
            transients.push_back(static_cast<int>(j));
        }
    }

    const auto classes = static_cast<Eigen::Index>(closed_classes.size());
    const auto t_count = static_cast<Eigen::Index>(transients.size());
    const auto& x0 = economy.initial_currency();

    // Mass absorbed into each closed class: the initial mass already there
    // plus what the transients eventually send in. Absorption shares solve
    // (I - A^T) h_k = b_k over the transient block A.
    Eigen::VectorXd class_mass = Eigen::VectorXd::Zero(classes);
    for (Eigen::Index k = 0; k < classes; ++k) {
        for (int j : closed_classes[static_cast<size_t>(k)]) {
            class_mass(k) += x0(j);
        }
    }
    if (t_count > 0) {
        Eigen::MatrixXd transient_block(t_count, t_count);
        for (Eigen::Index r = 0; r < t_count; ++r) {
            for (Eigen::Index c = 0; c < t_count; ++c) {
                transient_block(r, c) = P(transients[static_cast<size_t>(r)],
                                          transients[static_cast<size_t>(c)]);
            }
        }
        Eigen::MatrixXd inflow(t_count, classes);
        for (Eigen::Index c = 0; c < t_count; ++c) {
            for (Eigen::Index k = 0; k < classes; ++k) {
                double total = 0.0;
                for (int i : closed_classes[static_cast<size_t>(k)]) {
                    total += P(i, transients[static_cast<size_t>(c)]);
                }
                inflow(c, k) = total;
            }
        }
        Eigen::MatrixXd shares =
            (Eigen::MatrixXd::Identity(t_count, t_count) - transient_block.transpose())
                .fullPivLu()
                .solve(inflow);
        for (Eigen::Index k = 0; k < classes; ++k) {
            for (Eigen::Index c = 0; c < t_count; ++c) {
                class_mass(k) += x0(transients[static_cast<size_t>(c)]) * shares(c, k);
            }
        }
    }

    Eigen::VectorXd limit = Eigen::VectorXd::Zero(n);
    for (Eigen::Index k = 0; k < classes; ++k) {
        const auto& members = closed_classes[static_cast<size_t>(k)];
        const auto size = static_cast<Eigen::Index>(members.size());
        Eigen::MatrixXd block(size, size);
        for (Eigen::Index r = 0; r < size; ++r) {
            for (Eigen::Index c = 0; c < size; ++c) {
                block(r, c) = P(members[static_cast<size_t>(r)], members[static_cast<size_t>(c)]);
            }
        }
        Eigen::VectorXd pi = stationary_of_block(block);
        for (Eigen::Index r = 0; r < size; ++r) {
            limit(members[static_cast<size_t>(r)]) = class_mass(k) * pi(r);
        }
    }
    return CurrencyDistribution(std::move(limit));
}

CurrencyDistribution long_run_distribution(const Economy& economy) {
    if (is_irreducible(economy)) {
        return stationary_distribution(economy);
    }
    return cesaro_limit(economy);
}

UtilityProfile asymptotic_utilities(const Economy& economy) {
    CurrencyDistribution weights = long_run_distribution(economy);
    const Eigen::Index n = economy.size();
    Eigen::VectorXd per_agent(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        per_agent(j) = weights[j] * economy.spending().col(j).dot(economy.utility().col(j));
    }
    return UtilityProfile{std::move(per_agent)};
}

}  // namespace agora
