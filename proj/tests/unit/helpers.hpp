#pragma once

#include <Eigen/Dense>
#include <random>

#include "agora/economy.hpp"
#include "agora/two_agent.hpp"

namespace agora::testing {

/// Economy for the two-agent game: A is agent 0, B is agent 1; A spends p on
/// B and B spends q on A. Initial currency defaults to (1/2, 1/2).
inline Economy two_agent_economy(const TwoAgentGame& g, double p, double q) {
    Eigen::MatrixXd spending(2, 2);
    spending << 1.0 - p, q,
                p, 1.0 - q;
    Eigen::MatrixXd utility(2, 2);
    utility << g.a, g.c,
               g.b, g.d;
    return Economy(std::move(spending), std::move(utility));
}

/// Column-stochastic matrix with every entry positive (each column is a
/// normalized vector of uniforms), hence irreducible and aperiodic.
inline Eigen::MatrixXd random_positive_stochastic(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        double total = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            m(i, j) = unit(rng) + 1e-3;
            total += m(i, j);
        }
        m.col(j) /= total;
    }
    return m;
}

inline Eigen::MatrixXd random_utility(Eigen::Index n, std::mt19937_64& rng, double max_value = 5.0) {
    std::uniform_real_distribution<double> unit(0.0, max_value);
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            m(i, j) = unit(rng);
        }
    }
    return m;
}

/// Column-stochastic matrix whose support pattern is random: each column
/// gets 1..n nonzero entries. Useful for exercising reducible graphs.
inline Eigen::MatrixXd random_sparse_stochastic(Eigen::Index n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> count(1, static_cast<int>(n));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const int nonzeros = count(rng);
        double total = 0.0;
        for (int k = 0; k < nonzeros; ++k) {
            const auto i = static_cast<Eigen::Index>(rng() % static_cast<uint64_t>(n));
            const double w = unit(rng) + 0.1;
            m(i, j) += w;
            total += w;
        }
        m.col(j) /= total;
    }
    return m;
}

}  // namespace agora::testing
