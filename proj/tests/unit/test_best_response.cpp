#include <doctest.h>

#include <random>

#include "agora/best_response.hpp"
#include "helpers.hpp"

using namespace agora;

namespace {

// Three agents; agent 1 chooses a supplier. Agent 2 pays far more per dollar
// but recycles almost nothing back, agent 3 pays 1.0 and sends half of its
// own spending back to agent 1.
Economy showcase_economy() {
    Eigen::MatrixXd spending(3, 3);
    spending << 1.0, 0.01, 0.5,
                0.0, 0.97, 0.01,
                0.0, 0.02, 0.49;
    Eigen::MatrixXd utility(3, 3);
    utility << 0.0, 1.0, 1.0,
               9.8, 0.0, 1.0,
               1.0, 1.0, 2.0;
    return Economy(std::move(spending), std::move(utility));
}

Eigen::VectorXd unit_column(Eigen::Index n, Eigen::Index hot) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(hot) = 1.0;
    return e;
}

}  // namespace

TEST_CASE("showcase: the 9.8-per-dollar seller loses to the recycling one") {
    Economy economy = showcase_economy();

    BestResponseResult brute = best_response_brute_force(economy, 0, 200);
    CHECK(brute.column == unit_column(3, 2));
    // Exact stationary masses for the all-on-3 column: (151, 100, 300)/551.
    CHECK(brute.utility == doctest::Approx(151.0 / 551.0).epsilon(1e-12));
    CHECK(brute.stationary[1] == doctest::Approx(100.0 / 551.0).epsilon(1e-9));

    BestResponseResult grid = best_response_grid_lp(economy, 0, 1001);
    CHECK((grid.column - unit_column(3, 2)).cwiseAbs().maxCoeff() < 0.01);
    CHECK(grid.utility == doctest::Approx(brute.utility).epsilon(1e-3));

    const double on_three = rescore_by_dynamics(economy, 0, unit_column(3, 2));
    const double on_two = rescore_by_dynamics(economy, 0, unit_column(3, 1));
    CHECK(on_three == doctest::Approx(151.0 / 551.0).epsilon(1e-12));
    CHECK(on_two == doctest::Approx(9.8 * 151.0 / 5451.0).epsilon(1e-12));
    CHECK(on_three - on_two > 1e-3);
}

TEST_CASE("two-agent grid LP: cheap partner spending makes self-production win") {
    // With (a, b) = (1, 3) and the partner sending only q = 0.25, staying at
    // p = 0 yields utility 1.0 while full adoption yields 0.6.
    Economy economy = testing::two_agent_economy({1, 3, 3, 1}, 0.9, 0.25);
    BestResponseResult grid = best_response_grid_lp(economy, 0, 1001);
    CHECK(grid.utility == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(grid.column(0) == doctest::Approx(1.0));

    BestResponseResult brute = best_response_brute_force(economy, 0, 200);
    CHECK(brute.column(0) == doctest::Approx(1.0));
    CHECK(brute.utility == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("two-agent grid LP: indifference at q = a/(b-a) resolves to self-spend") {
    // Every p gives utility exactly 1; the tie rule prefers the larger
    // self-spend entry, i.e. p = 0.
    Economy economy = testing::two_agent_economy({1, 3, 3, 1}, 0.9, 0.5);
    BestResponseResult grid = best_response_grid_lp(economy, 0, 1001);
    CHECK(grid.utility == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(grid.column(0) == doctest::Approx(1.0));
    CHECK(grid.column(1) == doctest::Approx(0.0));
}

TEST_CASE("brute force with a non-buying partner keeps the initial currency") {
    // q = 0: any p > 0 bleeds all currency to B, so p = 0 with utility
    // a * x0_A = 0.5 is the best response.
    Economy economy = testing::two_agent_economy({1, 3, 3, 1}, 0.4, 0.0);
    BestResponseResult brute = best_response_brute_force(economy, 0, 100);
    CHECK(brute.column(0) == doctest::Approx(1.0));
    CHECK(brute.utility == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("rescore by dynamics") {
    SUBCASE("autarky column keeps the initial share") {
        Eigen::MatrixXd utility = Eigen::MatrixXd::Ones(2, 2) * 3.0;
        Economy economy(Eigen::MatrixXd::Identity(2, 2), utility);
        CHECK(rescore_by_dynamics(economy, 0, unit_column(2, 0)) == doctest::Approx(1.5));
    }
    SUBCASE("full adoption against a non-buyer is worthless") {
        Economy economy = testing::two_agent_economy({1, 3, 3, 1}, 0.0, 0.0);
        CHECK(rescore_by_dynamics(economy, 0, unit_column(2, 1)) ==
              doctest::Approx(0.0).epsilon(1e-9));
    }
    SUBCASE("matches the brute-force utility on its own winner") {
        std::mt19937_64 rng(8);
        Economy economy(testing::random_positive_stochastic(3, rng),
                        testing::random_utility(3, rng));
        BestResponseResult brute = best_response_brute_force(economy, 1, 60);
        CHECK(rescore_by_dynamics(economy, 1, brute.column) ==
              doctest::Approx(brute.utility).epsilon(1e-9));
    }
    SUBCASE("rejects columns that are not distributions") {
        Economy economy = testing::two_agent_economy({1, 3, 3, 1}, 0.5, 0.5);
        Eigen::VectorXd bad(2);
        bad << 0.7, 0.6;
        CHECK_THROWS_AS(rescore_by_dynamics(economy, 0, bad), SolverError);
    }
}

TEST_CASE("grid refinement never lowers the reported utility") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 5; ++trial) {
        Economy economy(testing::random_positive_stochastic(3, rng),
                        testing::random_utility(3, rng));
        // 2m-1 points keep the coarse grid embedded in the fine one.
        const double coarse = best_response_grid_lp(economy, 0, 251).utility;
        const double fine = best_response_grid_lp(economy, 0, 501).utility;
        CHECK(fine >= coarse - 1e-9);
    }
}

TEST_CASE("grid LP columns reassemble into valid economies") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        Economy economy(testing::random_positive_stochastic(4, rng),
                        testing::random_utility(4, rng));
        BestResponseResult grid = best_response_grid_lp(economy, trial % 4, 101);
        CHECK(validate(economy.with_column(trial % 4, grid.column)).ok);
        CHECK(grid.utility >= 0.0);
        // The supporting vector satisfies the balance equations of the
        // assembled matrix.
        Economy assembled = economy.with_column(trial % 4, grid.column);
        CHECK((assembled.spending() * grid.stationary.values() - grid.stationary.values())
                  .lpNorm<1>() < 1e-7);
    }
}

TEST_CASE("grid LP utility dominates the dynamics rescoring of its own column") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        Economy economy(testing::random_positive_stochastic(3, rng),
                        testing::random_utility(3, rng));
        BestResponseResult grid = best_response_grid_lp(economy, 0, 501);
        const double rescored = rescore_by_dynamics(economy, 0, grid.column);
        const double slack = economy.utility().maxCoeff() / 500.0 + 1e-7;
        CHECK(grid.utility >= rescored - slack);
    }
}

TEST_CASE("grid LP and brute force agree on random economies") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        Economy economy(testing::random_positive_stochastic(3, rng),
                        testing::random_utility(3, rng));
        const double grid = best_response_grid_lp(economy, trial % 3, 1001).utility;
        const double brute = best_response_brute_force(economy, trial % 3, 200).utility;
        const double bound = 2.0 * (1.0 / 1000.0 + 1.0 / 200.0) * economy.utility().maxCoeff();
        CHECK(std::abs(grid - brute) <= bound);
    }
}

TEST_CASE("simplex lattice enumeration") {
    int count = 0;
    double worst_sum = 0.0;
    for_each_simplex_column(3, 4, [&](const Eigen::VectorXd& c) {
        ++count;
        worst_sum = std::max(worst_sum, std::abs(c.sum() - 1.0));
        CHECK(c.minCoeff() >= 0.0);
    });
    CHECK(count == 15);  // C(4+2, 2)
    CHECK(worst_sum < 1e-12);
}

TEST_CASE("argument validation") {
    Economy economy = testing::two_agent_economy({1, 3, 3, 1}, 0.5, 0.5);
    CHECK_THROWS_AS(best_response_grid_lp(economy, 0, 1), SolverError);
    CHECK_THROWS_AS(best_response_grid_lp(economy, 5, 11), SolverError);
    CHECK_THROWS_AS(best_response_brute_force(economy, -1, 10), SolverError);
    CHECK_THROWS_AS(best_response_brute_force(economy, 0, 0), SolverError);
}
