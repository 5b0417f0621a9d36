#include <doctest.h>

#include "agora/economy.hpp"
#include "helpers.hpp"

using namespace agora;

namespace {

Economy from_spending(Eigen::MatrixXd spending) {
    const Eigen::Index n = spending.rows();
    return Economy(std::move(spending), Eigen::MatrixXd::Ones(n, n));
}

}  // namespace

TEST_CASE("validate accepts a symmetric doubly stochastic economy") {
    Eigen::MatrixXd spending(2, 2);
    spending << 0.5, 0.5, 0.5, 0.5;
    ValidationReport report = validate(from_spending(spending));
    CHECK(report.ok);
    CHECK(report.violations.empty());
}

TEST_CASE("validate flags a column that does not sum to 1") {
    Eigen::MatrixXd spending(2, 2);
    spending << 0.5, 0.4,
                0.5, 0.5;
    ValidationReport report = validate(from_spending(spending));
    REQUIRE_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].constraint == "column_sum");
    CHECK(report.violations[0].index == 1);
    CHECK(report.violations[0].observed == doctest::Approx(0.9));
}

TEST_CASE("validate flags a negative utility entry") {
    Eigen::MatrixXd spending(2, 2);
    spending << 0.5, 0.5, 0.5, 0.5;
    Eigen::MatrixXd utility = Eigen::MatrixXd::Ones(2, 2);
    utility(1, 0) = -1.0;
    ValidationReport report = validate(Economy(spending, utility));
    REQUIRE_FALSE(report.ok);
    CHECK(report.violations[0].constraint == "negative_utility");
}

TEST_CASE("validate flags out-of-range spending and bad initial currency") {
    Eigen::MatrixXd spending(2, 2);
    spending << 1.5, 0.5, -0.5, 0.5;
    Eigen::VectorXd x0(2);
    x0 << 1.0, -0.5;  // normalization is skipped for validate to see the sign
    ValidationReport report = validate(Economy(spending, Eigen::MatrixXd::Ones(2, 2), x0));
    REQUIRE_FALSE(report.ok);
    bool saw_range = false, saw_currency = false;
    for (const auto& v : report.violations) {
        saw_range |= v.constraint == "spending_entry_range";
        saw_currency |= v.constraint == "negative_initial_currency";
    }
    CHECK(saw_range);
    CHECK(saw_currency);
}

TEST_CASE("dimension mismatches are structural errors, not violations") {
    Eigen::MatrixXd spending = Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(Economy(spending, Eigen::MatrixXd::Ones(3, 3)), SolverError);
    try {
        Economy(spending, Eigen::MatrixXd::Ones(2, 2), Eigen::VectorXd::Ones(3));
        FAIL("expected a dimension error");
    } catch (const SolverError& e) {
        CHECK(e.code() == ErrorCode::dimension_mismatch);
    }
}

TEST_CASE("initial currency is normalized on construction") {
    Eigen::MatrixXd spending = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd x0(2);
    x0 << 3.0, 1.0;
    Economy economy(spending, Eigen::MatrixXd::Ones(2, 2), x0);
    CHECK(economy.initial_currency()(0) == doctest::Approx(0.75));
    CHECK(economy.initial_currency()(1) == doctest::Approx(0.25));

    Economy uniform(spending, Eigen::MatrixXd::Ones(2, 2));
    CHECK(uniform.initial_currency()(0) == doctest::Approx(0.5));
}

TEST_CASE("currency distribution clamps solver noise and rejects junk") {
    Eigen::VectorXd nearly(2);
    nearly << 1.0 + 1e-12, -1e-12;
    CurrencyDistribution d{nearly};
    CHECK(d[1] == 0.0);
    CHECK(d.values().sum() == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::VectorXd bad(2);
    bad << 0.7, 0.6;
    CHECK_THROWS_AS(CurrencyDistribution{bad}, SolverError);
}

TEST_CASE("irreducibility via strong connectivity of the support graph") {
    CHECK_FALSE(is_irreducible(from_spending(Eigen::MatrixXd::Identity(2, 2))));

    Eigen::MatrixXd swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    CHECK(is_irreducible(from_spending(swap)));

    CHECK(is_irreducible(from_spending(Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0))));
}

TEST_CASE("sufficient condition examples") {
    CHECK(sufficient_irreducibility_check(from_spending(Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0))));
    CHECK_FALSE(sufficient_irreducibility_check(from_spending(Eigen::MatrixXd::Identity(3, 3))));

    // Two-agent swap chain: part 1 holds (each deleted submatrix is the
    // trivial single agent), but part 2 fails: the only buyer from agent 1
    // is agent 2, and agent 1 buys from nobody but agent 2 either, so no
    // l != k exists. The check is conservative even though the chain itself
    // is irreducible.
    Eigen::MatrixXd swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;
    CHECK_FALSE(sufficient_irreducibility_check(from_spending(swap)));
    CHECK(is_irreducible(from_spending(swap)));

    CHECK_THROWS_AS(sufficient_irreducibility_check(from_spending(Eigen::MatrixXd::Ones(1, 1))),
                    SolverError);
}

TEST_CASE("sufficient condition implies irreducibility on random economies") {
    std::mt19937_64 rng(42);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const Eigen::Index n = 2 + static_cast<Eigen::Index>(trial % 5);
        Economy economy = from_spending(testing::random_sparse_stochastic(n, rng));
        if (sufficient_irreducibility_check(economy)) {
            ++positives;
            CHECK(is_irreducible(economy));
        }
    }
    CHECK(positives > 0);  // the generator must exercise the true branch
}

TEST_CASE("structural checks are deterministic") {
    std::mt19937_64 rng(7);
    Economy economy = from_spending(testing::random_sparse_stochastic(4, rng));
    const bool first = is_irreducible(economy);
    for (int i = 0; i < 3; ++i) {
        CHECK(is_irreducible(economy) == first);
    }
}

TEST_CASE("scc decomposition on a known graph") {
    // 0 <-> 1 form a component, 2 hangs off it, 3 is isolated.
    std::vector<std::vector<int>> graph{{1}, {0, 2}, {}, {3}};
    auto sccs = strongly_connected_components(graph);
    CHECK(sccs.size() == 3);
    size_t two = 0, one = 0;
    for (const auto& scc : sccs) {
        if (scc.size() == 2) ++two;
        if (scc.size() == 1) ++one;
    }
    CHECK(two == 1);
    CHECK(one == 2);
}

TEST_CASE("with_column replaces exactly one column") {
    Eigen::MatrixXd spending = Eigen::MatrixXd::Identity(3, 3);
    Economy economy = from_spending(spending);
    Eigen::VectorXd column(3);
    column << 0.2, 0.3, 0.5;
    Economy swapped = economy.with_column(1, column);
    CHECK(swapped.spending().col(1) == column);
    CHECK(swapped.spending().col(0) == economy.spending().col(0));
    CHECK(validate(swapped).ok);
}
