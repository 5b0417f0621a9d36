#include "agora/two_agent.hpp"

#include <algorithm>
#include <cmath>

#include "agora/error.hpp"

namespace agora {

const char* scenario_name(TwoAgentScenario scenario) {
    switch (scenario) {
        case TwoAgentScenario::no_adoption: return "no_adoption";
        case TwoAgentScenario::bilateral_partial: return "bilateral_partial";
        case TwoAgentScenario::bilateral_full: return "bilateral_full";
        case TwoAgentScenario::unilateral_full_A: return "unilateral_full_A";
        case TwoAgentScenario::unilateral_full_B: return "unilateral_full_B";
    }
    return "unknown";
}

namespace {

void check_game(const TwoAgentGame& game) {
    for (double v : {game.a, game.b, game.c, game.d}) {
        if (!(std::isfinite(v) && v >= 0.0)) {
            throw SolverError(ErrorCode::precondition_failed,
                              "two-agent utilities must be finite and nonnegative");
        }
    }
}

void check_strategy(const TwoAgentStrategy& strategy) {
    for (double v : {strategy.p, strategy.q}) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw SolverError(ErrorCode::precondition_failed,
                              "spending fractions must lie in [0, 1]");
        }
    }
}

double interval_point_distance(double value, double lo, double hi) {
    if (value < lo) return lo - value;
    if (value > hi) return value - hi;
    return 0.0;
}

}  // namespace

std::vector<TwoAgentStrategy> EquilibriumEntry::samples() const {
    if (!is_interval) {
        return {point};
    }
    std::vector<TwoAgentStrategy> result;
    if (interval_lo >= interval_hi) {
        return result;  // boundary games can produce empty families
    }
    const double span = interval_hi - interval_lo;
    for (double f : {0.0, 0.25, 0.5, 0.75, 0.99}) {
        const double free_value = interval_lo + f * span;
        if (scenario == TwoAgentScenario::unilateral_full_A) {
            result.push_back({1.0, free_value});
        } else {
            result.push_back({free_value, 1.0});
        }
    }
    return result;
}

double EquilibriumEntry::distance(const TwoAgentStrategy& s) const {
    if (!is_interval) {
        return std::max(std::abs(s.p - point.p), std::abs(s.q - point.q));
    }
    if (scenario == TwoAgentScenario::unilateral_full_A) {
        return std::max(std::abs(s.p - 1.0), interval_point_distance(s.q, interval_lo, interval_hi));
    }
    return std::max(std::abs(s.q - 1.0), interval_point_distance(s.p, interval_lo, interval_hi));
}

double EquilibriumCatalog::distance(const TwoAgentStrategy& s) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& entry : entries) {
        best = std::min(best, entry.distance(s));
    }
    return best;
}

std::pair<double, double> per_dollar_utilities(const TwoAgentGame& game,
                                               const TwoAgentStrategy& strategy) {
    check_game(game);
    check_strategy(strategy);
    const double u_a = strategy.p * game.b + (1.0 - strategy.p) * game.a;
    const double u_b = strategy.q * game.c + (1.0 - strategy.q) * game.d;
    return {u_a, u_b};
}

std::optional<std::pair<double, double>> stationary_currency(const TwoAgentStrategy& strategy) {
    check_strategy(strategy);
    const double total = strategy.p + strategy.q;
    if (total == 0.0) {
        return std::nullopt;  // every split is stationary; fall back to the initial currency
    }
    return std::make_pair(strategy.q / total, strategy.p / total);
}

std::pair<double, double> episode_values(const TwoAgentGame& game, const TwoAgentStrategy& strategy,
                                         double initial_currency_a) {
    check_game(game);
    check_strategy(strategy);
    if (!(initial_currency_a >= 0.0 && initial_currency_a <= 1.0)) {
        throw SolverError(ErrorCode::precondition_failed,
                          "initial currency share must lie in [0, 1]");
    }
    auto split = stationary_currency(strategy);
    if (!split) {
        return {game.a * initial_currency_a, game.d * (1.0 - initial_currency_a)};
    }
    auto [u_a, u_b] = per_dollar_utilities(game, strategy);
    return {u_a * split->first, u_b * split->second};
}

EquilibriumCatalog classify_equilibria(const TwoAgentGame& game) {
    check_game(game);
    EquilibriumCatalog catalog{game, {}};
    auto& entries = catalog.entries;

    entries.push_back({TwoAgentScenario::no_adoption,
                       {0.0, 0.0},
                       false,
                       0.0,
                       0.0,
                       "always",
                       ""});

    const bool b_above = game.b > 2.0 * game.a;
    const bool b_tight = game.b == 2.0 * game.a && game.b > game.a;  // excludes a = b = 0
    const bool c_above = game.c > 2.0 * game.d;
    const bool c_tight = game.c == 2.0 * game.d && game.c > game.d;

    if (b_above && c_above) {
        const double p_star = game.d / (game.c - game.d);
        const double q_star = game.a / (game.b - game.a);
        if (p_star != 0.0 || q_star != 0.0) {
            const bool degenerate = game.a == 0.0 || game.d == 0.0;
            entries.push_back({TwoAgentScenario::bilateral_partial,
                               {p_star, q_star},
                               false,
                               0.0,
                               0.0,
                               "b > 2a and c > 2d",
                               degenerate ? "degenerate" : ""});
        }
        entries.push_back({TwoAgentScenario::bilateral_full,
                           {1.0, 1.0},
                           false,
                           0.0,
                           0.0,
                           "b >= 2a and c >= 2d",
                           ""});
    } else if (b_above && c_tight) {
        entries.push_back({TwoAgentScenario::unilateral_full_A,
                           {1.0, game.a / (game.b - game.a)},
                           true,
                           game.a / (game.b - game.a),
                           1.0,
                           "c = 2d and b > 2a",
                           ""});
    } else if (c_above && b_tight) {
        entries.push_back({TwoAgentScenario::unilateral_full_B,
                           {game.d / (game.c - game.d), 1.0},
                           true,
                           game.d / (game.c - game.d),
                           1.0,
                           "b = 2a and c > 2d",
                           ""});
    } else if (b_tight && c_tight) {
        // Both thresholds are exactly met: full adoption survives and the
        // unilateral families shrink to empty intervals at 1.
        entries.push_back({TwoAgentScenario::bilateral_full,
                           {1.0, 1.0},
                           false,
                           0.0,
                           0.0,
                           "b >= 2a and c >= 2d",
                           "boundary"});
        entries.push_back({TwoAgentScenario::unilateral_full_A,
                           {1.0, 1.0},
                           true,
                           1.0,
                           1.0,
                           "c = 2d and b > 2a",
                           "boundary"});
        entries.push_back({TwoAgentScenario::unilateral_full_B,
                           {1.0, 1.0},
                           true,
                           1.0,
                           1.0,
                           "b = 2a and c > 2d",
                           "boundary"});
    }
    // Otherwise b < 2a or c < 2d (or a degenerate zero game): no adoption
    // is the only equilibrium the catalog emits.
    return catalog;
}

bool verify_two_agent_point(const TwoAgentGame& game, const TwoAgentStrategy& strategy, double tol,
                            int grid_points) {
    check_game(game);
    check_strategy(strategy);
    if (!(tol > 0.0)) {
        throw SolverError(ErrorCode::precondition_failed, "tolerance must be positive");
    }
    if (grid_points < 2) {
        throw SolverError(ErrorCode::precondition_failed, "deviation grid needs at least 2 points");
    }
    auto [current_a, current_b] = episode_values(game, strategy);
    double best_a = current_a;
    double best_b = current_b;
    for (int g = 0; g < grid_points; ++g) {
        const double f = static_cast<double>(g) / static_cast<double>(grid_points - 1);
        best_a = std::max(best_a, episode_values(game, {f, strategy.q}).first);
        best_b = std::max(best_b, episode_values(game, {strategy.p, f}).second);
    }
    return best_a - current_a <= tol && best_b - current_b <= tol;
}

}  // namespace agora
