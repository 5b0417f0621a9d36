#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace agora {

/// Per-dollar utilities of the two-agent game: a = A's self-production,
/// b = what B's products are worth to A, c = what A's products are worth to
/// B, d = B's self-production. All nonnegative.
struct TwoAgentGame {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// p = fraction A spends on B, q = fraction B spends on A; both in [0, 1].
struct TwoAgentStrategy {
    double p = 0.0;
    double q = 0.0;
};

enum class TwoAgentScenario {
    no_adoption,
    bilateral_partial,
    bilateral_full,
    unilateral_full_A,  // p* = 1, q* ranges over an interval
    unilateral_full_B,  // q* = 1, p* ranges over an interval
};

const char* scenario_name(TwoAgentScenario scenario);

/// One catalog line: either a single strategy point or, for the unilateral
/// families, a fixed coordinate with the free one ranging over
/// [interval_lo, interval_hi). Empty intervals (lo >= hi) can appear on
/// boundary games and carry no sample points.
struct EquilibriumEntry {
    TwoAgentScenario scenario;
    TwoAgentStrategy point;  // for intervals: the fixed coordinate plus interval_lo
    bool is_interval = false;
    double interval_lo = 0.0;
    double interval_hi = 0.0;  // exclusive
    std::string condition;     // the threshold condition that admitted the entry
    std::string flag;          // "", "boundary" or "degenerate"

    /// Representative strategies for numeric verification (interval interior
    /// points for families, the point itself otherwise).
    std::vector<TwoAgentStrategy> samples() const;

    /// L-infinity distance from `s` to the entry (interval closure).
    double distance(const TwoAgentStrategy& s) const;
};

struct EquilibriumCatalog {
    TwoAgentGame game;
    std::vector<EquilibriumEntry> entries;

    /// Distance from `s` to the nearest catalog entry.
    double distance(const TwoAgentStrategy& s) const;
};

/// u_A = p b + (1-p) a,  u_B = q c + (1-q) d.
std::pair<double, double> per_dollar_utilities(const TwoAgentGame& game,
                                               const TwoAgentStrategy& strategy);

/// Stationary currency split (q/(p+q), p/(p+q)); nullopt when p = q = 0
/// (no unique split — callers fall back to the initial currency).
std::optional<std::pair<double, double>> stationary_currency(const TwoAgentStrategy& strategy);

/// Long-run utilities per episode:
///   V_A = q [p b + (1-p) a] / (p+q),  V_B = p [q c + (1-q) d] / (p+q),
/// with the p = q = 0 case scored on the initial currency split
/// (initial_currency_a to A, the rest to B).
std::pair<double, double> episode_values(const TwoAgentGame& game,
                                         const TwoAgentStrategy& strategy,
                                         double initial_currency_a = 0.5);

/// Catalogs every equilibrium family of the game. The no-adoption point
/// (0,0) is always present; adoption scenarios appear exactly when their
/// doubling-threshold conditions hold.
EquilibriumCatalog classify_equilibria(const TwoAgentGame& game);

/// True iff neither agent can improve its episode value by more than tol
/// over a unilateral deviation grid (grid_points values of its own
/// fraction), dynamics-scored including the p = q = 0 convention.
bool verify_two_agent_point(const TwoAgentGame& game, const TwoAgentStrategy& strategy,
                            double tol, int grid_points = 1001);

}  // namespace agora
