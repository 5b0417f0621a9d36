#pragma once

#include <Eigen/Dense>

namespace agora {

/// maximize objective . z  subject to  eq_lhs z = eq_rhs, z >= 0.
struct LinearProgram {
    Eigen::VectorXd objective;
    Eigen::MatrixXd eq_lhs;
    Eigen::VectorXd eq_rhs;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    Eigen::VectorXd values;  // empty unless optimal
    double objective = 0.0;
};

/// Dense two-phase simplex with Bland's rule (smallest-index entering
/// variable, smallest-basis-label ratio ties), which makes the returned
/// basic feasible solution deterministic and rules out cycling. Redundant
/// equality rows are tolerated. Infeasible and unbounded are verdicts, not
/// errors; malformed dimensions throw.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace agora
