#include "agora/lp.hpp"

#include <cmath>
#include <vector>

#include "agora/error.hpp"

namespace agora {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kFeasibilityEps = 1e-7;

// Tableau layout: columns [0, vars) are the original variables, [vars,
// vars+rows) the artificials, and the last column the right-hand side.
// `cost` is the reduced-cost row (same width), kept canonical (zero on basic
// columns); its last cell holds minus the current phase objective.

struct Tableau {
    Eigen::MatrixXd body;
    Eigen::VectorXd cost;
    std::vector<Eigen::Index> basis;
    Eigen::Index vars = 0;

    Eigen::Index rows() const { return body.rows(); }
    Eigen::Index rhs_col() const { return body.cols() - 1; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        body.row(row) /= body(row, col);
        for (Eigen::Index r = 0; r < rows(); ++r) {
            if (r != row && std::abs(body(r, col)) > 0.0) {
                body.row(r) -= body(r, col) * body.row(row);
            }
        }
        if (std::abs(cost(col)) > 0.0) {
            cost -= cost(col) * body.row(row).transpose();
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Bland's rule: enter the smallest-index improving column; leave on the
    // minimum ratio, breaking ties by the smallest basis label. Returns
    // false when no improving column remains (optimal), throws nothing;
    // unbounded is reported through the out-parameter.
    bool step(Eigen::Index column_limit, bool& unbounded) {
        Eigen::Index entering = -1;
        for (Eigen::Index j = 0; j < column_limit; ++j) {
            if (cost(j) < -kCostEps) {
                entering = j;
                break;
            }
        }
        if (entering < 0) {
            return false;
        }
        Eigen::Index leaving = -1;
        double best_ratio = 0.0;
        for (Eigen::Index i = 0; i < rows(); ++i) {
            if (body(i, entering) <= kPivotEps) continue;
            double ratio = body(i, rhs_col()) / body(i, entering);
            if (leaving < 0 || ratio < best_ratio - 1e-12 ||
                (std::abs(ratio - best_ratio) <= 1e-12 &&
                 basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leaving)])) {
                leaving = i;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) {
            unbounded = true;
            return false;
        }
        pivot(leaving, entering);
        return true;
    }
};

void run_simplex(Tableau& t, Eigen::Index column_limit, bool& unbounded) {
    unbounded = false;
    const long iteration_cap = 50000 + 200 * static_cast<long>(t.body.cols());
    for (long iter = 0; iter < iteration_cap; ++iter) {
        if (!t.step(column_limit, unbounded)) {
            return;
        }
    }
    throw SolverError(ErrorCode::internal, "simplex iteration cap exceeded");
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
    const Eigen::Index vars = lp.objective.size();
    const Eigen::Index rows = lp.eq_lhs.rows();
    if (lp.eq_lhs.cols() != vars || lp.eq_rhs.size() != rows) {
        throw SolverError(ErrorCode::dimension_mismatch,
                          "linear program dimensions are inconsistent");
    }

    Tableau t;
    t.vars = vars;
    t.body.resize(rows, vars + rows + 1);
    t.body.leftCols(vars) = lp.eq_lhs;
    t.body.middleCols(vars, rows) = Eigen::MatrixXd::Identity(rows, rows);
    t.body.col(vars + rows) = lp.eq_rhs;
    for (Eigen::Index i = 0; i < rows; ++i) {
        if (t.body(i, t.rhs_col()) < 0.0) {
            t.body.row(i) = -t.body.row(i);
            t.body(i, vars + i) = 1.0;  // keep the artificial column a unit vector
        }
        t.basis.push_back(vars + i);
    }

    // Phase 1: minimize the sum of artificials.
    t.cost = Eigen::VectorXd::Zero(vars + rows + 1);
    t.cost.segment(vars, rows).setOnes();
    for (Eigen::Index i = 0; i < rows; ++i) {
        t.cost -= t.body.row(i).transpose();
    }
    bool unbounded = false;
    run_simplex(t, vars + rows, unbounded);
    const double artificial_total = -t.cost(t.rhs_col());
    if (artificial_total > kFeasibilityEps) {
        return LpSolution{LpStatus::infeasible, {}, 0.0};
    }

    // Drive surviving artificials out of the basis; rows that offer no pivot
    // are redundant equalities and are dropped.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        if (t.basis[static_cast<size_t>(i)] < vars) {
            keep.push_back(i);
            continue;
        }
        Eigen::Index pivot_col = -1;
        for (Eigen::Index j = 0; j < vars; ++j) {
            if (std::abs(t.body(i, j)) > kPivotEps) {
                pivot_col = j;
                break;
            }
        }
        if (pivot_col >= 0) {
            t.pivot(i, pivot_col);
            keep.push_back(i);
        }
    }
    if (static_cast<Eigen::Index>(keep.size()) != t.rows()) {
        Eigen::MatrixXd reduced(static_cast<Eigen::Index>(keep.size()), t.body.cols());
        std::vector<Eigen::Index> reduced_basis;
        for (size_t r = 0; r < keep.size(); ++r) {
            reduced.row(static_cast<Eigen::Index>(r)) = t.body.row(keep[r]);
            reduced_basis.push_back(t.basis[static_cast<size_t>(keep[r])]);
        }
        t.body = std::move(reduced);
        t.basis = std::move(reduced_basis);
    }

    // Phase 2: minimize -objective over the original columns only.
    t.cost = Eigen::VectorXd::Zero(vars + rows + 1);
    t.cost.head(vars) = -lp.objective;
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        const double coef = t.cost(t.basis[static_cast<size_t>(i)]);
        if (coef != 0.0) {
            t.cost -= coef * t.body.row(i).transpose();
        }
    }
    run_simplex(t, vars, unbounded);
    if (unbounded) {
        return LpSolution{LpStatus::unbounded, {}, 0.0};
    }

    Eigen::VectorXd values = Eigen::VectorXd::Zero(vars);
    for (Eigen::Index i = 0; i < t.rows(); ++i) {
        if (t.basis[static_cast<size_t>(i)] < vars) {
            values(t.basis[static_cast<size_t>(i)]) = t.body(i, t.rhs_col());
        }
    }
    return LpSolution{LpStatus::optimal, values, lp.objective.dot(values)};
}

}  // namespace agora
