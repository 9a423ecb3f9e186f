#pragma once

// Exact two-phase simplex over the rationals (Bland's rule, so it always terminates).

#include <vector>

#include "clutterlab/kernel.hpp"

namespace clutterlab {

/// maximize ⟨objective, x⟩ subject to
///   le_rows·x ≤ le_rhs,  eq_rows·x = eq_rhs,  x ≥ 0.
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<RatVector> le_rows;
    RatVector le_rhs;
    std::vector<RatVector> eq_rows;
    RatVector eq_rhs;
    RatVector objective; ///< empty means pure feasibility
};

struct LPResult {
    enum class Status { optimal, infeasible, unbounded };
    Status status = Status::infeasible;
    RatVector x;    ///< an optimal vertex when status is optimal
    Rational value; ///< optimal objective value
};

LPResult solve_lp(const LinearProgram& lp);

} // namespace clutterlab
