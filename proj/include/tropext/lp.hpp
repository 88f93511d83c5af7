#ifndef TROPEXT_LP_HPP
#define TROPEXT_LP_HPP

#include "tropext/linalg.hpp"

namespace tropext {

// Exact rational LP over free variables:
//   optimize c.x  subject to  A x >= b,  E x = e.
// Bland's rule throughout, so results are deterministic.

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Rat value;
    QVec point;  // optimizer in the original variables (when Optimal)
};

struct LpProblem {
    std::size_t num_vars = 0;
    std::vector<QVec> ineq_lhs;  // rows a with a.x >= ineq_rhs
    QVec ineq_rhs;
    std::vector<QVec> eq_lhs;
    QVec eq_rhs;

    void add_ineq(QVec a, Rat b) {
        ineq_lhs.push_back(std::move(a));
        ineq_rhs.push_back(std::move(b));
    }
    void add_eq(QVec a, Rat b) {
        eq_lhs.push_back(std::move(a));
        eq_rhs.push_back(std::move(b));
    }
};

LpResult lp_minimize(const LpProblem& p, const QVec& objective);
LpResult lp_maximize(const LpProblem& p, const QVec& objective);

}  // namespace tropext

#endif
