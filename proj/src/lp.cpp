#include "tropext/lp.hpp"

namespace tropext {

namespace {

// Standard-form tableau simplex: min c.y, M y = d, y >= 0, d >= 0.
// Column layout: structural variables first, then (phase 1) artificials.
struct Tableau {
    std::size_t m, n;              // constraint rows, total columns
    std::vector<QVec> rows;        // m rows of length n+1 (rhs last)
    std::vector<std::size_t> basis;  // basic column per row

    Rat& rhs(std::size_t i) { return rows[i][n]; }

    // Price out: reduced costs for objective c (length n), returns (z, cost row).
    // cost_j = c_j - sum_i c_{basis_i} * rows[i][j]
    QVec reduced_costs(const QVec& c, Rat& z) const {
        QVec cost(c);
        z = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const Rat& cb = c[basis[i]];
            if (cb == 0) continue;
            z += cb * rows[i][n];
            for (std::size_t j = 0; j < n; ++j)
                if (rows[i][j] != 0) cost[j] -= cb * rows[i][j];
        }
        return cost;
    }

    void pivot(std::size_t r, std::size_t c) {
        Rat inv = Rat(1) / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Returns false when optimal, throws-on-unbounded replaced by status flag.
    // allowed_cols limits entering candidates (used to bar artificials in phase 2).
    enum class Step { Optimal, Pivoted, Unbounded };
    Step step(const QVec& c, std::size_t max_col) {
        Rat z;
        QVec cost = reduced_costs(c, z);
        std::size_t enter = n;
        for (std::size_t j = 0; j < max_col; ++j)  // Bland: first improving column
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == n) return Step::Optimal;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (rows[i][enter] <= 0) continue;
            Rat ratio = rows[i][n] / rows[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) return Step::Unbounded;
        pivot(leave, enter);
        return Step::Pivoted;
    }
};

}  // namespace

LpResult lp_minimize(const LpProblem& p, const QVec& objective) {
    if (objective.size() != p.num_vars) throw KernelError("DIMENSION_MISMATCH", "lp objective");
    std::size_t nv = p.num_vars;
    std::size_t n_ineq = p.ineq_lhs.size(), n_eq = p.eq_lhs.size();
    std::size_t m = n_ineq + n_eq;
    // columns: x+ (nv), x- (nv), slacks (n_ineq), artificials (m)
    std::size_t n_struct = 2 * nv + n_ineq;
    std::size_t n = n_struct + m;

    Tableau t;
    t.m = m;
    t.n = n;
    t.rows.assign(m, QVec(n + 1));
    t.basis.assign(m, 0);

    auto fill_row = [&](std::size_t r, const QVec& lhs, const Rat& rhs, bool with_slack,
                        std::size_t slack_idx) {
        if (lhs.size() != nv) throw KernelError("DIMENSION_MISMATCH", "lp constraint");
        QVec& row = t.rows[r];
        for (std::size_t j = 0; j < nv; ++j) {
            row[j] = lhs[j];
            row[nv + j] = -lhs[j];
        }
        if (with_slack) row[2 * nv + slack_idx] = -1;  // a.x - s = b
        row[n] = rhs;
        if (row[n] < 0)
            for (auto& v : row) v = -v;
        row[n_struct + r] = 1;  // artificial
        t.basis[r] = n_struct + r;
    };

    for (std::size_t i = 0; i < n_ineq; ++i) fill_row(i, p.ineq_lhs[i], p.ineq_rhs[i], true, i);
    for (std::size_t i = 0; i < n_eq; ++i) fill_row(n_ineq + i, p.eq_lhs[i], p.eq_rhs[i], false, 0);

    // Phase 1: minimize sum of artificials.
    QVec phase1(n);
    for (std::size_t j = n_struct; j < n; ++j) phase1[j] = 1;
    for (;;) {
        auto s = t.step(phase1, n);
        if (s == Tableau::Step::Optimal) break;
        if (s == Tableau::Step::Unbounded)
            throw KernelError("INTERNAL", "phase 1 unbounded");  // impossible: objective >= 0
    }
    Rat z1;
    t.reduced_costs(phase1, z1);
    if (z1 != 0) return {LpStatus::Infeasible, Rat(0), {}};

    // Drive remaining artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < n_struct) continue;
        std::size_t c = n_struct;
        for (std::size_t j = 0; j < n_struct; ++j)
            if (t.rows[i][j] != 0) {
                c = j;
                break;
            }
        if (c < n_struct) t.pivot(i, c);
        // else: redundant row; its artificial stays basic at zero, harmless
        // since phase 2 bars artificial columns from entering.
    }

    // Phase 2.
    QVec c2(n);
    for (std::size_t j = 0; j < nv; ++j) {
        c2[j] = objective[j];
        c2[nv + j] = -objective[j];
    }
    for (;;) {
        auto s = t.step(c2, n_struct);
        if (s == Tableau::Step::Optimal) break;
        if (s == Tableau::Step::Unbounded) return {LpStatus::Unbounded, Rat(0), {}};
    }

    QVec y(n);
    for (std::size_t i = 0; i < m; ++i) y[t.basis[i]] = t.rows[i][n];
    QVec x(nv);
    for (std::size_t j = 0; j < nv; ++j) x[j] = y[j] - y[nv + j];
    return {LpStatus::Optimal, dot(objective, x), std::move(x)};
}

LpResult lp_maximize(const LpProblem& p, const QVec& objective) {
    QVec neg(objective.size());
    for (std::size_t i = 0; i < objective.size(); ++i) neg[i] = -objective[i];
    LpResult r = lp_minimize(p, neg);
    r.value = -r.value;
    return r;
}

}  // namespace tropext
