#include "clutterlab/lp.hpp"

#include <optional>

namespace clutterlab {

namespace {

// Dense tableau. Row 0..m-1 are constraints, the last column is the right-hand side.
class Tableau {
public:
    Tableau(std::size_t m, std::size_t n) : m_(m), n_(n), t_(m, RatVector(n + 1)), basis_(m) {}

    Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
    Rational& rhs(std::size_t i) { return t_[i][n_]; }
    std::size_t& basic(std::size_t i) { return basis_[i]; }
    [[nodiscard]] std::size_t rows() const { return m_; }

    void pivot(std::size_t r, std::size_t c)
    {
        const Rational p = t_[r][c];
        for (auto& x : t_[r])
            x /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || sgn(t_[i][c]) == 0)
                continue;
            const Rational f = t_[i][c];
            for (std::size_t j = 0; j <= n_; ++j)
                if (sgn(t_[r][j]) != 0)
                    t_[i][j] -= f * t_[r][j];
        }
        basis_[r] = c;
    }

    /// Maximizes ⟨cost, x⟩ over columns [0, active). Returns false when unbounded.
    bool optimize(const RatVector& cost, std::size_t active)
    {
        while (true) {
            // reduced costs
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < active && !enter; ++j) {
                Rational r = cost[j];
                for (std::size_t i = 0; i < m_; ++i)
                    if (sgn(t_[i][j]) != 0)
                        r -= cost[basis_[i]] * t_[i][j];
                if (sgn(r) > 0)
                    enter = j;
            }
            if (!enter)
                return true;
            const std::size_t c = *enter;
            std::optional<std::size_t> leave;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(t_[i][c]) <= 0)
                    continue;
                Rational ratio = t_[i][n_] / t_[i][c];
                if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (!leave)
                return false;
            pivot(*leave, c);
        }
    }

    void drop_row(std::size_t r)
    {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        --m_;
    }

private:
    std::size_t m_, n_;
    std::vector<RatVector> t_;
    std::vector<std::size_t> basis_;
};

} // namespace

LPResult solve_lp(const LinearProgram& lp)
{
    const std::size_t n = lp.num_vars;
    const std::size_t mle = lp.le_rows.size();
    const std::size_t meq = lp.eq_rows.size();
    if (lp.le_rhs.size() != mle || lp.eq_rhs.size() != meq)
        throw UsageError("linear program: right-hand side length mismatch");
    if (!lp.objective.empty() && lp.objective.size() != n)
        throw UsageError("linear program: objective length mismatch");
    for (const auto& r : lp.le_rows)
        if (r.size() != n)
            throw UsageError("linear program: row length mismatch");
    for (const auto& r : lp.eq_rows)
        if (r.size() != n)
            throw UsageError("linear program: row length mismatch");

    const std::size_t m = mle + meq;
    // columns: x (n), slacks (mle), artificials (m)
    const std::size_t total = n + mle + m;
    Tableau t(m, total);
    for (std::size_t i = 0; i < m; ++i) {
        const bool le = i < mle;
        const RatVector& row = le ? lp.le_rows[i] : lp.eq_rows[i - mle];
        Rational b = le ? lp.le_rhs[i] : lp.eq_rhs[i - mle];
        const int sign = sgn(b) < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j)
            t.at(i, j) = sign * row[j];
        if (le)
            t.at(i, n + i) = sign;
        t.at(i, n + mle + i) = 1;
        t.rhs(i) = sign * b;
        t.basic(i) = n + mle + i;
    }

    // phase 1: maximize −Σ artificials
    RatVector cost1(total, 0);
    for (std::size_t i = 0; i < m; ++i)
        cost1[n + mle + i] = -1;
    t.optimize(cost1, total);
    for (std::size_t i = 0; i < t.rows(); ++i)
        if (t.basic(i) >= n + mle && sgn(t.rhs(i)) != 0)
            return {LPResult::Status::infeasible, {}, 0};

    // drive zero-level artificials out of the basis, dropping redundant rows
    for (std::size_t i = 0; i < t.rows();) {
        if (t.basic(i) < n + mle) {
            ++i;
            continue;
        }
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < n + mle && !col; ++j)
            if (sgn(t.at(i, j)) != 0)
                col = j;
        if (col) {
            t.pivot(i, *col);
            ++i;
        } else {
            t.drop_row(i);
        }
    }

    RatVector cost2(total, 0);
    for (std::size_t j = 0; j < n && j < lp.objective.size(); ++j)
        cost2[j] = lp.objective[j];
    if (!t.optimize(cost2, n + mle))
        return {LPResult::Status::unbounded, {}, 0};

    LPResult res;
    res.status = LPResult::Status::optimal;
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < t.rows(); ++i)
        if (t.basic(i) < n)
            res.x[t.basic(i)] = t.rhs(i);
    res.value = 0;
    for (std::size_t j = 0; j < n && j < lp.objective.size(); ++j)
        res.value += lp.objective[j] * res.x[j];
    return res;
}

} // namespace clutterlab
