#include "clutterlab/ideals.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "clutterlab/lp.hpp"
#include "clutterlab/polyhedron.hpp"

namespace clutterlab {

namespace {

bool dominates(const IntVector& a, const IntVector& g)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] < g[i])
            return false;
    return true;
}

Integer degree(const IntVector& a)
{
    Integer s = 0;
    for (const auto& x : a)
        s += x;
    return s;
}

std::vector<IntVector> minimalize(std::vector<IntVector> v)
{
    std::sort(v.begin(), v.end(), [](const IntVector& a, const IntVector& b) {
        const Integer da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<IntVector> out;
    for (auto& a : v)
        if (std::none_of(out.begin(), out.end(), [&](const IntVector& g) { return dominates(a, g); }))
            out.push_back(std::move(a));
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal lattice points of {a ∈ [0, box]ⁿ : ⟨c_k, a⟩ ≥ rhs_k for all k}, with c_k ≥ 0.
std::vector<IntVector> staircase(std::size_t n, const std::vector<std::vector<long>>& c, const std::vector<long>& rhs,
                                 long box, StepBudget& budget)
{
    const std::size_t m = c.size();
    // tail[k][j] = box · Σ_{l ≥ j} c[k][l]
    std::vector<std::vector<long>> tail(m, std::vector<long>(n + 1, 0));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = n; j-- > 0;)
            tail[k][j] = tail[k][j + 1] + box * c[k][j];

    std::vector<long> a(n, 0);
    std::vector<long> s(m, 0);
    std::vector<IntVector> out;

    auto satisfied = [&]() {
        for (std::size_t k = 0; k < m; ++k)
            if (s[k] < rhs[k])
                return false;
        return true;
    };
    // a unit of coordinate j is redundant when removing it keeps every constraint satisfied
    auto redundant = [&](std::size_t j) {
        for (std::size_t k = 0; k < m; ++k)
            if (c[k][j] > 0 && s[k] - c[k][j] < rhs[k])
                return false;
        return true;
    };
    auto emit = [&](std::size_t upto) {
        for (std::size_t j = 0; j < upto; ++j)
            if (a[j] > 0 && redundant(j))
                return;
        out.emplace_back(a.begin(), a.end());
    };

    std::function<void(std::size_t)> go = [&](std::size_t j) {
        budget.charge(1, "staircase enumeration");
        if (satisfied()) {
            emit(j);
            return;
        }
        if (j == n)
            return;
        for (std::size_t k = 0; k < m; ++k)
            if (s[k] + tail[k][j] < rhs[k])
                return;
        // a positive coordinate that is already redundant stays redundant
        for (std::size_t l = 0; l < j; ++l)
            if (a[l] > 0 && redundant(l))
                return;
        for (long v = 0; v <= box; ++v) {
            a[j] = v;
            if (v > 0)
                for (std::size_t k = 0; k < m; ++k)
                    s[k] += c[k][j];
            const bool done = satisfied();
            go(j + 1);
            if (done)
                break;
        }
        for (std::size_t k = 0; k < m; ++k)
            s[k] -= a[j] * c[k][j];
        a[j] = 0;
    };
    go(0);
    return minimalize(std::move(out));
}

long max_entry(const MonomialIdeal& I)
{
    long e = 0;
    for (const auto& g : I.gens())
        for (const auto& x : g)
            e = std::max(e, x.get_si());
    return e;
}

std::optional<IntVector> first_outside(const MonomialIdeal& big, const MonomialIdeal& small)
{
    for (const auto& g : big.gens())
        if (!small.contains(g))
            return g;
    return std::nullopt;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<IntVector> gens) : n_(n)
{
    for (const auto& g : gens) {
        if (g.size() != n)
            throw UsageError("monomial exponent " + to_string(g) + " does not have length " + std::to_string(n));
        for (const auto& x : g)
            if (x < 0)
                throw UsageError("monomial exponents must be nonnegative");
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const IntVector& a) const
{
    if (a.size() != n_)
        throw UsageError("monomial has the wrong number of variables");
    return std::any_of(gens_.begin(), gens_.end(), [&](const IntVector& g) { return dominates(a, g); });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b)
{
    if (a.n() != b.n())
        throw UsageError("ideals live in different polynomial rings");
    return a == b;
}

bool contains(const MonomialIdeal& I, const IntVector& a) { return I.contains(a); }

MonomialIdeal edge_ideal(const Clutter& c) { return MonomialIdeal(c.n(), c.characteristic_vectors()); }

MonomialIdeal power(const MonomialIdeal& I, unsigned i)
{
    if (i == 0)
        throw UsageError("powers start at 1");
    std::vector<IntVector> cur = I.gens();
    for (unsigned k = 1; k < i; ++k) {
        std::set<IntVector> next;
        for (const auto& p : cur)
            for (const auto& g : I.gens()) {
                IntVector s(p);
                for (std::size_t j = 0; j < s.size(); ++j)
                    s[j] += g[j];
                next.insert(std::move(s));
            }
        cur = minimalize({next.begin(), next.end()});
    }
    return MonomialIdeal(I.n(), cur);
}

MonomialIdeal symbolic_power(const Clutter& c, unsigned i, StepBudget& budget)
{
    if (i == 0)
        throw UsageError("powers start at 1");
    const Clutter covers = blocker(c);
    std::vector<std::vector<long>> rows;
    std::vector<long> rhs;
    for (Mask m : covers.masks()) {
        std::vector<long> row(c.n(), 0);
        for (int v : from_mask(m))
            row[v] = 1;
        rows.push_back(row);
        rhs.push_back(i);
    }
    return MonomialIdeal(c.n(), staircase(c.n(), rows, rhs, i, budget));
}

MonomialIdeal symbolic_power(const Clutter& c, unsigned i)
{
    StepBudget budget;
    return symbolic_power(c, i, budget);
}

MonomialIdeal closure_power(const MonomialIdeal& I, unsigned i, StepBudget& budget)
{
    if (i == 0)
        throw UsageError("powers start at 1");
    if (I.gens().empty())
        return I;
    // Newton polyhedron conv(gens) + ℝ₊ⁿ
    VRep v;
    v.dim = I.n();
    for (const auto& g : I.gens())
        v.vertices.push_back(to_rational(g));
    for (std::size_t j = 0; j < I.n(); ++j) {
        IntVector e(I.n(), 0);
        e[j] = 1;
        v.rays.push_back(e);
    }
    const HRep h = to_hrep(v);
    if (!h.equations.empty())
        throw InternalError("Newton polyhedron is not full-dimensional");
    std::vector<std::vector<long>> rows;
    std::vector<long> rhs;
    for (const auto& q : h.inequalities) {
        // ⟨normal, x⟩ ≤ rhs  ⇔  ⟨−normal, x⟩ ≥ −rhs
        std::vector<long> row(I.n());
        for (std::size_t j = 0; j < I.n(); ++j) {
            row[j] = -q.normal[j].get_si();
            if (row[j] < 0)
                throw InternalError("Newton polyhedron facet with a negative normal entry");
        }
        rows.push_back(row);
        rhs.push_back(-q.rhs.get_si() * static_cast<long>(i));
    }
    return MonomialIdeal(I.n(), staircase(I.n(), rows, rhs, static_cast<long>(i) * max_entry(I), budget));
}

MonomialIdeal closure_power(const MonomialIdeal& I, unsigned i)
{
    StepBudget budget;
    return closure_power(I, i, budget);
}

bool in_closure_power(const MonomialIdeal& I, unsigned i, const IntVector& a)
{
    LinearProgram lp;
    lp.num_vars = I.gens().size();
    for (std::size_t j = 0; j < I.n(); ++j) {
        RatVector row(lp.num_vars);
        for (std::size_t k = 0; k < lp.num_vars; ++k)
            row[k] = I.gens()[k][j];
        lp.le_rows.push_back(row);
        lp.le_rhs.emplace_back(a[j]);
    }
    lp.eq_rows.push_back(RatVector(lp.num_vars, 1));
    lp.eq_rhs.emplace_back(i);
    return solve_lp(lp).status == LPResult::Status::optimal;
}

PowerCheck is_ntf_upto(const Clutter& c, unsigned r, StepBudget& budget)
{
    const MonomialIdeal I = edge_ideal(c);
    PowerCheck out;
    out.bound = r;
    for (unsigned i = 1; i <= r; ++i) {
        const auto p = power(I, i);
        const auto s = symbolic_power(c, i, budget);
        if (!(p == s)) {
            out.holds = false;
            out.failing_power = i;
            out.witness = first_outside(s, p);
            return out;
        }
    }
    return out;
}

PowerCheck is_ntf_upto(const Clutter& c, unsigned r)
{
    StepBudget budget;
    return is_ntf_upto(c, r, budget);
}

NormalityReport is_normal_upto(const Clutter& c, unsigned r, StepBudget& budget)
{
    const MonomialIdeal I = edge_ideal(c);
    NormalityReport out;
    out.normal.bound = out.closure_symbolic.bound = r;
    for (unsigned i = 1; i <= r; ++i) {
        const auto cl = closure_power(I, i, budget);
        if (out.normal.holds) {
            const auto p = power(I, i);
            if (!(p == cl)) {
                out.normal.holds = false;
                out.normal.failing_power = i;
                out.normal.witness = first_outside(cl, p);
            }
        }
        if (out.closure_symbolic.holds) {
            const auto s = symbolic_power(c, i, budget);
            if (!(s == cl)) {
                out.closure_symbolic.holds = false;
                out.closure_symbolic.failing_power = i;
                out.closure_symbolic.witness = first_outside(s, cl);
            }
        }
        if (!out.normal.holds && !out.closure_symbolic.holds)
            break;
    }
    return out;
}

NormalityReport is_normal_upto(const Clutter& c, unsigned r)
{
    StepBudget budget;
    return is_normal_upto(c, r, budget);
}

} // namespace clutterlab
