#include "clutterlab/tdi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

#include "clutterlab/lp.hpp"

namespace clutterlab {

LinearSystem::LinearSystem(std::size_t n_, std::vector<IntVector> columns_, IntVector w_) :
    n(n_), columns(std::move(columns_)), w(std::move(w_))
{
    if (columns.size() != w.size())
        throw UsageError("system has " + std::to_string(columns.size()) + " columns but " + std::to_string(w.size()) +
                         " right-hand sides");
    for (const auto& c : columns) {
        if (c.size() != n)
            throw UsageError("system column " + to_string(c) + " does not have length " + std::to_string(n));
        if (is_zero(c))
            throw UsageError("system columns must be nonzero");
    }
}

HRep LinearSystem::polyhedron() const
{
    HRep h;
    h.dim = n;
    for (std::size_t i = 0; i < columns.size(); ++i)
        h.inequalities.push_back({columns[i], w[i]});
    return h;
}

std::vector<IntVector> LinearSystem::lifted() const
{
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        IntVector v = columns[i];
        v.push_back(w[i]);
        out.push_back(std::move(v));
    }
    return out;
}

const char* to_string(TdiVerdict v)
{
    switch (v) {
    case TdiVerdict::tdi:
        return "tdi";
    case TdiVerdict::not_tdi:
        return "not_tdi";
    case TdiVerdict::vacuous:
        return "vacuous";
    case TdiVerdict::undecided:
        return "undecided";
    }
    return "undecided";
}

TdiCertificate is_tdi(const LinearSystem& s, StepBudget& budget)
{
    TdiCertificate cert;
    try {
        const auto faces = minimal_faces(s.polyhedron());
        if (faces.empty()) {
            cert.verdict = TdiVerdict::vacuous;
            return cert;
        }
        for (const auto& f : faces) {
            FaceRecord rec;
            rec.point = f.point;
            rec.active = f.active;
            std::vector<IntVector> cols;
            for (auto i : f.active)
                cols.push_back(s.columns[i]);
            if (cols.empty()) {
                rec.hilbert_basis = true;
            } else {
                auto rep = is_hilbert_basis(cols, s.n, budget);
                rec.hilbert_basis = rep.verdict;
                rec.missing = std::move(rep.missing);
            }
            const bool ok = rec.hilbert_basis;
            cert.faces.push_back(std::move(rec));
            if (!ok) {
                cert.verdict = TdiVerdict::not_tdi;
                return cert;
            }
        }
        cert.verdict = TdiVerdict::tdi;
    } catch (const ResourceExceeded& e) {
        cert.verdict = TdiVerdict::undecided;
        cert.faces.clear();
        cert.note = e.what();
    }
    return cert;
}

TdiCertificate is_tdi(const LinearSystem& s)
{
    StepBudget budget;
    return is_tdi(s, budget);
}

// ---------------------------------------------------------------------------
// Clutters

HRep covering_polyhedron(const Clutter& c)
{
    HRep h;
    h.dim = c.n();
    for (std::size_t j = 0; j < c.n(); ++j) {
        IntVector a(c.n(), 0);
        a[j] = -1;
        h.inequalities.push_back({a, 0});
    }
    for (const auto& v : c.characteristic_vectors()) {
        IntVector a(v);
        for (auto& x : a)
            x = -x;
        h.inequalities.push_back({a, -1});
    }
    return h;
}

IdealReport is_ideal_clutter(const Clutter& c)
{
    if (c.size() == 0)
        throw UsageError("idealness needs a clutter with at least one edge");
    const auto rep = is_integral(covering_polyhedron(c));
    return {rep.integral, rep.fractional_vertex};
}

LinearSystem mfmc_system(const Clutter& c)
{
    std::vector<IntVector> cols;
    IntVector w;
    for (const auto& v : c.characteristic_vectors()) {
        IntVector a(v);
        for (auto& x : a)
            x = -x;
        cols.push_back(std::move(a));
        w.emplace_back(-1);
    }
    for (std::size_t j = 0; j < c.n(); ++j) {
        IntVector a(c.n(), 0);
        a[j] = -1;
        cols.push_back(std::move(a));
        w.emplace_back(0);
    }
    return LinearSystem(c.n(), std::move(cols), std::move(w));
}

namespace {

long best_packing(const std::vector<Mask>& edges, std::vector<long>& cap)
{
    long best = 0;
    std::function<void(std::size_t, long)> go = [&](std::size_t i, long value) {
        if (i == edges.size()) {
            best = std::max(best, value);
            return;
        }
        long room = std::numeric_limits<long>::max();
        for (Mask m = edges[i]; m; m &= m - 1)
            room = std::min(room, cap[std::countr_zero(m)]);
        // bound: every later edge uses at least one unit of some capacity
        long rest = 0;
        for (long c : cap)
            rest += c;
        if (value + rest <= best)
            return;
        for (long y = room; y >= 0; --y) {
            for (Mask m = edges[i]; m; m &= m - 1)
                cap[std::countr_zero(m)] -= y;
            go(i + 1, value + y);
            for (Mask m = edges[i]; m; m &= m - 1)
                cap[std::countr_zero(m)] += y;
        }
    };
    go(0, 0);
    return best;
}

} // namespace

IlpEvidence mfmc_ilp_scan(const Clutter& c, unsigned max_entry, std::size_t max_instances)
{
    IlpEvidence ev;
    ev.performed = true;
    const std::size_t n = c.n();
    unsigned bound = max_entry;
    auto count = [&](unsigned b) {
        double total = 1;
        for (std::size_t i = 0; i < n; ++i)
            total *= b + 1;
        return total;
    };
    while (bound > 1 && count(bound) > static_cast<double>(max_instances))
        --bound;
    ev.max_entry = bound;

    const auto vecs = c.characteristic_vectors();
    std::vector<long> w(n, 0);
    while (true) {
        LinearProgram lp;
        lp.num_vars = c.size();
        for (std::size_t j = 0; j < n; ++j) {
            RatVector row(c.size());
            for (std::size_t i = 0; i < c.size(); ++i)
                row[i] = vecs[i][j];
            lp.le_rows.push_back(row);
            lp.le_rhs.emplace_back(w[j]);
        }
        lp.objective.assign(c.size(), 1);
        const auto res = solve_lp(lp);
        std::vector<long> cap = w;
        const long integral = best_packing(c.masks(), cap);
        ++ev.instances;
        if (res.status != LPResult::Status::optimal || res.value != Rational(integral)) {
            ev.all_integral = false;
            ev.counterexample_w = IntVector(w.begin(), w.end());
            break;
        }
        std::size_t k = 0;
        while (k < n && w[k] == static_cast<long>(bound))
            w[k++] = 0;
        if (k == n)
            break;
        ++w[k];
    }
    return ev;
}

MfmcReport is_mfmc(const Clutter& c, const MfmcOptions& opts, StepBudget& budget)
{
    if (c.size() == 0)
        throw UsageError("MFMC needs a clutter with at least one edge");
    MfmcReport rep;
    rep.certificate = is_tdi(mfmc_system(c), budget);
    if (opts.ilp_crosscheck && rep.certificate.verdict == TdiVerdict::tdi)
        rep.evidence = mfmc_ilp_scan(c, opts.max_entry, opts.max_instances);
    return rep;
}

MfmcReport is_mfmc(const Clutter& c, const MfmcOptions& opts)
{
    StepBudget budget;
    return is_mfmc(c, opts, budget);
}

// ---------------------------------------------------------------------------
// Hilbert-basis conditions

namespace {

// nullopt when P is empty
std::optional<bool> integral_or_empty(const HRep& h)
{
    if (to_vrep(h).is_empty())
        return std::nullopt;
    return is_integral(h).integral;
}

bool tdi_holds(TdiVerdict v) { return v == TdiVerdict::tdi || v == TdiVerdict::vacuous; }

} // namespace

LiftedHilbertReport thm41_check(const LinearSystem& s, StepBudget& budget)
{
    LiftedHilbertReport rep;
    const auto integral = integral_or_empty(s.polyhedron());
    rep.empty = !integral.has_value();
    rep.integral = integral.value_or(true);
    rep.lifted_hilbert = is_hilbert_basis(s.lifted(), s.n + 1, budget).verdict;
    rep.tdi = is_tdi(s, budget).verdict;
    rep.implication_respected = !(rep.integral && rep.lifted_hilbert && rep.tdi == TdiVerdict::not_tdi);
    return rep;
}

LiftedHilbertReport thm41_check(const LinearSystem& s)
{
    StepBudget budget;
    return thm41_check(s, budget);
}

LinearSystem nonnegative_system(std::size_t n, const std::vector<IntVector>& columns, const IntVector& w)
{
    std::vector<IntVector> cols = columns;
    IntVector rhs = w;
    for (std::size_t j = 0; j < n; ++j) {
        IntVector a(n, 0);
        a[j] = -1;
        cols.push_back(std::move(a));
        rhs.emplace_back(0);
    }
    return LinearSystem(n, std::move(cols), std::move(rhs));
}

NonnegativeSystemReport prop42_check(std::size_t n, const std::vector<IntVector>& columns, const IntVector& w,
                          StepBudget& budget)
{
    for (const auto& c : columns)
        for (const auto& x : c)
            if (x < 0)
                throw UsageError("prop42_check needs a nonnegative matrix");
    for (const auto& x : w)
        if (x < 0)
            throw UsageError("prop42_check needs a nonnegative right-hand side");
    const LinearSystem s = nonnegative_system(n, columns, w);
    NonnegativeSystemReport rep;
    rep.tdi = is_tdi(s, budget).verdict;
    // 0 ∈ P because w ≥ 0, so P is never empty
    rep.integral = is_integral(s.polyhedron()).integral;
    auto hb = is_hilbert_basis(s.lifted(), n + 1, budget);
    rep.hilbert = hb.verdict;
    rep.missing = std::move(hb.missing);
    if (rep.tdi == TdiVerdict::undecided)
        throw ResourceExceeded("TDI verdict undecided within budget");
    rep.agree = (rep.tdi == TdiVerdict::tdi) == (rep.integral && rep.hilbert);
    return rep;
}

NonnegativeSystemReport prop42_check(std::size_t n, const std::vector<IntVector>& columns, const IntVector& w)
{
    StepBudget budget;
    return prop42_check(n, columns, w, budget);
}

RoundingReport integer_rounding_check(const LinearSystem& s, StepBudget& budget)
{
    RoundingReport rep;
    auto H = s.lifted();
    IntVector e(s.n + 1, 0);
    e[s.n] = 1;
    H.push_back(e);
    auto hb = is_hilbert_basis(H, s.n + 1, budget);
    rep.rounding = hb.verdict;
    rep.missing = std::move(hb.missing);
    const auto integral = integral_or_empty(s.polyhedron());
    rep.empty = !integral.has_value();
    rep.integral = integral.value_or(true);
    rep.tdi = is_tdi(s, budget).verdict;
    if (rep.tdi != TdiVerdict::undecided)
        rep.equivalence_respected = tdi_holds(rep.tdi) == (rep.integral && rep.rounding);
    return rep;
}

RoundingReport integer_rounding_check(const LinearSystem& s)
{
    StepBudget budget;
    return integer_rounding_check(s, budget);
}

// ---------------------------------------------------------------------------
// Stability polytopes

LinearSystem stab_system(const SimpleGraph& g)
{
    const Clutter cl = clique_clutter(g);
    return nonnegative_system(g.n(), cl.characteristic_vectors(), IntVector(cl.size(), Integer(1)));
}

HRep stab_polytope(const SimpleGraph& g) { return stab_system(g).polyhedron(); }

WpgtReport wpgt_crosscheck(const SimpleGraph& g)
{
    WpgtReport rep;
    rep.perfect = is_perfect_small(g).perfect;
    const LinearSystem s = stab_system(g);
    rep.integral = is_integral(s.polyhedron()).integral;
    rep.tdi = is_tdi(s).verdict;
    rep.agree = rep.tdi != TdiVerdict::undecided && rep.perfect == rep.integral &&
                rep.integral == (rep.tdi == TdiVerdict::tdi);
    return rep;
}

} // namespace clutterlab
