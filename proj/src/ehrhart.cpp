#include "clutterlab/ehrhart.hpp"

#include <algorithm>
#include <set>

#include "clutterlab/lattice.hpp"
#include "clutterlab/tdi.hpp"

namespace clutterlab {

namespace {

std::vector<IntVector> lifted(const Clutter& c)
{
    auto vs = c.characteristic_vectors();
    for (auto& v : vs)
        v.emplace_back(1);
    return vs;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Coefficients of the interpolating polynomial through (0, y0), …, (m, ym).
RatVector lagrange(const std::vector<std::uint64_t>& y, std::size_t m)
{
    RatVector coeffs(m + 1, 0);
    for (std::size_t i = 0; i <= m; ++i) {
        // basis polynomial ∏_{j≠i} (x − j)/(i − j)
        RatVector basis{1};
        Rational denom = 1;
        for (std::size_t j = 0; j <= m; ++j) {
            if (j == i)
                continue;
            RatVector next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * static_cast<long>(j);
            }
            basis = std::move(next);
            denom *= static_cast<long>(i) - static_cast<long>(j);
        }
        for (std::size_t k = 0; k <= m; ++k)
            coeffs[k] += basis[k] * Rational(Integer(static_cast<unsigned long>(y[i]))) / denom;
    }
    return coeffs;
}

Rational evaluate(const RatVector& p, long x)
{
    Rational r = 0;
    for (std::size_t k = p.size(); k-- > 0;)
        r = r * x + p[k];
    return r;
}

} // namespace

EhrhartReport is_ehrhart_clutter(const Clutter& c, StepBudget& budget)
{
    if (c.size() == 0)
        throw UsageError("the Ehrhart test needs at least one edge");
    auto rep = is_hilbert_basis(lifted(c), c.n() + 1, budget);
    EhrhartReport out;
    out.ehrhart = rep.verdict;
    if (!rep.missing.empty())
        out.witness = rep.missing.front();
    return out;
}

EhrhartReport is_ehrhart_clutter(const Clutter& c)
{
    StepBudget budget;
    return is_ehrhart_clutter(c, budget);
}

Polytope clutter_polytope(const Clutter& c)
{
    if (c.size() == 0)
        throw UsageError("the clutter polytope needs at least one edge");
    return Polytope::from_points(c.characteristic_vectors());
}

std::uint64_t ehrhart_function(const Clutter& c, unsigned b) { return clutter_polytope(c).count_lattice_points(b); }

EhrhartData ehrhart_data(const Clutter& c)
{
    const Polytope p = clutter_polytope(c);
    EhrhartData out;
    const int d = p.dimension();
    out.dim = d;
    for (int b = 0; b <= d + 1; ++b)
        out.values.push_back(p.count_lattice_points(static_cast<unsigned>(b)));

    out.polynomial = lagrange(out.values, static_cast<std::size_t>(d));
    if (evaluate(out.polynomial, d + 1) != Rational(Integer(static_cast<unsigned long>(out.values.back()))))
        throw InternalError("lattice point counts are not polynomial of degree dim P");

    // h_k = Σ_j (−1)^j C(d+1, j) L(k − j)
    std::vector<Integer> h;
    for (int k = 0; k <= d + 1; ++k) {
        Integer s = 0;
        for (int j = 0; j <= k; ++j) {
            const Integer term = binomial(static_cast<unsigned>(d + 1), static_cast<unsigned>(j)) *
                                 Integer(static_cast<unsigned long>(out.values[static_cast<std::size_t>(k - j)]));
            s += (j % 2 == 0) ? term : Integer(-term);
        }
        h.push_back(s);
    }
    if (h.back() != 0)
        throw InternalError("h-vector has a nonzero entry beyond dim P");
    while (h.size() > 1 && h.back() == 0)
        h.pop_back();
    for (const auto& x : h)
        if (x < 0)
            throw InternalError("negative h-vector entry");
    out.hvector = h;

    // normalized volume: leading coefficient · d! = h(1)
    Integer fact = 1;
    for (int k = 2; k <= d; ++k)
        fact *= k;
    Integer hsum = 0;
    for (const auto& x : h)
        hsum += x;
    if (out.polynomial[static_cast<std::size_t>(d)] * Rational(fact) != Rational(hsum))
        throw InternalError("leading Ehrhart coefficient does not match h(1)");

    const int s = static_cast<int>(h.size()) - 1;
    out.a_series = s - (d + 1);
    out.a_interior = 0;
    for (int k = 1; k <= d + 1; ++k)
        if (p.count_relative_interior_lattice_points(static_cast<unsigned>(k)) > 0) {
            out.a_interior = -k;
            break;
        }
    if (out.a_interior == 0)
        throw InternalError("no interior lattice point up to dilation dim P + 1");
    if (out.a_interior != out.a_series)
        throw InternalError("a-invariant from the series (" + std::to_string(out.a_series) +
                            ") differs from the interior-point value (" + std::to_string(out.a_interior) + ")");
    out.regularity = d + 1 + out.a_series;
    if (out.regularity != s)
        throw InternalError("regularity does not match the h-vector length");
    return out;
}

std::vector<Integer> hvector(const Clutter& c) { return ehrhart_data(c).hvector; }
int a_invariant_series(const Clutter& c) { return ehrhart_data(c).a_series; }
int a_invariant_interior(const Clutter& c) { return ehrhart_data(c).a_interior; }
int regularity(const Clutter& c) { return ehrhart_data(c).regularity; }

RegularityBoundReport check_theorem22(const Clutter& c)
{
    RegularityBoundReport rep;
    rep.d = is_uniform(c);
    rep.unmixed = is_unmixed(c);
    const bool strict = c.strict();
    if (!strict)
        rep.unmet.emplace_back("clutter has a singleton edge or an isolated vertex");
    if (!rep.d)
        rep.unmet.emplace_back("not uniform");
    if (!rep.unmixed)
        rep.unmet.emplace_back("not unmixed");
    rep.mfmc = is_mfmc(c, MfmcOptions{false, 0, 0}).certificate.verdict == TdiVerdict::tdi;
    if (!rep.mfmc)
        rep.unmet.emplace_back("not MFMC");
    rep.hypotheses_met = rep.unmet.empty();

    rep.g = covering_number(c);
    rep.ehrhart = is_ehrhart_clutter(c).ehrhart;
    rep.data = ehrhart_data(c);
    rep.konig = has_konig(c);
    const long g = static_cast<long>(rep.g);
    rep.a_bound = rep.data.a_series <= -g;
    rep.a_tight = rep.data.a_series == -g;
    if (rep.d) {
        const long d = static_cast<long>(*rep.d);
        const long bound = (d - 1) * (g - 1);
        rep.reg_bound = rep.data.regularity <= bound;
        rep.reg_tight = rep.data.regularity == bound;
        rep.rank_bound = static_cast<long>(rank(incidence_matrix(c))) <= g + bound;
    }
    return rep;
}

std::vector<CanonicalGenerator> canonical_degrees(const Clutter& c)
{
    if (!is_ehrhart_clutter(c).ehrhart)
        throw UsageError("canonical module degrees need an Ehrhart clutter");
    const Polytope p = clutter_polytope(c);
    const int top = p.dimension() + 2;
    const auto vs = c.characteristic_vectors();
    std::vector<std::set<IntVector>> interior(static_cast<std::size_t>(top) + 1);
    std::vector<CanonicalGenerator> out;
    for (int k = 1; k <= top; ++k) {
        for (auto& x : p.relative_interior_lattice_points(static_cast<unsigned>(k)))
            interior[static_cast<std::size_t>(k)].insert(x);
        for (const auto& x : interior[static_cast<std::size_t>(k)]) {
            bool minimal = true;
            if (k > 1)
                for (const auto& v : vs) {
                    IntVector y(x);
                    for (std::size_t i = 0; i < y.size(); ++i)
                        y[i] -= v[i];
                    if (interior[static_cast<std::size_t>(k - 1)].count(y)) {
                        minimal = false;
                        break;
                    }
                }
            if (minimal) {
                IntVector g(x);
                g.emplace_back(k);
                out.push_back({g, k});
            }
        }
    }
    return out;
}

} // namespace clutterlab
