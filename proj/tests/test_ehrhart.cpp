#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "clutterlab/ehrhart.hpp"
#include "clutterlab/families.hpp"
#include "clutterlab/lp.hpp"

using namespace clutterlab;

namespace {

IntVector iv(std::initializer_list<long> xs)
{
    IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

// LP oracle: x = Σ λ_i v_i, Σ λ_i = b, λ ≥ 0; with `interior`, maximize a common lower bound t on λ
// (λ_i = μ_i + t) and demand t > 0.
bool in_dilate(const Clutter& c, const IntVector& x, unsigned b, bool interior)
{
    const auto vs = c.characteristic_vectors();
    const std::size_t q = vs.size();
    LinearProgram lp;
    lp.num_vars = q + 1;
    for (std::size_t j = 0; j < c.n(); ++j) {
        RatVector row(q + 1, 0);
        for (std::size_t i = 0; i < q; ++i) {
            row[i] = Rational(vs[i][j]);
            row[q] += Rational(vs[i][j]);
        }
        lp.eq_rows.push_back(row);
        lp.eq_rhs.emplace_back(x[j]);
    }
    RatVector sum(q + 1, 1);
    sum[q] = static_cast<long>(q);
    lp.eq_rows.push_back(sum);
    lp.eq_rhs.emplace_back(static_cast<long>(b));
    lp.objective.assign(q + 1, 0);
    lp.objective[q] = 1;
    const auto r = solve_lp(lp);
    if (r.status != LPResult::Status::optimal)
        return false;
    return !interior || r.value > 0;
}

std::uint64_t oracle_count(const Clutter& c, unsigned b, bool interior)
{
    std::uint64_t count = 0;
    IntVector x(c.n(), Integer(0));
    while (true) {
        if (in_dilate(c, x, b, interior))
            ++count;
        std::size_t i = 0;
        while (i < x.size() && x[i] == b)
            x[i++] = 0;
        if (i == x.size())
            break;
        x[i] += 1;
    }
    return count;
}

int oracle_a_invariant(const Clutter& c)
{
    for (unsigned k = 1;; ++k)
        if (oracle_count(c, k, true) > 0)
            return -static_cast<int>(k);
}

Clutter random_clutter(std::size_t n, std::mt19937_64& rng)
{
    std::vector<Mask> sets;
    const auto m = 1 + uniform_below(rng, 4);
    for (std::size_t k = 0; k < m; ++k) {
        Mask s = 0;
        while (std::popcount(s) < 2)
            s = uniform_below(rng, Mask{1} << n);
        sets.push_back(s);
    }
    return Clutter::minimal_sets(n, sets);
}

} // namespace

TEST_CASE("Ehrhart function on small polytopes")
{
    const auto sq = sharpness_clutter(2, 2);
    CHECK(ehrhart_function(sq, 0) == 1);
    CHECK(ehrhart_function(sq, 2) == 9);
    const auto seg = blocker(square_clutter());
    CHECK(seg == Clutter(4, {{0, 2}, {1, 3}}));
    CHECK(ehrhart_function(seg, 3) == 4);
    for (unsigned b = 0; b <= 3; ++b) {
        CHECK(ehrhart_function(triangle_clutter(), b) == oracle_count(triangle_clutter(), b, false));
        CHECK(ehrhart_function(sq, b) == (b + 1) * (b + 1));
    }
}

TEST_CASE("h-vector, a-invariant and regularity")
{
    const auto sq = ehrhart_data(sharpness_clutter(2, 2));
    CHECK(sq.dim == 2);
    CHECK(sq.hvector == std::vector<Integer>{1, 1});
    CHECK(sq.a_series == -2);
    CHECK(sq.a_interior == -2);
    CHECK(sq.regularity == 1);

    const auto seg = ehrhart_data(blocker(square_clutter()));
    CHECK(seg.hvector == std::vector<Integer>{1});
    CHECK(seg.a_series == -2);
    CHECK(seg.regularity == 0);

    const auto pt = ehrhart_data(Clutter(2, {{0, 1}}));
    CHECK(pt.dim == 0);
    CHECK(pt.hvector == std::vector<Integer>{1});
    CHECK(pt.a_series == -1);
    CHECK(pt.regularity == 0);

    // unimodular triangle in the plane x1+x2+x3 = 2; (2,2,2) ∈ relint(3P) is the first interior point
    const auto tri = ehrhart_data(triangle_clutter());
    CHECK(tri.hvector == std::vector<Integer>{1});
    CHECK(tri.a_interior == -3);
    CHECK(tri.a_interior == oracle_a_invariant(triangle_clutter()));
    CHECK(oracle_count(triangle_clutter(), 2, true) == 0);
    CHECK(in_dilate(triangle_clutter(), iv({2, 2, 2}), 3, true));

    CHECK(regularity(sharpness_clutter(2, 3)) == 2);
}

TEST_CASE("sharpness family attains the bounds")
{
    for (auto [d, g] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {4, 2}, {3, 3}}) {
        CAPTURE(d);
        CAPTURE(g);
        const auto c = sharpness_clutter(d, g);
        CHECK(c.size() == static_cast<std::size_t>(std::pow(g, d)));
        CHECK(is_uniform(c) == d);
        CHECK(is_unmixed(c));
        CHECK(covering_number(c) == g);
        const auto rep = check_theorem22(c);
        CHECK(rep.hypotheses_met);
        CHECK(rep.ehrhart);
        CHECK(rep.data.a_series == -static_cast<int>(g));
        CHECK(rep.data.a_interior == rep.data.a_series);
        CHECK(rep.data.regularity == static_cast<int>((d - 1) * (g - 1)));
        CHECK(rep.a_tight);
        CHECK(rep.reg_tight);
        CHECK(rep.conclusions_hold());
    }
}

TEST_CASE("bound report on other inputs")
{
    const auto seg = check_theorem22(blocker(square_clutter()));
    CHECK(seg.ehrhart);
    CHECK(seg.data.a_series == -2);
    CHECK(seg.a_tight);
    CHECK(seg.data.regularity <= 4 / 2 - 1);

    const auto tri = check_theorem22(triangle_clutter());
    CHECK_FALSE(tri.hypotheses_met);
    CHECK_FALSE(tri.mfmc);
    CHECK_FALSE(tri.unmet.empty());
    CHECK(tri.data.a_series == -3);
}

TEST_CASE("canonical module generators")
{
    const auto seg = canonical_degrees(blocker(square_clutter()));
    REQUIRE(!seg.empty());
    CHECK(seg.front().degree == 2);
    CHECK(seg.front().vector == iv({1, 1, 1, 1, 2}));

    std::vector<Clutter> inputs;
    for (auto [d, g] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {3, 2}})
        inputs.push_back(sharpness_clutter(d, g));
    std::size_t proper_faces = 0;
    for (const auto& gr : enumerate_unmixed_bipartite(6))
        inputs.push_back(blocker(graph_clutter(gr)));
    for (const auto& gr : enumerate_unmixed_bipartite(6))
        inputs.push_back(graph_clutter(gr));
    for (const auto& c : inputs) {
        if (!is_ehrhart_clutter(c).ehrhart || !is_uniform(c) || !is_unmixed(c))
            continue;
        CAPTURE(c.edges());
        const auto g = covering_number(c);
        const auto gens = canonical_degrees(c);
        REQUIRE(!gens.empty());
        int lowest = gens.front().degree;
        for (const auto& gen : gens)
            lowest = std::min(lowest, gen.degree);
        CHECK(lowest >= static_cast<int>(g));
        CHECK(lowest == -a_invariant_series(c));
        // inequality description of the interior: a_i ≥ 1 and Σ_{x_i ∈ C} a_i ≥ a_{n+1} + 1 for covers C on proper faces
        const auto covers = blocker(c);
        for (const auto& gen : gens) {
            for (std::size_t i = 0; i < c.n(); ++i)
                CHECK(gen.vector[i] >= 1);
            for (const auto& cover : covers.edges()) {
                // covers meeting every edge exactly once cut out ℝB itself, not a proper face
                const bool equation = std::all_of(c.masks().begin(), c.masks().end(),
                                                  [&](Mask e) { return std::popcount(e & to_mask(cover)) == 1; });
                if (equation)
                    continue;
                ++proper_faces;
                Integer s = 0;
                for (int v : cover)
                    s += gen.vector[static_cast<std::size_t>(v)];
                CHECK(s >= gen.vector[c.n()] + 1);
            }
        }
    }
    CHECK(proper_faces > 0);
    CHECK(canonical_degrees(sharpness_clutter(2, 2)).front().vector == iv({1, 1, 1, 1, 2}));
    CHECK_THROWS_AS(canonical_degrees(example_3_9().clutter), UsageError);
}

TEST_CASE("Ehrhart test on the line graph of K_{2,4} and the 4-cycle")
{
    const auto e = is_ehrhart_clutter(example_3_9().clutter);
    CHECK_FALSE(e.ehrhart);
    REQUIRE(e.witness);
    CHECK(*e.witness == iv({1, 1, 1, 1, 1, 1, 1, 1, 3}));
    CHECK(is_ehrhart_clutter(square_clutter()).ehrhart);
}

TEST_CASE("property: counts agree with the LP oracle, both a-invariant routes agree")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = 3 + uniform_below(rng, 2);
        const auto c = random_clutter(n, rng);
        CAPTURE(c.edges());
        const auto data = ehrhart_data(c);
        CHECK(data.hvector.front() == 1);
        for (const auto& h : data.hvector)
            CHECK(h >= 0);
        CHECK(data.a_series == data.a_interior);
        CHECK(data.a_series <= -1);
        CHECK(data.regularity == static_cast<int>(data.hvector.size()) - 1);
        for (unsigned b = 0; b <= 2; ++b)
            CHECK(ehrhart_function(c, b) == oracle_count(c, b, false));
        for (unsigned b = 0; b < data.values.size(); ++b)
            CHECK(data.values[b] == ehrhart_function(c, b));
        CHECK(data.a_interior == oracle_a_invariant(c));
    }
}
