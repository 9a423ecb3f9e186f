#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "clutterlab/combinat.hpp"

using namespace clutterlab;

namespace {

Clutter triangle() { return Clutter(3, {{0, 1}, {1, 2}, {0, 2}}); }
Clutter four_cycle() { return Clutter(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

SimpleGraph cycle_graph(int k)
{
    SimpleGraph g(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

SimpleGraph complete_graph(int k)
{
    SimpleGraph g(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.add_edge(i, j);
    return g;
}

SimpleGraph k24()
{
    SimpleGraph g(6);
    for (int a = 0; a < 2; ++a)
        for (int b = 2; b < 6; ++b)
            g.add_edge(a, b);
    return g;
}

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, unsigned percent)
{
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng() % 100 < percent)
                g.add_edge(static_cast<int>(u), static_cast<int>(v));
    return g;
}

Clutter random_clutter(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Mask> sets;
    const std::size_t k = 1 + rng() % 6;
    for (std::size_t i = 0; i < k; ++i) {
        Mask m = 0;
        while (std::popcount(m) < 2)
            m |= Mask(1) << (rng() % n);
        sets.push_back(m);
    }
    return Clutter::minimal_sets(n, sets);
}

// oracle: complements of the maximal stable sets (sets containing no edge)
Clutter blocker_by_stable_sets(const Clutter& c)
{
    const Mask all = (Mask(1) << c.n()) - 1;
    std::vector<Mask> stable;
    for (Mask s = 0; s <= all; ++s)
        if (std::none_of(c.masks().begin(), c.masks().end(), [&](Mask e) { return (e & s) == e; }))
            stable.push_back(s);
    std::vector<Mask> covers;
    for (Mask s : stable) {
        bool maximal = true;
        for (int v = 0; v < static_cast<int>(c.n()) && maximal; ++v)
            if (!((s >> v) & 1U)) {
                const Mask t = s | (Mask(1) << v);
                maximal = std::any_of(c.masks().begin(), c.masks().end(), [&](Mask e) { return (e & t) == e; });
            }
        if (maximal)
            covers.push_back(all & ~s);
    }
    return Clutter::minimal_sets(c.n(), covers);
}

// oracle: brute-force over all vertex sequences for odd cycles with fewer than two chords
bool brute_meyniel(const SimpleGraph& g)
{
    const int n = static_cast<int>(g.n());
    for (Mask sub = 0; sub < (Mask(1) << n); ++sub) {
        const int len = std::popcount(sub);
        if (len < 5 || len % 2 == 0)
            continue;
        VertexSet vs = from_mask(sub);
        do {
            if (vs[1] > vs.back())
                continue;
            bool cyc = true;
            for (int i = 0; i < len && cyc; ++i)
                cyc = g.adjacent(vs[i], vs[(i + 1) % len]);
            if (!cyc)
                continue;
            int edges = 0;
            for (int i = 0; i < len; ++i)
                for (int j = i + 1; j < len; ++j)
                    edges += g.adjacent(vs[i], vs[j]);
            if (edges - len < 2)
                return false;
        } while (std::next_permutation(vs.begin() + 1, vs.end()));
    }
    return true;
}

} // namespace

TEST_CASE("clutter validation")
{
    CHECK_THROWS_AS(Clutter(3, {{0, 1}, {0, 1, 2}}), UsageError);
    CHECK_THROWS_AS(Clutter(2, {{0, 2}}), UsageError);
    CHECK_THROWS_AS(Clutter::strict_clutter(3, {{0, 1}}), UsageError);
    CHECK(triangle().strict());
    CHECK_FALSE(Clutter(3, {{0}, {1, 2}}).strict());
    CHECK(Clutter(3, {{1, 0}, {0, 1}}).edges() == std::vector<VertexSet>{{0, 1}});
}

TEST_CASE("blocker examples")
{
    CHECK(blocker(triangle()) == triangle());
    CHECK(blocker(Clutter(3, {{0, 1, 2}})) == Clutter(3, {{0}, {1}, {2}}));
    CHECK(blocker(four_cycle()) == Clutter(4, {{0, 2}, {1, 3}}));
}

TEST_CASE("covering number, matching number, Konig")
{
    CHECK(covering_number(four_cycle()) == 2);
    CHECK(max_disjoint_edges(four_cycle()) == 2);
    CHECK(has_konig(four_cycle()));
    const auto c5 = graph_clutter(cycle_graph(5));
    CHECK(covering_number(c5) == 3);
    CHECK(max_disjoint_edges(c5) == 2);
    CHECK_FALSE(has_konig(c5));
    CHECK(covering_number(triangle()) == 2);
    CHECK(max_disjoint_edges(triangle()) == 1);
    CHECK_FALSE(has_konig(triangle()));
}

TEST_CASE("uniform and unmixed")
{
    CHECK(is_uniform(four_cycle()) == 2);
    CHECK(is_unmixed(four_cycle()));
    CHECK_FALSE(is_uniform(Clutter(4, {{0, 1}, {1, 2, 3}})));
    const auto c5 = graph_clutter(cycle_graph(5));
    CHECK(is_uniform(c5) == 2);
    CHECK(is_unmixed(c5));
    CHECK_FALSE(is_unmixed(graph_clutter(SimpleGraph(3, {{0, 1}, {1, 2}}))));
}

TEST_CASE("suspension, cone, complement, line graph")
{
    CHECK(suspension(triangle()) == Clutter(4, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}}));
    CHECK(suspension(Clutter(2, {{0, 1}})) == Clutter(3, {{0, 1, 2}}));
    CHECK(suspension(four_cycle()).size() == 4);
    CHECK(graph_cone(complete_graph(2)) == complete_graph(3));
    CHECK(canonical_code(complement(cycle_graph(5))) == canonical_code(cycle_graph(5)));
    const auto l = line_graph(k24());
    CHECK(l.n() == 8);
    const auto cl = clique_clutter(l);
    CHECK(cl.size() == 6);
    std::size_t fours = 0, twos = 0;
    for (const auto& e : cl.edges())
        (e.size() == 4 ? fours : twos) += 1;
    CHECK(fours == 2);
    CHECK(twos == 4);
    // every vertex (an edge of K_{2,4}) lies in exactly two cliques
    for (int v = 0; v < 8; ++v) {
        int k = 0;
        for (const auto& e : cl.edges())
            k += std::binary_search(e.begin(), e.end(), v);
        CHECK(k == 2);
    }
    CHECK(rank(incidence_matrix(cl)) == 5);
}

TEST_CASE("clique clutters")
{
    CHECK(clique_clutter(complete_graph(3)) == Clutter(3, {{0, 1, 2}}));
    CHECK(clique_clutter(cycle_graph(4)) == four_cycle());
    CHECK(clique_clutter(SimpleGraph(2)) == Clutter(2, {{0}, {1}}));
}

TEST_CASE("Meyniel examples")
{
    auto r = is_meyniel(cycle_graph(5));
    CHECK_FALSE(r.meyniel);
    REQUIRE(r.witness);
    CHECK(r.witness->cycle.size() == 5);
    CHECK(r.witness->chords == 0);
    CHECK(is_meyniel(complete_graph(4)).meyniel);
    CHECK(is_meyniel(SimpleGraph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})).meyniel);
    auto c7 = cycle_graph(7);
    c7.add_edge(0, 2);
    auto w = is_meyniel(c7);
    CHECK_FALSE(w.meyniel);
    REQUIRE(w.witness);
    CHECK(w.witness->chords <= 1);
}

TEST_CASE("Hoang witnesses")
{
    CHECK(hoang_witness(complete_graph(3), 0) == VertexSet{0});
    CHECK_FALSE(hoang_witness(cycle_graph(5), 0));
    CHECK(hoang_witness(cycle_graph(4), 0) == VertexSet{0, 2});
    CHECK(is_meyniel_via_hoang(complete_graph(4)));
    CHECK_FALSE(is_meyniel_via_hoang(cycle_graph(5)));
    CHECK(is_meyniel_via_hoang(cycle_graph(6)));
}

TEST_CASE("perfection")
{
    auto c5 = is_perfect_small(cycle_graph(5));
    CHECK_FALSE(c5.perfect);
    CHECK(c5.odd_hole);
    CHECK(is_perfect_small(k24()).perfect);
    CHECK(is_perfect_small(line_graph(k24())).perfect);
    auto anti = is_perfect_small(complement(cycle_graph(7)));
    CHECK_FALSE(anti.perfect);
    CHECK(anti.odd_antihole);
}

TEST_CASE("beta and gamma witnesses")
{
    CHECK(beta_witness(complete_graph(3)) == RatVector(3, Rational(1, 3)));
    CHECK(beta_witness(complete_graph(2)) == RatVector(2, Rational(1, 2)));
    CHECK(beta_witness(SimpleGraph(3, {{0, 1}, {1, 2}})) == RatVector{Rational(2, 3), Rational(1, 3), Rational(2, 3)});
    CHECK_THROWS_AS(beta_witness(cycle_graph(5)), Error);
    const auto c4 = four_cycle();
    CHECK(gamma_witness(4, {{0, 1}, {2, 3}}, &c4) == RatVector(4, Rational(1, 2)));
    CHECK(gamma_witness(3, {{0, 1, 2}}) == RatVector(3, 1));
    CHECK(gamma_witness(6, {{0, 1}, {2, 3}, {4, 5}}) == RatVector(6, Rational(1, 3)));
    CHECK_THROWS_AS(gamma_witness(4, {{0, 1}, {1, 2, 3}}), UsageError);
}

TEST_CASE("disjoint cover partition")
{
    auto p = disjoint_cover_partition(four_cycle());
    REQUIRE(p);
    CHECK(std::set<VertexSet>(p->begin(), p->end()) == std::set<VertexSet>{{0, 2}, {1, 3}});
    CHECK_FALSE(disjoint_cover_partition(triangle()));
}

TEST_CASE("deletion and contraction")
{
    CHECK(deletion(four_cycle(), 0) == Clutter(4, {{1, 2}, {2, 3}}));
    CHECK(contraction(four_cycle(), 0) == Clutter(4, {{1}, {3}}));
}

TEST_CASE("random clutters: blocker is an involution and matches stable-set oracle")
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
        const auto c = random_clutter(rng, 2 + rng() % 6);
        const auto b = blocker(c);
        CHECK(b == blocker_by_stable_sets(c));
        CHECK(blocker(b) == c);
    }
}

TEST_CASE("random graphs: structural identities")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const auto g = random_graph(rng, 1 + rng() % 7, 20 + static_cast<unsigned>(rng() % 60));
        CHECK(clique_clutter(graph_cone(g)) == suspension(clique_clutter(g)));
        const bool m = is_meyniel(g).meyniel;
        CHECK(m == brute_meyniel(g));
        CHECK(m == is_meyniel_via_hoang(g));
        CHECK(m == is_meyniel(graph_cone(g)).meyniel);
        const bool p = is_perfect_small(g).perfect;
        CHECK(p == is_perfect_small(graph_cone(g)).perfect);
        if (m) {
            CHECK(p);
            auto beta = beta_witness(g);
            for (const auto& x : beta)
                CHECK(sgn(x) > 0);
        }
        if (is_chordal(g))
            CHECK(m);
        // canonical forms are invariant under relabeling
        std::vector<int> perm(g.n());
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        SimpleGraph h(g.n());
        for (auto [u, v] : g.edges())
            h.add_edge(perm[u], perm[v]);
        CHECK(canonical_code(h) == canonical_code(g));
        CHECK(canonical_form(h) == canonical_form(g));
    }
}
