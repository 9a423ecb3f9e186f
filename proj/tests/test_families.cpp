#include <doctest.h>

#include <algorithm>

#include "clutterlab/ehrhart.hpp"
#include "clutterlab/families.hpp"
#include "clutterlab/ideals.hpp"
#include "clutterlab/lattice.hpp"

using namespace clutterlab;

TEST_CASE("sharpness clutter shape")
{
    CHECK(sharpness_clutter(2, 2) == graph_clutter(complete_bipartite(2, 2)));
    CHECK(sharpness_clutter(2, 3) == graph_clutter(complete_bipartite(3, 3)));
    const auto c = sharpness_clutter(3, 2);
    CHECK(c.size() == 8);
    CHECK(blocker(c) == Clutter(6, {{0, 1}, {2, 3}, {4, 5}}));
    CHECK(disjoint_cover_partition(c).has_value());
    CHECK_THROWS_AS(sharpness_clutter(2, 1), UsageError);
    CHECK_THROWS_AS(sharpness_clutter(5, 4), ResourceExceeded);
}

TEST_CASE("line graph of K_{2,4}")
{
    const auto ex = example_3_9();
    CHECK(ex.graph.n() == 8);
    CHECK(ex.clutter.size() == 6);
    CHECK(is_perfect_small(ex.graph).perfect);
    CHECK(is_ideal_clutter(ex.clutter).ideal);
}

TEST_CASE("standard constructors")
{
    const auto c5 = cycle_graph(5);
    CHECK(c5.edges().size() == 5);
    for (int v = 0; v < 5; ++v)
        CHECK(c5.degree(v) == 2);
    CHECK(find_odd_hole(c5).has_value());
    CHECK(complete_bipartite(2, 4).edges().size() == 8);
    CHECK(complete_graph(5).edges().size() == 10);
    CHECK(path_graph(4).edges().size() == 3);
    CHECK(random_bipartite(6, 7) == random_bipartite(6, 7));
    CHECK(random_chordal(9, 3) == random_chordal(9, 3));
    for (std::uint64_t s = 0; s < 40; ++s) {
        CHECK(is_chordal(random_chordal(8, s)));
        CHECK(is_connected(random_chordal(8, s)));
        CHECK(is_bipartite(random_bipartite(8, s)));
    }
    std::mt19937_64 a(5), b(5);
    for (int i = 0; i < 100; ++i) {
        const auto x = uniform_below(a, 7);
        CHECK(x < 7);
        CHECK(x == uniform_below(b, 7));
    }
}

TEST_CASE("graph enumeration counts")
{
    const std::vector<std::size_t> known{1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n <= 7; ++n)
        CHECK(all_graphs(n).size() == known[n]);
}

TEST_CASE("unmixed bipartite enumeration matches a filter over all graphs")
{
    const auto list = enumerate_unmixed_bipartite(8);
    for (std::size_t n = 2; n <= 8; ++n) {
        std::size_t expect = 0;
        for (const auto& g : all_graphs(n))
            if (is_connected(g) && is_bipartite(g) && is_unmixed(graph_clutter(g)))
                ++expect;
        const auto got = std::count_if(list.begin(), list.end(), [&](const SimpleGraph& g) { return g.n() == n; });
        CAPTURE(n);
        CHECK(static_cast<std::size_t>(got) == expect);
    }
    const auto has = [&](const SimpleGraph& g) {
        return std::any_of(list.begin(), list.end(), [&](const SimpleGraph& h) {
            return h.n() == g.n() && canonical_code(h) == canonical_code(g);
        });
    };
    CHECK(has(cycle_graph(4)));
    CHECK(has(path_graph(2)));
    CHECK_FALSE(has(path_graph(3)));
}

TEST_CASE("Meyniel batch is deterministic and Meyniel")
{
    const auto a = meyniel_batch(30, 8, 11);
    CHECK(a == meyniel_batch(30, 8, 11));
    for (const auto& g : a)
        CHECK(is_meyniel(g).meyniel);
}

TEST_CASE("non-normal chordal search")
{
    const auto s = search_nonnormal_chordal(13);
    REQUIRE(s.hit);
    const auto& hit = *s.hit;
    CHECK(is_chordal(hit.graph));
    CHECK(is_meyniel(hit.graph).meyniel);
    CHECK(is_perfect_small(hit.graph).perfect);
    const auto I = edge_ideal(clique_clutter(hit.graph));
    CHECK(in_closure_power(I, hit.power, hit.witness));
    CHECK_FALSE(contains(power(I, hit.power), hit.witness));
    CHECK(contains(closure_power(I, hit.power), hit.witness));

    // two 3-suns with triangle vertices joined through a middle vertex: 13 vertices, not normal
    const auto [g13, name] = glued_suns(0, 0, 2);
    CHECK(g13.n() == 13);
    CHECK(is_chordal(g13));
    const auto rep = is_normal_upto(clique_clutter(g13), 3);
    CHECK_FALSE(rep.normal.holds);
    CHECK(rep.normal.failing_power == 3u);

    CHECK(is_normal_upto(clique_clutter(three_sun()), 3).normal.holds);
}

TEST_CASE("converse search results are genuine")
{
    const auto hit = search_converse_counterexample(300, 9);
    if (hit) {
        const auto rep = thm41_check(hit->system);
        CHECK(rep.integral);
        CHECK(rep.tdi == TdiVerdict::tdi);
        CHECK_FALSE(rep.lifted_hilbert);
        CHECK_FALSE(semigroup_member(hit->missing, hit->system.lifted()).member);
    }
}
