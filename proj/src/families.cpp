#include "clutterlab/families.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <set>

#include "clutterlab/ideals.hpp"
#include "clutterlab/lattice.hpp"

namespace clutterlab {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw UsageError("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit)
            return x % bound;
    }
}

long uniform_in(std::mt19937_64& rng, long lo, long hi)
{
    return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::vector<VertexSet> sharpness_partition(std::size_t d, std::size_t g)
{
    if (d < 1 || g < 2)
        throw UsageError("sharpness_clutter needs d >= 1 and g >= 2");
    if (d * g > 16)
        throw ResourceExceeded("sharpness_clutter: d*g above 16");
    std::vector<VertexSet> blocks(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < g; ++j)
            blocks[i].push_back(static_cast<int>(i * g + j));
    return blocks;
}

Clutter sharpness_clutter(std::size_t d, std::size_t g)
{
    const auto blocks = sharpness_partition(d, g);
    std::vector<VertexSet> edges;
    std::vector<std::size_t> pick(d, 0);
    for (;;) {
        VertexSet e;
        for (std::size_t i = 0; i < d; ++i)
            e.push_back(blocks[i][pick[i]]);
        edges.push_back(e);
        std::size_t i = 0;
        while (i < d && ++pick[i] == g)
            pick[i++] = 0;
        if (i == d)
            break;
    }
    Clutter c(d * g, edges);
    if (blocker(c) != Clutter(d * g, blocks))
        throw InternalError("sharpness clutter has an unexpected blocker");
    return c;
}

LineK24Example example_3_9()
{
    const SimpleGraph g = line_graph(complete_bipartite(2, 4));
    Clutter c = clique_clutter(g);
    if (g.n() != 8 || c.size() != 6)
        throw InternalError("line graph of K_{2,4} has the wrong shape");
    // every vertex lies in exactly two maximal cliques, one of size 4 and one of size 2
    for (std::size_t v = 0; v < 8; ++v) {
        std::vector<std::size_t> sizes;
        for (const auto& e : c.edges())
            if (std::find(e.begin(), e.end(), static_cast<int>(v)) != e.end())
                sizes.push_back(e.size());
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<std::size_t>{2, 4})
            throw InternalError("clique matrix differs from the incidence matrix of K_{2,4}");
    }
    return {g, c};
}

SimpleGraph cycle_graph(std::size_t k)
{
    if (k < 3)
        throw UsageError("cycle needs at least 3 vertices");
    SimpleGraph g(k);
    for (std::size_t i = 0; i < k; ++i)
        g.add_edge(static_cast<int>(i), static_cast<int>((i + 1) % k));
    return g;
}

SimpleGraph path_graph(std::size_t k)
{
    SimpleGraph g(k);
    for (std::size_t i = 0; i + 1 < k; ++i)
        g.add_edge(static_cast<int>(i), static_cast<int>(i + 1));
    return g;
}

SimpleGraph complete_graph(std::size_t k)
{
    SimpleGraph g(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b)
{
    SimpleGraph g(a + b);
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t j = 0; j < b; ++j)
            g.add_edge(static_cast<int>(i), static_cast<int>(a + j));
    return g;
}

SimpleGraph random_chordal(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    SimpleGraph g(n);
    // reverse perfect elimination: each new vertex joins a clique of the current graph
    for (std::size_t v = 1; v < n; ++v) {
        const int anchor = static_cast<int>(uniform_below(rng, v));
        Mask clique = Mask{1} << anchor;
        for (const int u : from_mask(g.neighbors(anchor)))
            if ((g.neighbors(u) & clique) == clique && uniform_below(rng, 2) == 1)
                clique |= Mask{1} << u;
        for (const int u : from_mask(clique))
            g.add_edge(static_cast<int>(v), u);
    }
    return g;
}

SimpleGraph random_bipartite(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<int> side(n);
    for (auto& s : side)
        s = static_cast<int>(uniform_below(rng, 2));
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (side[i] != side[j] && uniform_below(rng, 2) == 1)
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Clutter triangle_clutter() { return Clutter(3, {{0, 1}, {1, 2}, {0, 2}}); }
Clutter square_clutter() { return graph_clutter(cycle_graph(4)); }

std::vector<SimpleGraph> all_graphs(std::size_t n)
{
    if (n > 8)
        throw ResourceExceeded("all_graphs: n above 8");
    std::map<std::uint64_t, SimpleGraph> level{{canonical_code(SimpleGraph(0)), SimpleGraph(0)}};
    for (std::size_t k = 0; k < n; ++k) {
        std::map<std::uint64_t, SimpleGraph> next;
        for (const auto& [code, g] : level)
            for (Mask nb = 0; nb < (Mask{1} << k); ++nb) {
                SimpleGraph h(k + 1, g.edges());
                for (const int u : from_mask(nb))
                    h.add_edge(static_cast<int>(k), u);
                const auto c = canonical_code(h);
                if (!next.count(c))
                    next.emplace(c, canonical_form(h));
            }
        level = std::move(next);
    }
    std::vector<SimpleGraph> out;
    for (auto& [code, g] : level)
        out.push_back(g);
    return out;
}

std::vector<SimpleGraph> enumerate_unmixed_bipartite(std::size_t n_max)
{
    if (n_max > 8)
        throw ResourceExceeded("enumerate_unmixed_bipartite: n_max above 8");
    std::vector<SimpleGraph> out;
    // connected bipartite graphs grow from smaller ones by adding a non-cut vertex
    std::map<std::uint64_t, SimpleGraph> level{{canonical_code(SimpleGraph(1)), SimpleGraph(1)}};
    for (std::size_t k = 1; k < n_max; ++k) {
        std::map<std::uint64_t, SimpleGraph> next;
        for (const auto& [code, g] : level)
            for (Mask nb = 1; nb < (Mask{1} << k); ++nb) {
                SimpleGraph h(k + 1, g.edges());
                for (const int u : from_mask(nb))
                    h.add_edge(static_cast<int>(k), u);
                if (!is_bipartite(h))
                    continue;
                const auto c = canonical_code(h);
                if (!next.count(c))
                    next.emplace(c, canonical_form(h));
            }
        level = std::move(next);
        for (const auto& [code, g] : level)
            if (is_unmixed(graph_clutter(g)))
                out.push_back(g);
    }
    return out;
}

std::vector<SimpleGraph> meyniel_batch(std::size_t count, std::size_t n_max, std::uint64_t seed)
{
    if (n_max < 3)
        throw UsageError("meyniel_batch needs n_max >= 3");
    std::mt19937_64 rng(seed);
    std::vector<SimpleGraph> out;
    while (out.size() < count) {
        const auto kind = uniform_below(rng, 3);
        const std::uint64_t sub = rng();
        if (kind == 2) {
            const auto n = static_cast<std::size_t>(uniform_in(rng, 2, static_cast<long>(n_max) - 1));
            const SimpleGraph base = (uniform_below(rng, 2) == 0) ? random_chordal(n, sub) : random_bipartite(n, sub);
            out.push_back(graph_cone(base));
        } else {
            const auto n = static_cast<std::size_t>(uniform_in(rng, 2, static_cast<long>(n_max)));
            out.push_back(kind == 0 ? random_chordal(n, sub) : random_bipartite(n, sub));
        }
    }
    return out;
}

LinearSystem random_system(std::size_t n, std::size_t q, long lo, long hi, long wlo, long whi, std::mt19937_64& rng)
{
    std::vector<IntVector> cols;
    IntVector w;
    while (cols.size() < q) {
        IntVector v(n);
        bool zero = true;
        for (auto& x : v) {
            x = uniform_in(rng, lo, hi);
            zero = zero && x == 0;
        }
        if (zero)
            continue;
        cols.push_back(v);
        w.emplace_back(uniform_in(rng, wlo, whi));
    }
    return LinearSystem(n, cols, w);
}

SimpleGraph three_sun()
{
    return SimpleGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
}

namespace {

struct Candidate {
    SimpleGraph graph;
    std::string construction;
};

} // namespace

std::pair<SimpleGraph, std::string> glued_suns(int a, int b, int gap)
{
    if (a < 0 || a > 5 || b < 0 || b > 5 || gap < 0)
        throw UsageError("glued_suns: attachment vertices are 0..5, gap >= 0");
    const SimpleGraph sun = three_sun();
    std::vector<std::pair<int, int>> edges;
    std::vector<int> second(6);
    int next = 6;
    for (int v = 0; v < 6; ++v)
        second[v] = (gap == 0 && v == b) ? a : next++;
    for (auto [u, v] : sun.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(second[u], second[v]);
    }
    if (gap >= 1) {
        int prev = a;
        for (int k = 1; k < gap; ++k) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, second[b]);
    }
    const auto kind = [](int v) { return v < 3 ? "triangle" : "ear"; };
    return {SimpleGraph(static_cast<std::size_t>(next), edges),
            std::string("two 3-suns, ") + kind(a) + "-" + kind(b) + " vertices, path length " + std::to_string(gap)};
}

namespace {

std::optional<NonNormalHit> test_candidate(const Candidate& cand, StepBudget& budget)
{
    if (!is_chordal(cand.graph))
        return std::nullopt;
    const Clutter cl = clique_clutter(cand.graph);
    const auto rep = is_normal_upto(cl, 3, budget);
    if (rep.normal.holds)
        return std::nullopt;
    NonNormalHit hit{cand.graph, cand.construction, *rep.normal.failing_power, *rep.normal.witness};
    // independent confirmation: inside the closure by the LP test, outside the ordinary power
    const MonomialIdeal I = edge_ideal(cl);
    if (!in_closure_power(I, hit.power, hit.witness) || contains(power(I, hit.power), hit.witness))
        throw InternalError("non-normality witness failed verification");
    return hit;
}

} // namespace

NonNormalSearch search_nonnormal_chordal(std::size_t n_max, StepBudget& budget, std::uint64_t seed)
{
    NonNormalSearch out;
    std::vector<Candidate> cands;
    for (int gap = 0; gap <= 2; ++gap)
        for (const int a : {0, 3})
            for (const int b : {0, 3}) {
                if (b < a)
                    continue;
                auto [g, name] = glued_suns(a, b, gap);
                if (g.n() <= n_max)
                    cands.push_back({std::move(g), std::move(name)});
            }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 200; ++i) {
        const auto n = static_cast<std::size_t>(uniform_in(rng, 4, static_cast<long>(std::min<std::size_t>(n_max, 10))));
        cands.push_back({random_chordal(n, rng()), "random chordal"});
    }
    try {
        for (const auto& c : cands) {
            ++out.candidates_tried;
            if (auto hit = test_candidate(c, budget)) {
                out.hit = std::move(hit);
                return out;
            }
        }
    } catch (const ResourceExceeded&) {
        out.budget_exhausted = true;
    }
    return out;
}

NonNormalSearch search_nonnormal_chordal(std::size_t n_max)
{
    StepBudget budget;
    return search_nonnormal_chordal(n_max, budget);
}

std::optional<ConverseHit> search_converse_counterexample(std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const auto n = static_cast<std::size_t>(uniform_in(rng, 1, 3));
        const auto q = static_cast<std::size_t>(uniform_in(rng, 1, 4));
        const LinearSystem s = random_system(n, q, -2, 2, -2, 3, rng);
        const auto rep = thm41_check(s);
        if (rep.empty || !rep.integral || rep.tdi != TdiVerdict::tdi || rep.lifted_hilbert)
            continue;
        const auto hb = is_hilbert_basis(s.lifted(), n + 1);
        if (!hb.missing.empty())
            return ConverseHit{s, hb.missing.front()};
    }
    return std::nullopt;
}

} // namespace clutterlab
