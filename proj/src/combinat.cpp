#include "clutterlab/combinat.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace clutterlab {

namespace {

void check_vertex_count(std::size_t n)
{
    if (n > kMaxVertices)
        throw ResourceExceeded("at most " + std::to_string(kMaxVertices) + " vertices are supported");
}

std::vector<Mask> minimal_masks(std::vector<Mask> sets)
{
    std::sort(sets.begin(), sets.end(),
              [](Mask a, Mask b) { return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b; });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<Mask> out;
    for (Mask s : sets)
        if (std::none_of(out.begin(), out.end(), [&](Mask t) { return (t & s) == t; }))
            out.push_back(s);
    return out;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask(0) : ((Mask(1) << n) - 1); }

int lowest(Mask m) { return std::countr_zero(m); }

} // namespace

Mask to_mask(const VertexSet& s)
{
    Mask m = 0;
    for (int v : s) {
        if (v < 0 || static_cast<std::size_t>(v) >= kMaxVertices)
            throw UsageError("vertex index " + std::to_string(v) + " out of range");
        m |= Mask(1) << v;
    }
    return m;
}

VertexSet from_mask(Mask m)
{
    VertexSet s;
    while (m) {
        s.push_back(lowest(m));
        m &= m - 1;
    }
    return s;
}

// ---------------------------------------------------------------------------
// Clutter

Clutter::Clutter(std::size_t n, std::vector<VertexSet> edges) : n_(n)
{
    check_vertex_count(n);
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw UsageError("edge with repeated vertex");
        if (e.empty())
            throw UsageError("empty edge");
        for (int v : e)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw UsageError("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& e : edges)
        masks_.push_back(to_mask(e));
    for (std::size_t i = 0; i < masks_.size(); ++i)
        for (std::size_t j = 0; j < masks_.size(); ++j)
            if (i != j && (masks_[i] & masks_[j]) == masks_[i])
                throw UsageError("edges " + to_string(std::vector<Integer>(edges[i].begin(), edges[i].end())) +
                                 " and " + to_string(std::vector<Integer>(edges[j].begin(), edges[j].end())) +
                                 " are comparable");
    edges_ = std::move(edges);
}

Clutter Clutter::strict_clutter(std::size_t n, std::vector<VertexSet> edges)
{
    Clutter c(n, std::move(edges));
    if (!c.strict())
        throw UsageError("clutter needs edges of size at least 2 and no isolated vertices");
    return c;
}

Clutter Clutter::minimal_sets(std::size_t n, const std::vector<Mask>& sets)
{
    std::vector<VertexSet> edges;
    for (Mask m : minimal_masks(sets))
        edges.push_back(from_mask(m));
    return Clutter(n, std::move(edges));
}

bool Clutter::strict() const
{
    Mask covered = 0;
    for (Mask m : masks_) {
        if (std::popcount(m) < 2)
            return false;
        covered |= m;
    }
    return covered == full_mask(n_);
}

std::vector<IntVector> Clutter::characteristic_vectors() const
{
    std::vector<IntVector> out;
    for (const auto& e : edges_) {
        IntVector v(n_, 0);
        for (int x : e)
            v[x] = 1;
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n, 0)
{
    check_vertex_count(n);
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void SimpleGraph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
        throw UsageError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v)
        throw UsageError("loops are not allowed");
    adj_[u] |= Mask(1) << v;
    adj_[v] |= Mask(1) << u;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const
{
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < n_; ++u)
        for (int v : from_mask(adj_[u]))
            if (static_cast<int>(u) < v)
                out.emplace_back(static_cast<int>(u), v);
    return out;
}

std::size_t SimpleGraph::degree(int v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

// ---------------------------------------------------------------------------
// Clutter operations

Clutter blocker(const Clutter& c)
{
    // Berge's incremental transversal computation
    std::vector<Mask> tr{0};
    for (Mask e : c.masks()) {
        std::vector<Mask> next;
        for (Mask t : tr) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (Mask r = e; r; r &= r - 1)
                next.push_back(t | (r & -r));
        }
        tr = minimal_masks(std::move(next));
    }
    if (c.size() == 0)
        return Clutter(c.n(), {});
    return Clutter::minimal_sets(c.n(), tr);
}

Clutter graph_clutter(const SimpleGraph& g)
{
    std::vector<VertexSet> edges;
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    return Clutter(g.n(), std::move(edges));
}

std::size_t covering_number(const Clutter& c)
{
    const Clutter b = blocker(c);
    std::size_t best = c.n() + 1;
    for (Mask m : b.masks())
        best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(m)));
    return c.size() == 0 ? 0 : best;
}

std::size_t max_disjoint_edges(const Clutter& c)
{
    const auto& ms = c.masks();
    std::size_t best = 0;
    std::function<void(std::size_t, Mask, std::size_t)> go = [&](std::size_t i, Mask used, std::size_t k) {
        best = std::max(best, k);
        if (k + (ms.size() - i) <= best)
            return;
        for (std::size_t j = i; j < ms.size(); ++j)
            if (!(ms[j] & used))
                go(j + 1, used | ms[j], k + 1);
    };
    go(0, 0, 0);
    return best;
}

bool has_konig(const Clutter& c) { return covering_number(c) == max_disjoint_edges(c); }

std::optional<std::size_t> is_uniform(const Clutter& c)
{
    if (c.size() == 0)
        return std::nullopt;
    const auto d = c.edges().front().size();
    for (const auto& e : c.edges())
        if (e.size() != d)
            return std::nullopt;
    return d;
}

bool is_unmixed(const Clutter& c) { return c.size() > 0 && is_uniform(blocker(c)).has_value(); }

Clutter suspension(const Clutter& c)
{
    std::vector<VertexSet> edges = c.edges();
    for (auto& e : edges)
        e.push_back(static_cast<int>(c.n()));
    return Clutter(c.n() + 1, std::move(edges));
}

Clutter deletion(const Clutter& c, int v)
{
    std::vector<VertexSet> edges;
    for (const auto& e : c.edges())
        if (!std::binary_search(e.begin(), e.end(), v))
            edges.push_back(e);
    return Clutter(c.n(), std::move(edges));
}

Clutter contraction(const Clutter& c, int v)
{
    std::vector<Mask> sets;
    for (Mask m : c.masks()) {
        Mask r = m & ~(Mask(1) << v);
        if (r == 0)
            throw UsageError("contraction would create an empty edge");
        sets.push_back(r);
    }
    return Clutter::minimal_sets(c.n(), sets);
}

IntMatrix incidence_matrix(const Clutter& c)
{
    IntMatrix m(c.size(), c.n());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int v : c.edges()[i])
            m(i, static_cast<std::size_t>(v)) = 1;
    return m;
}

std::optional<std::vector<VertexSet>> disjoint_cover_partition(const Clutter& c)
{
    const auto d = is_uniform(c);
    if (!d)
        throw UsageError("disjoint_cover_partition needs a uniform clutter");
    std::vector<Mask> exact;
    const Clutter b = blocker(c);
    for (Mask cov : b.masks())
        if (std::all_of(c.masks().begin(), c.masks().end(), [&](Mask e) { return std::popcount(e & cov) == 1; }))
            exact.push_back(cov);
    const Mask all = full_mask(c.n());
    std::vector<Mask> chosen;
    std::function<bool(Mask)> go = [&](Mask covered) -> bool {
        if (covered == all)
            return chosen.size() == *d;
        if (chosen.size() == *d)
            return false;
        const int v = lowest(~covered & all);
        for (Mask cov : exact) {
            if (!((cov >> v) & 1U) || (cov & covered))
                continue;
            chosen.push_back(cov);
            if (go(covered | cov))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!go(0))
        return std::nullopt;
    std::vector<VertexSet> out;
    for (Mask m : chosen)
        out.push_back(from_mask(m));
    return out;
}

// ---------------------------------------------------------------------------
// Graph operations

SimpleGraph graph_cone(const SimpleGraph& g)
{
    auto edges = g.edges();
    for (std::size_t v = 0; v < g.n(); ++v)
        edges.emplace_back(static_cast<int>(v), static_cast<int>(g.n()));
    return SimpleGraph(g.n() + 1, edges);
}

SimpleGraph complement(const SimpleGraph& g)
{
    SimpleGraph h(g.n());
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(static_cast<int>(u), static_cast<int>(v)))
                h.add_edge(static_cast<int>(u), static_cast<int>(v));
    return h;
}

SimpleGraph line_graph(const SimpleGraph& g)
{
    const auto e = g.edges();
    SimpleGraph h(e.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first ||
                e[i].second == e[j].second)
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep)
{
    SimpleGraph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

bool is_connected(const SimpleGraph& g)
{
    if (g.n() == 0)
        return true;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1)
            next |= g.neighbors(lowest(f));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == full_mask(g.n());
}

bool is_bipartite(const SimpleGraph& g)
{
    std::vector<int> color(g.n(), -1);
    for (std::size_t s = 0; s < g.n(); ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        std::vector<int> stack{static_cast<int>(s)};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : from_mask(g.neighbors(u))) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    stack.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_chordal(const SimpleGraph& g)
{
    // repeatedly remove a simplicial vertex
    Mask alive = full_mask(g.n());
    while (alive) {
        bool found = false;
        for (Mask a = alive; a; a &= a - 1) {
            const int v = lowest(a);
            const Mask nb = g.neighbors(v) & alive;
            bool clique = true;
            for (Mask x = nb; x && clique; x &= x - 1)
                clique = (nb & ~g.neighbors(lowest(x)) & ~(Mask(1) << lowest(x))) == 0;
            if (clique) {
                alive &= ~(Mask(1) << v);
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

namespace {

void bron_kerbosch(const SimpleGraph& g, Mask r, Mask p, Mask x, std::vector<Mask>& out)
{
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    int pivot = lowest(p | x);
    std::size_t best = 0;
    for (Mask c = p | x; c; c &= c - 1) {
        const auto k = static_cast<std::size_t>(std::popcount(p & g.neighbors(lowest(c))));
        if (k > best) {
            best = k;
            pivot = lowest(c);
        }
    }
    for (Mask c = p & ~g.neighbors(pivot); c; c &= c - 1) {
        const int v = lowest(c);
        const Mask bit = Mask(1) << v;
        bron_kerbosch(g, r | bit, p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit;
        x |= bit;
    }
}

std::vector<Mask> maximal_cliques(const SimpleGraph& g, Mask within)
{
    std::vector<Mask> out;
    if (within)
        bron_kerbosch(g, 0, within, 0, out);
    return out;
}

std::vector<Mask> maximal_cliques_induced(const SimpleGraph& g, Mask within)
{
    // Bron–Kerbosch restricted to an induced subgraph: neighborhoods are intersected with `within`
    std::vector<Mask> out;
    std::function<void(Mask, Mask, Mask)> bk = [&](Mask r, Mask p, Mask x) {
        if (!p && !x) {
            out.push_back(r);
            return;
        }
        int pivot = lowest(p | x);
        for (Mask c = p & ~(g.neighbors(pivot) & within); c; c &= c - 1) {
            const int v = lowest(c);
            const Mask bit = Mask(1) << v;
            const Mask nb = g.neighbors(v) & within;
            bk(r | bit, p & nb, x & nb);
            p &= ~bit;
            x |= bit;
        }
    };
    if (within)
        bk(0, within, 0);
    return out;
}

std::optional<Mask> hoang_in(const SimpleGraph& g, Mask within, int u)
{
    const auto cliques = maximal_cliques_induced(g, within);
    std::function<std::optional<Mask>(Mask)> go = [&](Mask s) -> std::optional<Mask> {
        Mask forbidden = s;
        for (Mask x = s; x; x &= x - 1)
            forbidden |= g.neighbors(lowest(x));
        for (Mask q : cliques) {
            if (q & s)
                continue;
            for (Mask c = q & ~forbidden; c; c &= c - 1)
                if (auto r = go(s | (Mask(1) << lowest(c))))
                    return r;
            return std::nullopt;
        }
        return s;
    };
    return go(Mask(1) << u);
}

// Odd cycles of length ≥ 5 with at most `max_chords` chords, restricted to `within`.
std::optional<CycleWitness> find_cycle(const SimpleGraph& g, Mask within, std::size_t max_chords,
                                       StepBudget& budget)
{
    std::vector<int> path;
    std::optional<CycleWitness> found;
    // chords counts pairs of nonconsecutive path vertices, not counting the pair (start, end)
    std::function<bool(Mask, std::size_t)> extend = [&](Mask on_path, std::size_t chords) -> bool {
        budget.charge(1, "cycle enumeration");
        const int s = path.front();
        const int end = path.back();
        const Mask candidates = g.neighbors(end) & within & ~on_path & ~((Mask(2) << s) - 1);
        for (Mask c = candidates; c; c &= c - 1) {
            const int v = lowest(c);
            std::size_t k = chords;
            if (path.size() >= 3 && g.adjacent(end, s))
                ++k;
            const Mask others = on_path & ~(Mask(1) << end) & ~(Mask(1) << s);
            k += static_cast<std::size_t>(std::popcount(g.neighbors(v) & others));
            if (k > max_chords)
                continue;
            path.push_back(v);
            const std::size_t len = path.size();
            if (len >= 5 && len % 2 == 1 && g.adjacent(v, s)) {
                found = CycleWitness{path, k};
                return true;
            }
            if (extend(on_path | (Mask(1) << v), k))
                return true;
            path.pop_back();
        }
        return false;
    };
    for (Mask w = within; w; w &= w - 1) {
        const int s = lowest(w);
        path.assign(1, s);
        if (extend(Mask(1) << s, 0))
            return found;
    }
    return std::nullopt;
}

} // namespace

Clutter clique_clutter(const SimpleGraph& g)
{
    if (g.n() == 0)
        return Clutter(0, {});
    return Clutter::minimal_sets(g.n(), maximal_cliques(g, full_mask(g.n())));
}

MeynielReport is_meyniel(const SimpleGraph& g, StepBudget& budget)
{
    if (g.n() > 16)
        throw ResourceExceeded("Meyniel check is capped at 16 vertices");
    MeynielReport rep;
    rep.witness = find_cycle(g, full_mask(g.n()), 1, budget);
    rep.meyniel = !rep.witness;
    return rep;
}

MeynielReport is_meyniel(const SimpleGraph& g)
{
    StepBudget budget;
    return is_meyniel(g, budget);
}

std::optional<VertexSet> hoang_witness(const SimpleGraph& g, int u)
{
    if (u < 0 || static_cast<std::size_t>(u) >= g.n())
        throw UsageError("vertex out of range");
    if (auto m = hoang_in(g, full_mask(g.n()), u))
        return from_mask(*m);
    return std::nullopt;
}

bool is_meyniel_via_hoang(const SimpleGraph& g)
{
    if (g.n() > 10)
        throw ResourceExceeded("the Hoang characterization check is capped at 10 vertices");
    const Mask all = full_mask(g.n());
    for (Mask sub = 1; sub <= all && sub != 0; ++sub) {
        for (Mask x = sub; x; x &= x - 1)
            if (!hoang_in(g, sub, lowest(x)))
                return false;
        if (sub == all)
            break;
    }
    return true;
}

std::optional<VertexSet> find_odd_hole(const SimpleGraph& g)
{
    StepBudget budget;
    if (auto c = find_cycle(g, full_mask(g.n()), 0, budget))
        return c->cycle;
    return std::nullopt;
}

PerfectReport is_perfect_small(const SimpleGraph& g)
{
    if (g.n() > 16)
        throw ResourceExceeded("perfection check is capped at 16 vertices");
    PerfectReport rep;
    rep.odd_hole = find_odd_hole(g);
    if (!rep.odd_hole)
        rep.odd_antihole = find_odd_hole(complement(g));
    rep.perfect = !rep.odd_hole && !rep.odd_antihole;
    return rep;
}

RatVector beta_witness(const SimpleGraph& g)
{
    const std::size_t n = g.n();
    RatVector beta(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        auto b = hoang_witness(g, static_cast<int>(k));
        if (!b)
            throw Error("input not Meyniel: no Hoang witness for vertex " + std::to_string(k));
        for (int v : *b)
            beta[v] += Rational(1, n);
    }
    for (auto& x : beta)
        x.canonicalize();
    const Clutter cliques = clique_clutter(g);
    for (const auto& q : cliques.edges()) {
        Rational s = 0;
        for (int v : q)
            s += beta[v];
        if (s != 1)
            throw InternalError("beta witness fails on a maximal clique");
    }
    for (const auto& x : beta)
        if (sgn(x) <= 0)
            throw InternalError("beta witness is not positive");
    return beta;
}

RatVector gamma_witness(std::size_t n, const std::vector<VertexSet>& partition, const Clutter* c)
{
    Mask seen = 0;
    for (const auto& part : partition) {
        const Mask m = to_mask(part);
        if (part.empty() || (m & seen) || (m & ~full_mask(n)))
            throw UsageError("not a partition of the vertex set");
        seen |= m;
    }
    if (seen != full_mask(n))
        throw UsageError("partition does not cover every vertex");
    const std::size_t d = partition.size();
    RatVector gamma(n, Rational(1, d));
    for (auto& x : gamma)
        x.canonicalize();
    if (c) {
        for (const auto& e : c->edges()) {
            Rational s = 0;
            for (int v : e)
                s += gamma[v];
            if (s != 1)
                throw UsageError("an edge does not meet the partition classes exactly once each");
        }
    }
    return gamma;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::uint64_t code_of(const SimpleGraph& g, const std::vector<int>& order)
{
    // order[p] = vertex placed at position p
    std::uint64_t code = 0;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1U : 0U);
    return code;
}

std::vector<int> canonical_order(const SimpleGraph& g)
{
    const std::size_t n = g.n();
    if (n > 11)
        throw ResourceExceeded("canonical forms are capped at 11 vertices");
    // vertex invariant: degree, then sorted neighbor degrees
    std::vector<std::vector<std::size_t>> inv(n);
    for (std::size_t v = 0; v < n; ++v) {
        inv[v].push_back(g.degree(static_cast<int>(v)));
        std::vector<std::size_t> nd;
        for (int u : from_mask(g.neighbors(static_cast<int>(v))))
            nd.push_back(g.degree(u));
        std::sort(nd.begin(), nd.end());
        inv[v].insert(inv[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::stable_sort(base.begin(), base.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> classes;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && inv[base[j]] == inv[base[i]])
            ++j;
        classes.emplace_back(i, j);
        i = j;
    }
    std::vector<int> order = base;
    std::vector<int> best = base;
    std::uint64_t best_code = code_of(g, base);
    std::function<void(std::size_t)> go = [&](std::size_t ci) {
        if (ci == classes.size()) {
            const auto c = code_of(g, order);
            if (c < best_code) {
                best_code = c;
                best = order;
            }
            return;
        }
        auto [lo, hi] = classes[ci];
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo), order.begin() + static_cast<std::ptrdiff_t>(hi));
        do {
            go(ci + 1);
        } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                       order.begin() + static_cast<std::ptrdiff_t>(hi)));
    };
    go(0);
    return best;
}

} // namespace

std::uint64_t canonical_code(const SimpleGraph& g) { return code_of(g, canonical_order(g)); }

SimpleGraph canonical_form(const SimpleGraph& g)
{
    const auto order = canonical_order(g);
    std::vector<int> pos(g.n());
    for (std::size_t p = 0; p < order.size(); ++p)
        pos[order[p]] = static_cast<int>(p);
    SimpleGraph h(g.n());
    for (auto [u, v] : g.edges())
        h.add_edge(pos[u], pos[v]);
    return h;
}

} // namespace clutterlab
