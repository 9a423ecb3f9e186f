#pragma once

// Clutters and simple graphs: constructions and combinatorial predicates.
// Vertices are 0-based; vertex sets are sorted vectors.

#include <cstdint>
#include <optional>
#include <vector>

#include "clutterlab/budget.hpp"
#include "clutterlab/kernel.hpp"

namespace clutterlab {

using VertexSet = std::vector<int>;
using Mask = std::uint64_t;

constexpr std::size_t kMaxVertices = 64;

Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

/// A family of pairwise incomparable nonempty vertex sets on {0..n-1}, canonically sorted.
/// `strict()` additionally demands edges of size ≥ 2 and no isolated vertices; the
/// relaxed form is what blockers and clique clutters of graphs with isolated vertices produce.
class Clutter {
public:
    Clutter() = default;
    /// Validates the antichain property; throws UsageError on violation.
    Clutter(std::size_t n, std::vector<VertexSet> edges);
    /// Builds a clutter and requires the strict invariants.
    static Clutter strict_clutter(std::size_t n, std::vector<VertexSet> edges);
    /// Keeps the inclusion-minimal members of an arbitrary family.
    static Clutter minimal_sets(std::size_t n, const std::vector<Mask>& sets);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const std::vector<VertexSet>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<Mask>& masks() const { return masks_; }
    [[nodiscard]] std::size_t size() const { return edges_.size(); }
    [[nodiscard]] bool strict() const;
    /// Characteristic vectors of the edges.
    [[nodiscard]] std::vector<IntVector> characteristic_vectors() const;

    friend bool operator==(const Clutter& a, const Clutter& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<Mask> masks_;
};

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t n, const std::vector<std::pair<int, int>>& edges = {});

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::vector<std::pair<int, int>> edges() const;
    [[nodiscard]] bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    [[nodiscard]] Mask neighbors(int v) const { return adj_[v]; }
    [[nodiscard]] std::size_t degree(int v) const;
    void add_edge(int u, int v);

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    std::size_t n_ = 0;
    std::vector<Mask> adj_;
};

// ---------------------------------------------------------------------------
// Clutter operations

/// Minimal vertex covers (the blocker).
Clutter blocker(const Clutter& c);
/// The edge clutter of a graph (edges as 2-sets).
Clutter graph_clutter(const SimpleGraph& g);
std::size_t covering_number(const Clutter& c);
std::size_t max_disjoint_edges(const Clutter& c);
bool has_konig(const Clutter& c);
std::optional<std::size_t> is_uniform(const Clutter& c);
bool is_unmixed(const Clutter& c);
/// Adds vertex n to every edge.
Clutter suspension(const Clutter& c);
/// Edges avoiding v (v stays as an isolated index).
Clutter deletion(const Clutter& c, int v);
/// Minimal sets among e \ {v}.
Clutter contraction(const Clutter& c, int v);
/// Rows are edges, columns vertices (the transpose of the clutter matrix).
IntMatrix incidence_matrix(const Clutter& c);

/// d mutually disjoint minimal covers partitioning the vertices, each meeting every edge once.
std::optional<std::vector<VertexSet>> disjoint_cover_partition(const Clutter& c);

// ---------------------------------------------------------------------------
// Graph operations

SimpleGraph graph_cone(const SimpleGraph& g);
SimpleGraph complement(const SimpleGraph& g);
SimpleGraph line_graph(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep);
bool is_connected(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);
bool is_chordal(const SimpleGraph& g);

/// Maximal cliques (Bron–Kerbosch with pivoting).
Clutter clique_clutter(const SimpleGraph& g);

struct CycleWitness {
    VertexSet cycle; ///< vertices in cyclic order
    std::size_t chords = 0;
};

struct MeynielReport {
    bool meyniel = true;
    std::optional<CycleWitness> witness; ///< an odd cycle of length ≥ 5 with fewer than two chords
};

MeynielReport is_meyniel(const SimpleGraph& g, StepBudget& budget);
MeynielReport is_meyniel(const SimpleGraph& g);

/// A stable set containing u that meets every maximal clique of g.
std::optional<VertexSet> hoang_witness(const SimpleGraph& g, int u);
bool is_meyniel_via_hoang(const SimpleGraph& g);

struct PerfectReport {
    bool perfect = true;
    std::optional<VertexSet> odd_hole;     ///< induced odd cycle of g, length ≥ 5
    std::optional<VertexSet> odd_antihole; ///< vertex set inducing an odd hole in the complement
};

PerfectReport is_perfect_small(const SimpleGraph& g);
/// An induced odd cycle of length ≥ 5, in cyclic order.
std::optional<VertexSet> find_odd_hole(const SimpleGraph& g);

/// β = (1/n)·Σ χ(B_k) from Hoàng witnesses; ⟨v, β⟩ = 1 for every maximal clique v.
RatVector beta_witness(const SimpleGraph& g);
/// γ = (1/d, …, 1/d) for a partition into d classes; when `c` is given, checks ⟨v, γ⟩ = 1 on its edges.
RatVector gamma_witness(std::size_t n, const std::vector<VertexSet>& partition, const Clutter* c = nullptr);

// ---------------------------------------------------------------------------
// Isomorphism

/// Canonical adjacency code: equal iff the graphs are isomorphic. Requires n ≤ 11.
std::uint64_t canonical_code(const SimpleGraph& g);
SimpleGraph canonical_form(const SimpleGraph& g);

} // namespace clutterlab
