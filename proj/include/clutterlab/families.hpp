#pragma once

// Instance generators: the K_{2,4} line graph, the sharpness family, standard graphs,
// seeded random instances, exhaustive small enumerations, and the search for a
// chordal graph whose clique-clutter edge ideal is not normal.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "clutterlab/budget.hpp"
#include "clutterlab/combinat.hpp"
#include "clutterlab/tdi.hpp"

namespace clutterlab {

/// Uniform in [0, bound) by rejection; identical on every standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform in [lo, hi].
long uniform_in(std::mt19937_64& rng, long lo, long hi);

/// d blocks X_1..X_d of size g; edges = transversals. Blocker = {X_1, …, X_d}.
Clutter sharpness_clutter(std::size_t d, std::size_t g);
std::vector<VertexSet> sharpness_partition(std::size_t d, std::size_t g);

struct LineK24Example {
    SimpleGraph graph;
    Clutter clutter;
};
/// Line graph of K_{2,4} and its clique clutter.
LineK24Example example_3_9();

SimpleGraph cycle_graph(std::size_t k);
SimpleGraph path_graph(std::size_t k);
SimpleGraph complete_graph(std::size_t k);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
SimpleGraph random_chordal(std::size_t n, std::uint64_t seed);
SimpleGraph random_bipartite(std::size_t n, std::uint64_t seed);

/// Triangle clutter {{0,1},{1,2},{0,2}}.
Clutter triangle_clutter();
/// Edge clutter of C4.
Clutter square_clutter();

/// All graphs on exactly n vertices up to isomorphism (n ≤ 8), in canonical form, sorted by code.
std::vector<SimpleGraph> all_graphs(std::size_t n);
/// Connected graphs with at least one edge, 2 ≤ vertices ≤ n_max, bipartite, graph clutter unmixed.
std::vector<SimpleGraph> enumerate_unmixed_bipartite(std::size_t n_max);

/// Seeded batch for the Meyniel suite: chordal, bipartite and cones over them, 2 ≤ n ≤ n_max.
std::vector<SimpleGraph> meyniel_batch(std::size_t count, std::size_t n_max, std::uint64_t seed);

/// Random linear system: n variables, q columns, entries in [lo, hi], w in [wlo, whi]. Zero columns redrawn.
LinearSystem random_system(std::size_t n, std::size_t q, long lo, long hi, long wlo, long whi, std::mt19937_64& rng);

/// 3-sun: triangle 0,1,2 with ears 3 (on 0,1), 4 (on 1,2), 5 (on 0,2).
SimpleGraph three_sun();

/// Two 3-suns joined at vertex a of the first and b of the second copy: gap 0 identifies
/// them, gap 1 adds an edge, gap k inserts a path with k − 1 new vertices. Returns a description too.
std::pair<SimpleGraph, std::string> glued_suns(int a, int b, int gap);

struct NonNormalHit {
    SimpleGraph graph;
    std::string construction;
    unsigned power = 0;
    IntVector witness; ///< in closure(I^power) \ I^power
};

struct NonNormalSearch {
    std::optional<NonNormalHit> hit;
    std::size_t candidates_tried = 0;
    bool budget_exhausted = false;
};

/// Two-gadget gluings first (in a fixed order), then seeded random chordal graphs.
NonNormalSearch search_nonnormal_chordal(std::size_t n_max, StepBudget& budget, std::uint64_t seed = 1);
NonNormalSearch search_nonnormal_chordal(std::size_t n_max = 13);

struct ConverseHit {
    LinearSystem system;
    IntVector missing;
};
/// Random systems with P integral, xA ≤ w TDI, and H(A, w) not a Hilbert basis.
std::optional<ConverseHit> search_converse_counterexample(std::size_t trials, std::uint64_t seed);

} // namespace clutterlab
