#pragma once

// Ehrhart-ring invariants of P = conv(v_1, …, v_q) for a clutter: Ehrhart test,
// Ehrhart polynomial and h-vector, a-invariant (two routes), regularity, the
// a-invariant / regularity bounds for uniform unmixed MFMC clutters, and the
// degrees of the canonical module generators.

#include <optional>
#include <string>
#include <vector>

#include "clutterlab/budget.hpp"
#include "clutterlab/combinat.hpp"
#include "clutterlab/polyhedron.hpp"

namespace clutterlab {

struct EhrhartReport {
    bool ehrhart = false;
    std::optional<IntVector> witness; ///< lattice point of ℝ₊B outside ℕB, B = {(v_i, 1)}
};

/// Are the lifted vectors (v_i, 1) a Hilbert basis?
EhrhartReport is_ehrhart_clutter(const Clutter& c, StepBudget& budget);
EhrhartReport is_ehrhart_clutter(const Clutter& c);

Polytope clutter_polytope(const Clutter& c);

/// |ℤⁿ ∩ bP|
std::uint64_t ehrhart_function(const Clutter& c, unsigned b);

struct EhrhartData {
    int dim = 0;                         ///< dim P
    std::vector<std::uint64_t> values;   ///< L(0), …, L(dim + 1)
    RatVector polynomial;                ///< coefficients of L, constant term first
    std::vector<Integer> hvector;        ///< trailing zeros trimmed
    int a_series = 0;                    ///< deg h − (dim + 1)
    int a_interior = 0;                  ///< −min{k ≥ 1 : relint(kP) has a lattice point}
    int regularity = 0;                  ///< dim + 1 + a
};

/// Computes everything in one pass; throws InternalError on inconsistent data
/// (non-polynomial counts, disagreeing a-invariants, normalized-volume mismatch).
EhrhartData ehrhart_data(const Clutter& c);

std::vector<Integer> hvector(const Clutter& c);
int a_invariant_series(const Clutter& c);
int a_invariant_interior(const Clutter& c);
int regularity(const Clutter& c);

struct RegularityBoundReport {
    bool hypotheses_met = false;
    std::vector<std::string> unmet; ///< which hypotheses fail
    std::optional<std::size_t> d;   ///< uniformity parameter
    bool unmixed = false;
    bool mfmc = false;
    std::size_t g = 0;              ///< covering number
    bool ehrhart = false;
    EhrhartData data;
    bool a_bound = false;           ///< a ≤ −g
    bool a_tight = false;           ///< a = −g
    bool reg_bound = false;         ///< reg ≤ (d−1)(g−1)
    bool reg_tight = false;
    bool rank_bound = false;        ///< rank(A) ≤ g + (d−1)(g−1)
    bool konig = false;
    /// Conclusions hold (only meaningful when hypotheses_met).
    [[nodiscard]] bool conclusions_hold() const { return ehrhart && a_bound && reg_bound && rank_bound && konig; }
};

RegularityBoundReport check_theorem22(const Clutter& c);

struct CanonicalGenerator {
    IntVector vector; ///< (a, degree)
    int degree = 0;
};

/// Minimal generators of the ideal of interior lattice points of ℝ₊B, up to degree dim P + 2.
/// Requires an Ehrhart clutter.
std::vector<CanonicalGenerator> canonical_degrees(const Clutter& c);

} // namespace clutterlab
