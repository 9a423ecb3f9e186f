#pragma once

// Monomial ideals given by minimal exponent vectors: powers, symbolic powers,
// integral closures of powers, and bounded normality / torsion-freeness checks.

#include <optional>
#include <vector>

#include "clutterlab/budget.hpp"
#include "clutterlab/combinat.hpp"
#include "clutterlab/kernel.hpp"

namespace clutterlab {

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// Keeps the minimal generators (componentwise order), sorted.
    MonomialIdeal(std::size_t n, std::vector<IntVector> gens);

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] const std::vector<IntVector>& gens() const { return gens_; }
    [[nodiscard]] bool contains(const IntVector& a) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.n_ == b.n_ && a.gens_ == b.gens_;
    }

private:
    std::size_t n_ = 0;
    std::vector<IntVector> gens_;
};

bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
bool contains(const MonomialIdeal& I, const IntVector& a);

MonomialIdeal edge_ideal(const Clutter& c);
MonomialIdeal power(const MonomialIdeal& I, unsigned i);
/// I^(i) = ∩ p_k^i over the minimal covers C_k: {a : ⟨a, u_k⟩ ≥ i for all k}.
MonomialIdeal symbolic_power(const Clutter& c, unsigned i, StepBudget& budget);
MonomialIdeal symbolic_power(const Clutter& c, unsigned i);
/// Integral closure of I^i: exponents in i·(conv(gens) + ℝ₊ⁿ).
MonomialIdeal closure_power(const MonomialIdeal& I, unsigned i, StepBudget& budget);
MonomialIdeal closure_power(const MonomialIdeal& I, unsigned i);
/// LP route: a ∈ closure(I^i) iff some λ ≥ 0 with Σλ = i has Σ λ_j g_j ≤ a.
bool in_closure_power(const MonomialIdeal& I, unsigned i, const IntVector& a);

/// Result of comparing two ideal families for powers 1..bound. "holds" certifies only up to bound.
struct PowerCheck {
    bool holds = true;
    unsigned bound = 0;
    std::optional<unsigned> failing_power;
    std::optional<IntVector> witness; ///< in the larger ideal, not in the smaller one
};

/// I^i = I^(i) for i = 1..r.
PowerCheck is_ntf_upto(const Clutter& c, unsigned r, StepBudget& budget);
PowerCheck is_ntf_upto(const Clutter& c, unsigned r = 3);

struct NormalityReport {
    PowerCheck normal;           ///< closure(I^i) = I^i
    PowerCheck closure_symbolic; ///< closure(I^i) = I^(i)
};

NormalityReport is_normal_upto(const Clutter& c, unsigned r, StepBudget& budget);
NormalityReport is_normal_upto(const Clutter& c, unsigned r = 3);

} // namespace clutterlab
