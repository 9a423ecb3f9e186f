#pragma once

// Hilbert bases of rational cones, affine semigroup membership and the
// "is this set a Hilbert basis" predicate.

#include <optional>
#include <vector>

#include "clutterlab/budget.hpp"
#include "clutterlab/kernel.hpp"
#include "clutterlab/polyhedron.hpp"

namespace clutterlab {

/// The cone ℝ₊H together with the lattice ℤⁿ.
class ConeWithLattice {
public:
    ConeWithLattice(std::vector<IntVector> generators, std::size_t dim);

    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const std::vector<IntVector>& generators() const { return gens_; }
    [[nodiscard]] const std::vector<IntVector>& facets() const { return facets_.facets; }
    [[nodiscard]] const std::vector<IntVector>& equations() const { return facets_.equations; }
    /// Basis of the lattice of integer points in the lineality space.
    [[nodiscard]] const std::vector<IntVector>& lineality() const { return lineality_; }
    [[nodiscard]] bool pointed() const { return lineality_.empty(); }

    [[nodiscard]] bool contains(std::span<const Integer> x) const;
    [[nodiscard]] bool in_lineality(std::span<const Integer> x) const;

private:
    std::size_t dim_;
    std::vector<IntVector> gens_;
    ConeFacets facets_;
    std::vector<IntVector> lineality_;
};

/// The minimal Hilbert basis of a pointed cone, sorted lexicographically.
/// Throws UsageError for cones with lineality (use is_hilbert_basis instead).
std::vector<IntVector> hilbert_basis(const ConeWithLattice& cone, StepBudget& budget);
std::vector<IntVector> hilbert_basis(const ConeWithLattice& cone);

struct Membership {
    bool member = false;
    IntVector coefficients; ///< nonnegative, one per element of H, when member
};

/// Decides a ∈ ℕH. Throws ResourceExceeded when the budget runs out (the answer is
/// then undecided, never guessed).
Membership semigroup_member(const IntVector& a, const std::vector<IntVector>& H, StepBudget& budget);
Membership semigroup_member(const IntVector& a, const std::vector<IntVector>& H);

struct HilbertBasisReport {
    bool verdict = false;
    /// Hilbert basis of the pointed part of the cone, expressed in the original coordinates
    /// (equal to the minimal Hilbert basis when the cone is pointed).
    std::vector<IntVector> basis;
    /// Lattice points of ℝ₊H outside ℕH; empty iff verdict.
    std::vector<IntVector> missing;
};

/// Does ℕH = ℝ₊H ∩ ℤⁿ hold? Handles cones with lineality.
HilbertBasisReport is_hilbert_basis(const std::vector<IntVector>& H, std::size_t dim, StepBudget& budget);
HilbertBasisReport is_hilbert_basis(const std::vector<IntVector>& H, std::size_t dim);

} // namespace clutterlab
