#pragma once

// Exact conversion between inequality and generator descriptions of rational
// polyhedra (double description method), minimal faces, integrality and
// lattice-point enumeration in dilated polytopes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "clutterlab/kernel.hpp"

namespace clutterlab {

/// ⟨normal, x⟩ ≤ rhs (or = rhs when used as an equation).
struct Inequality {
    IntVector normal;
    Integer rhs;

    friend bool operator==(const Inequality&, const Inequality&) = default;
    friend auto operator<=>(const Inequality& a, const Inequality& b)
    {
        if (a.normal != b.normal)
            return a.normal < b.normal ? std::strong_ordering::less : std::strong_ordering::greater;
        return a.rhs < b.rhs ? std::strong_ordering::less
                             : (a.rhs == b.rhs ? std::strong_ordering::equal : std::strong_ordering::greater);
    }
};

struct HRep {
    std::size_t dim = 0;
    std::vector<Inequality> inequalities;
    std::vector<Inequality> equations;

    [[nodiscard]] bool contains(std::span<const Rational> x) const;
};

/// P = conv(vertices) + cone(rays) + span(lineality). No vertices means P is empty.
/// With nonzero lineality each "vertex" is the canonical point of a minimal face.
struct VRep {
    std::size_t dim = 0;
    std::vector<RatVector> vertices;
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;

    [[nodiscard]] bool is_empty() const { return vertices.empty(); }
    [[nodiscard]] bool is_bounded() const { return rays.empty() && lineality.empty(); }
};

struct Face {
    std::vector<std::size_t> active; ///< indices into HRep::inequalities tight on the face
    int dimension = 0;
    RatVector point;                          ///< a point of the face
    std::optional<IntVector> integral_point;  ///< present iff the face contains a lattice point
};

struct DDOptions {
    std::size_t max_rays = 100'000;
};

/// Generators of the cone {x ∈ ℝ^dim : ⟨row, x⟩ ≤ 0 for every row}.
struct ConeGenerators {
    std::vector<IntVector> rays;      ///< extreme rays modulo lineality, primitive
    std::vector<IntVector> lineality; ///< basis of the lineality space
};

ConeGenerators cone_generators(const std::vector<IntVector>& rows, std::size_t dim, const DDOptions& opts = {});

/// Irredundant description of cone(generators) = {x : ⟨f,x⟩ ≥ 0 ∀ f ∈ facets, ⟨e,x⟩ = 0 ∀ e ∈ equations}.
struct ConeFacets {
    std::vector<IntVector> facets;    ///< primitive inner normals, sorted
    std::vector<IntVector> equations; ///< canonical basis of span(generators)^⊥
};

ConeFacets cone_facets(const std::vector<IntVector>& generators, std::size_t dim, const DDOptions& opts = {});

/// H → V. An infeasible system yields an empty VRep (not an error).
VRep to_vrep(const HRep& h, const DDOptions& opts = {});
/// V → H. Output is irredundant: facets plus a canonical basis of the affine hull equations.
/// An empty VRep yields the system {0 ≤ −1}.
HRep to_hrep(const VRep& v, const DDOptions& opts = {});

/// Minimal faces of P with their active sets. Empty P gives an empty list.
std::vector<Face> minimal_faces(const HRep& h, const DDOptions& opts = {});

struct IntegralityReport {
    bool integral = true;
    std::optional<RatVector> fractional_vertex; ///< a minimal-face point with no lattice point in its face
};

/// P integral ⇔ every minimal face contains a lattice point. Throws UsageError on empty P.
IntegralityReport is_integral(const HRep& h, const DDOptions& opts = {});

/// Affine dimension; −1 for the empty polyhedron.
int dimension(const VRep& v);

/// A bounded polyhedron with both descriptions cached.
class Polytope {
public:
    explicit Polytope(VRep v, const DDOptions& opts = {});
    static Polytope from_points(const std::vector<IntVector>& points);

    [[nodiscard]] const VRep& vrep() const { return v_; }
    [[nodiscard]] const HRep& hrep() const { return h_; }
    [[nodiscard]] std::size_t ambient_dim() const { return v_.dim; }
    [[nodiscard]] int dimension() const { return dim_; }

    /// ℤⁿ ∩ b·P, lexicographically sorted.
    [[nodiscard]] std::vector<IntVector> lattice_points(unsigned b) const;
    [[nodiscard]] std::uint64_t count_lattice_points(unsigned b) const;
    /// Lattice points of the relative interior of b·P.
    [[nodiscard]] std::vector<IntVector> relative_interior_lattice_points(unsigned b) const;
    [[nodiscard]] std::uint64_t count_relative_interior_lattice_points(unsigned b) const;

private:
    VRep v_;
    HRep h_;
    int dim_ = -1;
};

std::vector<IntVector> lattice_points(const Polytope& p, unsigned b);
std::vector<IntVector> relative_interior_lattice_points(const Polytope& p, unsigned b);

} // namespace clutterlab
