#pragma once

// Total dual integrality of xA ≤ w, idealness and max-flow min-cut for clutters,
// and the sufficient / equivalent conditions relating TDI to Hilbert bases.

#include <optional>
#include <string>
#include <vector>

#include "clutterlab/budget.hpp"
#include "clutterlab/combinat.hpp"
#include "clutterlab/lattice.hpp"
#include "clutterlab/polyhedron.hpp"

namespace clutterlab {

/// The system xA ≤ w, i.e. ⟨x, v_i⟩ ≤ w_i for each column v_i of A.
struct LinearSystem {
    std::size_t n = 0;
    std::vector<IntVector> columns;
    IntVector w;

    LinearSystem() = default;
    /// Validates dimensions; columns must be nonzero.
    LinearSystem(std::size_t n, std::vector<IntVector> columns, IntVector w);

    [[nodiscard]] HRep polyhedron() const;
    /// H(A, w) = {(v_i, w_i)}.
    [[nodiscard]] std::vector<IntVector> lifted() const;
};

enum class TdiVerdict { tdi, not_tdi, vacuous, undecided };
const char* to_string(TdiVerdict v);

struct FaceRecord {
    RatVector point;                 ///< a point of the minimal face
    std::vector<std::size_t> active; ///< indices of the active columns
    bool hilbert_basis = false;
    std::vector<IntVector> missing;  ///< lattice points of the active cone outside ℕ(active)
};

struct TdiCertificate {
    TdiVerdict verdict = TdiVerdict::undecided;
    /// On tdi: one passing record per minimal face. On not_tdi: the records up to and
    /// including the single failing face (last).
    std::vector<FaceRecord> faces;
    std::string note; ///< reason for undecided
};

TdiCertificate is_tdi(const LinearSystem& s, StepBudget& budget);
TdiCertificate is_tdi(const LinearSystem& s);

// ---------------------------------------------------------------------------
// Clutters

/// {x ≥ 0, xA ≥ 1} in ≤ form: rows −e_j ≤ 0, then −v_i ≤ −1.
HRep covering_polyhedron(const Clutter& c);

struct IdealReport {
    bool ideal = false;
    std::optional<RatVector> fractional_vertex;
};

IdealReport is_ideal_clutter(const Clutter& c);

/// The covering system written as xA' ≤ w': columns −v_i with rhs −1, then −e_j with rhs 0.
LinearSystem mfmc_system(const Clutter& c);

struct IlpEvidence {
    bool performed = false;
    unsigned max_entry = 0;     ///< every w ∈ {0..max_entry}ⁿ was scanned
    std::size_t instances = 0;
    bool all_integral = true;   ///< LP optimum attained by an integral packing for every w
    std::optional<IntVector> counterexample_w;
};

struct MfmcOptions {
    bool ilp_crosscheck = true;
    unsigned max_entry = 3;
    std::size_t max_instances = 20000;
};

struct MfmcReport {
    TdiCertificate certificate;
    IlpEvidence evidence; ///< bounded scan, evidence only
};

MfmcReport is_mfmc(const Clutter& c, const MfmcOptions& opts, StepBudget& budget);
MfmcReport is_mfmc(const Clutter& c, const MfmcOptions& opts = {});

/// Scans max{⟨1,y⟩ : y ≥ 0, Σ y_i v_i ≤ w} for all w ∈ {0..bound}ⁿ and compares with the
/// best integral packing.
IlpEvidence mfmc_ilp_scan(const Clutter& c, unsigned max_entry, std::size_t max_instances);

// ---------------------------------------------------------------------------
// Hilbert-basis conditions

struct LiftedHilbertReport {
    bool empty = false;        ///< P = ∅ (integrality and TDI hold vacuously)
    bool integral = false;
    bool lifted_hilbert = false;
    TdiVerdict tdi = TdiVerdict::undecided;
    bool implication_respected = true; ///< not (integral ∧ lifted_hilbert ∧ ¬TDI)
};

LiftedHilbertReport thm41_check(const LinearSystem& s, StepBudget& budget);
LiftedHilbertReport thm41_check(const LinearSystem& s);

/// The system x ≥ 0, xA ≤ w written as x[A | −I] ≤ (w | 0).
LinearSystem nonnegative_system(std::size_t n, const std::vector<IntVector>& columns, const IntVector& w);

struct NonnegativeSystemReport {
    TdiVerdict tdi = TdiVerdict::undecided; ///< left side
    bool integral = false;
    bool hilbert = false;                   ///< {(v_i,w_i)} ∪ {(−e_j,0)} is a Hilbert basis
    std::vector<IntVector> missing;
    bool agree = false;                     ///< [tdi] == [integral ∧ hilbert]
};

/// Requires A ≥ 0 and w ≥ 0.
NonnegativeSystemReport prop42_check(std::size_t n, const std::vector<IntVector>& columns, const IntVector& w,
                          StepBudget& budget);
NonnegativeSystemReport prop42_check(std::size_t n, const std::vector<IntVector>& columns, const IntVector& w);

struct RoundingReport {
    bool rounding = false; ///< {(v_i,w_i)} ∪ {e_{n+1}} is a Hilbert basis
    std::vector<IntVector> missing;
    bool empty = false;
    bool integral = false;
    TdiVerdict tdi = TdiVerdict::undecided;
    /// TDI ⇔ (P integral ∧ rounding)
    bool equivalence_respected = true;
};

RoundingReport integer_rounding_check(const LinearSystem& s, StepBudget& budget);
RoundingReport integer_rounding_check(const LinearSystem& s);

// ---------------------------------------------------------------------------
// Stability polytopes

/// x ≥ 0, ⟨χ(K), x⟩ ≤ 1 for each maximal clique K, as a system x[A | −I] ≤ (1 | 0).
LinearSystem stab_system(const SimpleGraph& g);
HRep stab_polytope(const SimpleGraph& g);

struct WpgtReport {
    bool perfect = false;
    bool integral = false;
    TdiVerdict tdi = TdiVerdict::undecided;
    bool agree = false;
};

WpgtReport wpgt_crosscheck(const SimpleGraph& g);

} // namespace clutterlab
