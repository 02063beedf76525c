#ifndef ISG_AXIOMS_HPP
#define ISG_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "isg/tables.hpp"

namespace isg {

enum class WitnessKind {
  NonAssociativeTriple,
  NoInverse,
  MultipleInverses,
  NonCommutingIdempotents,
  NonOrthogonalIdempotents,
  GroupoidAxiomViolation,
  ComposabilityMismatch,
};

// Concrete evidence for a failed check.  Re-evaluating the named clause on
// the named elements reproduces the failure (see witness_refails).
struct Witness {
  WitnessKind            kind;
  std::vector<ElementId> elements;  // at most 3
  int                    clause = 0;  // 1..4 for groupoid axiom clauses

  friend bool operator==(Witness const&, Witness const&) = default;
};

// Outcome of a single yes/no check.
struct CheckResult {
  bool                   ok = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return ok; }
};

enum class Flag { True, False, NotApplicable };

struct FlagResult {
  Flag                   value = Flag::NotApplicable;
  std::optional<Witness> witness;
};

// Raised when an input violates a structural precondition (not a groupoid,
// not an inverse semigroup, no zero, ...).  Carries the witness when one
// exists.
struct InvalidStructure : std::runtime_error {
  explicit InvalidStructure(std::string const&     msg,
                            std::optional<Witness> w = std::nullopt)
      : std::runtime_error(msg), witness(std::move(w)) {}
  std::optional<Witness> witness;
};

// (ab)c = a(bc) over all triples; on failure the row-major first violating
// triple.
CheckResult is_associative(FiniteMagma const& m);

// { y | xyx = x and yxy = y }.  Assumes associativity.
std::vector<ElementId> inverses_of(FiniteMagma const& m, ElementId x);

// Every element has at least one inverse / exactly one inverse.
CheckResult is_regular(FiniteMagma const& m);
CheckResult has_unique_inverses(FiniteMagma const& m);

// { e | ee = e }, ascending.
std::vector<ElementId> idempotents(FiniteMagma const& m);

CheckResult idempotents_commute(FiniteMagma const& m);

// Uniqueness of inverses vs commuting idempotents.  `consistent()` being
// false on an associative regular table signals an implementation bug, not
// a property of the input.
struct VagnerReport {
  bool unique_inverses;
  bool idempotents_commute;
  bool consistent() const { return unique_inverses == idempotents_commute; }
};

// Throws InvalidStructure unless m is associative and regular.
VagnerReport check_vagner(FiniteMagma const& m);

// The unique absorbing / neutral element, if present.
std::optional<ElementId> find_zero(FiniteMagma const& m);
std::optional<ElementId> find_unit(FiniteMagma const& m);

// ef = fe = zero for all pairs of distinct nonzero idempotents.  Both
// orders are checked; a one-sided failure on corrupt input still yields a
// witness.
CheckResult nonzero_idempotents_orthogonal(FiniteMagma const& m,
                                           ElementId          zero);

// Groupoid axioms over a partial magma with involutive inverse map:
//   (1) (a,b),(b,c) composable => (ab,c),(a,bc) composable, (ab)c = a(bc)
//   (2) (b, b^-1) composable for every b
//   (3) (a,b) composable => a^-1(ab) = b and (ab)b^-1 = a
//   (4) (x,y) composable <=> d(x) = r(y), d(x) = x^-1 x, r(x) = x x^-1
// Clause 4 is derivable from 1-3; it is checked directly because it is the
// workhorse of the zero-adjunction correspondence, so a failure here with
// 1-3 passing flags an implementation bug.  Failures are reported, never
// thrown.
struct GroupoidReport {
  FlagResult associativity;            // clause 1
  FlagResult inverses_composable;      // clause 2
  FlagResult cancellation;             // clause 3
  FlagResult composability_criterion;  // clause 4

  bool ok() const {
    return associativity.value == Flag::True
           && inverses_composable.value == Flag::True
           && cancellation.value == Flag::True
           && composability_criterion.value == Flag::True;
  }
  std::optional<Witness> first_witness() const;
};

GroupoidReport check_groupoid_axioms(FinitePartialMagma const& g);

// All flags evaluated in dependency order; witnesses use row-major first
// tie-breaking; pure function of the input.
struct Classification {
  FlagResult is_associative;
  FlagResult is_regular;
  FlagResult has_unique_inverses;
  FlagResult idempotents_commute;
  FlagResult has_zero;
  FlagResult has_unit;
  FlagResult nonzero_idempotents_orthogonal;

  std::optional<ElementId> zero;
  std::optional<ElementId> unit;

  // Set only when the input declared a zero:/unit: header; false when the
  // declared element is not actually absorbing/neutral.
  std::optional<bool> declared_zero_valid;
  std::optional<bool> declared_unit_valid;
};

Classification classify(FiniteMagma const& m);

// Re-evaluates the clause named by the witness; true iff the failure
// reproduces.
bool witness_refails(FiniteMagma const& m, Witness const& w);
bool witness_refails(FinitePartialMagma const& g, Witness const& w);

// "a,b,c" using element names; for reports.
std::string witness_names(std::vector<std::string> const& names,
                          Witness const&                  w);

}  // namespace isg

#endif  // ISG_AXIOMS_HPP
