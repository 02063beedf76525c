#ifndef ISG_BRIDGE_HPP
#define ISG_BRIDGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "isg/axioms.hpp"
#include "isg/tables.hpp"

namespace isg {

// A partial magma that passed check_groupoid_axioms, with source/range maps
// and the unit space precomputed.
class FiniteGroupoid {
 public:
  // Throws InvalidStructure (with witness) when the axioms fail.
  static FiniteGroupoid validated(FinitePartialMagma carrier);

  FinitePartialMagma const& carrier() const { return _carrier; }
  std::size_t order() const { return _carrier.order(); }

  ElementId inverse(ElementId x) const { return _carrier.inverse[x]; }
  ElementId source(ElementId x) const { return _source[x]; }  // d(x) = x^-1 x
  ElementId range(ElementId x) const { return _range[x]; }    // r(x) = x x^-1

  bool composable(ElementId a, ElementId b) const {
    return _carrier.composable(a, b);
  }
  std::optional<ElementId> product(ElementId a, ElementId b) const {
    return _carrier.product(a, b);
  }

  // image of d (= image of r), ascending
  std::vector<ElementId> const& units() const { return _units; }

 private:
  FiniteGroupoid() = default;

  FinitePartialMagma     _carrier;
  std::vector<ElementId> _source;
  std::vector<ElementId> _range;
  std::vector<ElementId> _units;
};

// An associative total magma with unique inverses; the star map and the
// designated zero/unit are computed during validation.
class FiniteInverseSemigroup {
 public:
  // Throws InvalidStructure (with witness) when the table is not
  // associative, inverses are not unique, or a declared zero:/unit: header
  // names an element that is not actually absorbing/neutral.
  static FiniteInverseSemigroup validated(FiniteMagma carrier);

  FiniteMagma const& carrier() const { return _carrier; }
  std::size_t order() const { return _carrier.order(); }

  ElementId product(ElementId a, ElementId b) const {
    return _carrier.product(a, b);
  }
  ElementId star(ElementId x) const { return _star[x]; }

  std::optional<ElementId> zero() const { return _carrier.designated.zero; }
  std::optional<ElementId> unit() const { return _carrier.designated.unit; }

 private:
  FiniteInverseSemigroup() = default;

  FiniteMagma            _carrier;
  std::vector<ElementId> _star;
};

// Adjoins a fresh zero and sends every non-composable product to it.  The
// groupoid's element order is preserved with the zero appended last; the
// result always has unique inverses with all nonzero idempotents mutually
// orthogonal.
FiniteInverseSemigroup to_semigroup(FiniteGroupoid const& g);

// Strips the zero and keeps exactly the nonzero products.  Requires a zero
// and mutually orthogonal nonzero idempotents; throws InvalidStructure with
// a witness pair otherwise.  In the result, (x,y) is composable iff
// star(x)x = y star(y) iff d(x) = r(y).
FiniteGroupoid to_groupoid(FiniteInverseSemigroup const& s);

struct RoundtripReport {
  bool        identical = false;
  std::string detail;  // empty when identical
};

// to_groupoid(to_semigroup(g)) must reproduce g exactly: same element
// order, identical partial table and inverse map.
RoundtripReport roundtrip_groupoid(FiniteGroupoid const& g);

// to_semigroup(to_groupoid(s)) must reproduce s up to renaming and
// repositioning of the zero element; the nonzero elements keep their
// relative order and names.
RoundtripReport roundtrip_semigroup(FiniteInverseSemigroup const& s);

// "0", or "0'", "0''", ... if taken.
std::string fresh_zero_name(std::vector<std::string> const& taken);

}  // namespace isg

#endif  // ISG_BRIDGE_HPP
