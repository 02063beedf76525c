#ifndef ISG_TABLES_HPP
#define ISG_TABLES_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace isg {

// Index of an element in the carrier set of the owning structure.
using ElementId = std::uint32_t;

// Marks an undefined entry in a partial multiplication table.
inline constexpr ElementId UNDEFINED = std::numeric_limits<ElementId>::max();

// Structures larger than this are rejected by the parser; keeps index
// arithmetic comfortably inside 32-bit integers.
inline constexpr std::size_t MAX_ORDER = 4096;

// Absorbing and neutral elements, when present.  Candidates coming from a
// file header are validated against the table by the axioms layer.
struct DesignatedElements {
  std::optional<ElementId> zero;
  std::optional<ElementId> unit;

  friend bool operator==(DesignatedElements const&,
                         DesignatedElements const&) = default;
};

// A total binary operation on n named elements.  Nothing beyond totality is
// assumed; associativity and the rest are checked, not presupposed.
struct FiniteMagma {
  std::vector<std::string> names;
  std::vector<ElementId>   table;  // row-major, table[a * n + b] = a . b
  DesignatedElements       designated;

  std::size_t order() const { return names.size(); }

  ElementId product(ElementId a, ElementId b) const {
    return table[static_cast<std::size_t>(a) * order() + b];
  }

  friend bool operator==(FiniteMagma const&, FiniteMagma const&) = default;
};

// A partial binary operation together with a total involutive inverse map.
struct FinitePartialMagma {
  std::vector<std::string> names;
  std::vector<ElementId>   table;    // row-major; UNDEFINED where no product
  std::vector<ElementId>   inverse;  // total involution on [0, n)
  DesignatedElements       designated;

  std::size_t order() const { return names.size(); }

  bool composable(ElementId a, ElementId b) const {
    return table[static_cast<std::size_t>(a) * order() + b] != UNDEFINED;
  }

  std::optional<ElementId> product(ElementId a, ElementId b) const {
    ElementId p = table[static_cast<std::size_t>(a) * order() + b];
    if (p == UNDEFINED) {
      return std::nullopt;
    }
    return p;
  }

  friend bool operator==(FinitePartialMagma const&,
                         FinitePartialMagma const&) = default;
};

using Structure = std::variant<FiniteMagma, FinitePartialMagma>;

// Raised on malformed input; `line` is the 1-based offending line.
struct ParseError : std::runtime_error {
  ParseError(int line_, std::string const& msg);
  int line;
};

// Parses the line-oriented text format:
//
//   elements: a b c            # whitespace-separated symbols
//   zero: <symbol>             # optional
//   unit: <symbol>             # optional
//   inverse: a->a b->c c->b    # required as soon as the table is partial
//   table:
//   a b c                      # row i, column j holds i.j; '.' = undefined
//   ...
//
// '#' starts a comment to end of line.  A structure with an `inverse:`
// header parses as FinitePartialMagma (even if its table happens to be
// total, e.g. a group presented as a groupoid); otherwise the table must be
// total and the result is a FiniteMagma.
Structure parse_structure(std::string const& text);

// Canonical serialization; parse_structure(serialize_structure(s)) == s.
std::string serialize_structure(FiniteMagma const& s);
std::string serialize_structure(FinitePartialMagma const& s);
std::string serialize_structure(Structure const& s);

}  // namespace isg

#endif  // ISG_TABLES_HPP
