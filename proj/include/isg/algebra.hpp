#ifndef ISG_ALGEBRA_HPP
#define ISG_ALGEBRA_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isg/bridge.hpp"
#include "isg/tables.hpp"

namespace isg {

// Finite stand-in for a convolution algebra: the product of two basis
// elements is either a single basis element or zero.
struct StructureConstantAlgebra {
  std::vector<std::string> basis;
  std::vector<ElementId>   constants;  // row-major; UNDEFINED = product is 0

  std::size_t dim() const { return basis.size(); }

  std::optional<ElementId> constant(ElementId i, ElementId j) const {
    ElementId c = constants[static_cast<std::size_t>(i) * dim() + j];
    if (c == UNDEFINED) {
      return std::nullopt;
    }
    return c;
  }

  friend bool operator==(StructureConstantAlgebra const&,
                         StructureConstantAlgebra const&) = default;
};

// (e_i e_j) e_k = e_i (e_j e_k) over all triples, with 0 absorbing.
CheckResult algebra_associative(StructureConstantAlgebra const& a);

// Basis indexed by the groupoid elements; constant(i,j) is the composed
// element when (i,j) is composable and 0 otherwise.
StructureConstantAlgebra groupoid_algebra(FiniteGroupoid const& g);

// Basis = nonzero elements in carrier order; products equal to the
// semigroup zero become the algebra zero.  Throws InvalidStructure when the
// semigroup has no zero.
StructureConstantAlgebra contracted_semigroup_algebra(
    FiniteInverseSemigroup const& s);

struct AlgebraComparison {
  bool                                             identical = false;
  std::optional<std::pair<ElementId, ElementId>>   mismatch;  // in a's basis
};

// Structure constants of a and b agree under the basis bijection
// (a-index -> b-index).  Throws std::invalid_argument on size mismatch or
// when the map is not a bijection.
AlgebraComparison algebras_identical(StructureConstantAlgebra const& a,
                                     StructureConstantAlgebra const& b,
                                     std::vector<ElementId> const& bijection);

struct ZeroOneMatrix {
  std::size_t               rows = 0;
  std::size_t               cols = 0;
  std::vector<std::uint8_t> entries;  // row-major, each 0 or 1

  static ZeroOneMatrix zeros(std::size_t r, std::size_t c) {
    return {r, c, std::vector<std::uint8_t>(r * c, 0)};
  }

  std::uint8_t operator()(std::size_t i, std::size_t j) const {
    return entries[i * cols + j];
  }
  std::uint8_t& at(std::size_t i, std::size_t j) {
    return entries[i * cols + j];
  }

  ZeroOneMatrix transpose() const;
  bool is_zero() const;
  // at most one 1 per row and per column
  bool is_partial_permutation() const;

  friend bool operator==(ZeroOneMatrix const&, ZeroOneMatrix const&) = default;
};

// Exact integer product a*b compared against `expected`; any accumulated
// entry above 1 makes the comparison fail.
bool multiply_equals(ZeroOneMatrix const& a, ZeroOneMatrix const& b,
                     ZeroOneMatrix const& expected);

// pi(a) e_b = e_{ab} when (a,b) is composable and 0 otherwise; one square
// |G| x |G| partial permutation matrix per element, pi(a^-1) = pi(a)^T.
std::vector<ZeroOneMatrix> regular_representation(FiniteGroupoid const& g);

// Verification of pi(x)pi(y) = pi(xy), pi(x*) = pi(x)^T, and pi(0) = 0.
struct StarRepReport {
  bool zero_image_ok = true;
  std::vector<std::pair<ElementId, ElementId>> product_violations;
  std::vector<ElementId>                       star_violations;

  bool ok() const {
    return zero_image_ok && product_violations.empty()
           && star_violations.empty();
  }
};

// `pi` is indexed by the elements of s and must consist of square matrices
// of one common dimension; throws std::invalid_argument otherwise.
StarRepReport check_star_representation(FiniteInverseSemigroup const& s,
                                        std::vector<ZeroOneMatrix> const& pi);

}  // namespace isg

#endif  // ISG_ALGEBRA_HPP
