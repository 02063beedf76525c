#ifndef ISG_ZOO_HPP
#define ISG_ZOO_HPP

#include <functional>
#include <vector>

#include "isg/bridge.hpp"
#include "isg/tables.hpp"

namespace isg {

// Z_n as a one-unit groupoid: elements g0..g(n-1), i.j = (i+j) mod n.
FiniteGroupoid cyclic_group(unsigned n);

// Elements i:j for i,j in 1..n; (i:j).(k:l) = i:l iff j = k; (i:j)^-1 = j:i.
// n^2 elements, n units, n^3 composable pairs.
FiniteGroupoid pair_groupoid(unsigned n);

// All partial injections on {1..n} under composition (f.g)(x) = f(g(x)).
// Order sum_k C(n,k)^2 k!; zero = empty map ("0"), unit = identity.
// Supported for 1 <= n <= 4.
FiniteInverseSemigroup symmetric_inverse_monoid(unsigned n);

// Tagged disjoint union; element k of part p is named "p.<name>"; products
// across blocks are undefined.
FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts);

enum class SemigroupFilter {
  All,       // every associative table
  Regular,   // every element has an inverse
  Inverse,   // every element has a unique inverse
  InverseWithZeroOrthogonal,  // inverse, has a zero, nonzero idempotents
                              // mutually orthogonal
};

enum class EnumerationMode {
  Exhaustive,    // scan all n^(n^2) tables; order <= 3
  Backtracking,  // fill cells row-major, pruning on any fully determined
                 // violated triple; order <= 4
};

// Visits every labeled associative table of the given order that passes the
// filter, in lexicographic table order (rows concatenated, entries compared
// by index).  The search space may be partitioned across `workers` threads;
// the visit order is independent of the worker count.  Throws
// std::invalid_argument for unsupported order/mode combinations.
void enumerate_semigroups(unsigned order, SemigroupFilter filter,
                          EnumerationMode mode, unsigned workers,
                          std::function<void(FiniteMagma const&)> const& visit);

std::vector<FiniteMagma> enumerate_semigroups(
    unsigned order, SemigroupFilter filter,
    EnumerationMode mode = EnumerationMode::Exhaustive, unsigned workers = 1);

}  // namespace isg

#endif  // ISG_ZOO_HPP
