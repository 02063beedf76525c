#ifndef ISG_TESTS_HELPERS_HPP
#define ISG_TESTS_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "isg/bridge.hpp"
#include "isg/tables.hpp"
#include "isg/zoo.hpp"

namespace isg::testutil {

// rows[i][j] = index of i.j
inline FiniteMagma magma(std::vector<std::string> names,
                         std::vector<std::vector<int>> rows) {
  FiniteMagma m;
  m.names = std::move(names);
  for (auto const& row : rows) {
    for (int v : row) {
      m.table.push_back(static_cast<ElementId>(v));
    }
  }
  return m;
}

// -1 marks an undefined product
inline FinitePartialMagma partial(std::vector<std::string> names,
                                  std::vector<std::vector<int>> rows,
                                  std::vector<int> inverse) {
  FinitePartialMagma m;
  m.names = std::move(names);
  for (auto const& row : rows) {
    for (int v : row) {
      m.table.push_back(v < 0 ? UNDEFINED : static_cast<ElementId>(v));
    }
  }
  for (int v : inverse) {
    m.inverse.push_back(static_cast<ElementId>(v));
  }
  return m;
}

// x.y = x
inline FiniteMagma left_zero_semigroup() {
  return magma({"a", "b"}, {{0, 0}, {1, 1}});
}

// all products fall on z
inline FiniteMagma null_semigroup() {
  return magma({"z", "w"}, {{0, 0}, {0, 0}});
}

// {0, e} with e idempotent
inline FiniteMagma zero_and_idempotent() {
  return magma({"0", "e"}, {{0, 0}, {0, 1}});
}

inline FiniteMagma z3_magma() {
  return magma({"a", "b", "c"}, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

// the shared corpus: pair groupoids up to 5, cyclic groups up to 12, and
// three disjoint unions mixing blocks
inline std::vector<std::pair<std::string, FiniteGroupoid>> zoo_corpus() {
  std::vector<std::pair<std::string, FiniteGroupoid>> out;
  for (unsigned n = 1; n <= 5; ++n) {
    out.emplace_back("pair(" + std::to_string(n) + ")", pair_groupoid(n));
  }
  for (unsigned n = 1; n <= 12; ++n) {
    out.emplace_back("cyclic(" + std::to_string(n) + ")", cyclic_group(n));
  }
  out.emplace_back("union(cyclic(2),cyclic(3))",
                   disjoint_union({cyclic_group(2), cyclic_group(3)}));
  out.emplace_back("union(pair(2),cyclic(2))",
                   disjoint_union({pair_groupoid(2), cyclic_group(2)}));
  out.emplace_back(
      "union(pair(2),pair(3),cyclic(4))",
      disjoint_union({pair_groupoid(2), pair_groupoid(3), cyclic_group(4)}));
  return out;
}

}  // namespace isg::testutil

#endif  // ISG_TESTS_HELPERS_HPP
