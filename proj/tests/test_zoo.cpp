#include <doctest.h>

#include <map>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "isg/axioms.hpp"
#include "isg/zoo.hpp"

using namespace isg;
using namespace isg::testutil;

namespace {

// Independent oracle: counts partial injections on {1..n} by scanning all
// (n+1)^n candidate image vectors for injectivity on the defined part.
unsigned long count_partial_injections(unsigned n) {
  unsigned long total = 1;
  for (unsigned i = 0; i < n; ++i) {
    total *= n + 1;
  }
  unsigned long count = 0;
  for (unsigned long code = 0; code < total; ++code) {
    unsigned long rest = code;
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) {
      img[i] = rest % (n + 1);  // 0 = undefined
      rest /= n + 1;
    }
    bool injective = true;
    for (unsigned i = 0; i < n && injective; ++i) {
      for (unsigned j = i + 1; j < n && injective; ++j) {
        injective = img[i] == 0 || img[j] == 0 || img[i] != img[j];
      }
    }
    if (injective) {
      ++count;
    }
  }
  return count;
}

unsigned long binomial(unsigned n, unsigned k) {
  unsigned long r = 1;
  for (unsigned i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
  }
  return r;
}

unsigned long factorial(unsigned k) {
  unsigned long r = 1;
  for (unsigned i = 2; i <= k; ++i) {
    r *= i;
  }
  return r;
}

unsigned long rook_order(unsigned n) {
  unsigned long sum = 0;
  for (unsigned k = 0; k <= n; ++k) {
    sum += binomial(n, k) * binomial(n, k) * factorial(k);
  }
  return sum;
}

}  // namespace

TEST_CASE("cyclic group generator") {
  CHECK(cyclic_group(1).order() == 1);

  auto z2 = cyclic_group(2);
  CHECK(z2.product(1, 1) == std::optional<ElementId>(0));  // x.x = e

  auto z6 = cyclic_group(6);
  CHECK(check_groupoid_axioms(z6.carrier()).ok());
  CHECK(z6.units().size() == 1);

  CHECK_THROWS_AS(cyclic_group(0), std::invalid_argument);
}

TEST_CASE("pair groupoid generator") {
  CHECK(pair_groupoid(1).order() == 1);

  auto p2 = pair_groupoid(2);
  CHECK(p2.order() == 4);
  unsigned composable = 0;
  for (ElementId a = 0; a < 4; ++a) {
    for (ElementId b = 0; b < 4; ++b) {
      composable += p2.composable(a, b) ? 1 : 0;
    }
  }
  CHECK(composable == 8);  // n^3

  auto p3 = pair_groupoid(3);
  std::vector<std::string> unit_names;
  for (ElementId u : p3.units()) {
    unit_names.push_back(p3.carrier().names[u]);
  }
  CHECK(unit_names == std::vector<std::string>{"1:1", "2:2", "3:3"});

  CHECK_THROWS_AS(pair_groupoid(0), std::invalid_argument);
}

TEST_CASE("symmetric inverse monoid orders match two independent routes") {
  // formula sum_k C(n,k)^2 k!  vs  direct scan of candidate maps
  for (unsigned n = 1; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(rook_order(n) == count_partial_injections(n));
    CHECK(symmetric_inverse_monoid(n).order() == rook_order(n));
  }
  CHECK(symmetric_inverse_monoid(1).order() == 2);
  CHECK(symmetric_inverse_monoid(2).order() == 7);
  CHECK(symmetric_inverse_monoid(3).order() == 34);
  CHECK(symmetric_inverse_monoid(4).order() == 209);

  CHECK_THROWS_AS(symmetric_inverse_monoid(0), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_inverse_monoid(5), std::invalid_argument);
}

TEST_CASE("symmetric inverse monoid star is the relational inverse") {
  auto s = symmetric_inverse_monoid(2);
  auto& names = s.carrier().names;
  std::map<std::string, ElementId> by_name;
  for (ElementId i = 0; i < s.order(); ++i) {
    by_name[names[i]] = i;
  }
  CHECK(s.star(by_name.at("1>2")) == by_name.at("2>1"));
  CHECK(s.star(by_name.at("1>1")) == by_name.at("1>1"));
  CHECK(s.star(by_name.at("0")) == by_name.at("0"));
  CHECK(s.star(by_name.at("1>2;2>1")) == by_name.at("1>2;2>1"));
  CHECK(s.zero() == by_name.at("0"));
  CHECK(s.unit() == by_name.at("1>1;2>2"));
}

TEST_CASE("disjoint union preserves blocks and drops cross products") {
  auto u = disjoint_union({cyclic_group(2), cyclic_group(3)});
  CHECK(u.order() == 5);
  CHECK(u.units().size() == 2);
  CHECK(u.carrier().names[0] == "0.g0");
  CHECK(u.carrier().names[2] == "1.g0");
  CHECK_FALSE(u.composable(0, 2));
  CHECK(u.product(3, 4) == std::optional<ElementId>(2));  // g1.g2 = g0

  // a one-part union only re-tags the names
  auto single = disjoint_union({pair_groupoid(2)});
  CHECK(single.carrier().table == pair_groupoid(2).carrier().table);
  CHECK(single.carrier().inverse == pair_groupoid(2).carrier().inverse);
  CHECK(single.carrier().names[0] == "0.1:1");

  CHECK(check_groupoid_axioms(
            disjoint_union({pair_groupoid(2), cyclic_group(2)}).carrier())
            .ok());
  CHECK_THROWS_AS(disjoint_union({}), std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
  for (auto const& [name, g] : zoo_corpus()) {
    CAPTURE(name);
    CHECK(serialize_structure(g.carrier())
          == serialize_structure(g.carrier()));
  }
  CHECK(serialize_structure(pair_groupoid(3).carrier())
        == serialize_structure(pair_groupoid(3).carrier()));
  CHECK(symmetric_inverse_monoid(3).carrier()
        == symmetric_inverse_monoid(3).carrier());
}

TEST_CASE("every generated structure satisfies its axioms") {
  for (auto const& [name, g] : zoo_corpus()) {
    CAPTURE(name);
    CHECK(check_groupoid_axioms(g.carrier()).ok());
  }
  for (unsigned n = 1; n <= 4; ++n) {
    CHECK(has_unique_inverses(symmetric_inverse_monoid(n).carrier()).ok);
  }
}

TEST_CASE("enumeration counts at small orders") {
  CHECK(enumerate_semigroups(1, SemigroupFilter::All).size() == 1);
  CHECK(enumerate_semigroups(2, SemigroupFilter::All).size() == 8);
  CHECK(enumerate_semigroups(3, SemigroupFilter::All).size() == 113);

  CHECK(enumerate_semigroups(2, SemigroupFilter::Regular).size() == 6);
  CHECK(enumerate_semigroups(3, SemigroupFilter::Regular).size() == 50);
  CHECK(enumerate_semigroups(2, SemigroupFilter::Inverse).size() == 4);
  CHECK(enumerate_semigroups(3, SemigroupFilter::Inverse).size() == 24);
  CHECK(enumerate_semigroups(2, SemigroupFilter::InverseWithZeroOrthogonal)
            .size()
        == 2);
  CHECK(enumerate_semigroups(3, SemigroupFilter::InverseWithZeroOrthogonal)
            .size()
        == 9);
}

TEST_CASE("order-4 enumeration needs backtracking") {
  CHECK_THROWS_AS(enumerate_semigroups(4, SemigroupFilter::All),
                  std::invalid_argument);
  CHECK(enumerate_semigroups(4, SemigroupFilter::All,
                             EnumerationMode::Backtracking)
            .size()
        == 3492);
  CHECK_THROWS_AS(enumerate_semigroups(0, SemigroupFilter::All),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_semigroups(5, SemigroupFilter::All,
                                       EnumerationMode::Backtracking),
                  std::invalid_argument);
}

TEST_CASE("backtracking agrees with the exhaustive scan") {
  for (unsigned order = 1; order <= 3; ++order) {
    CAPTURE(order);
    auto a = enumerate_semigroups(order, SemigroupFilter::All,
                                  EnumerationMode::Exhaustive);
    auto b = enumerate_semigroups(order, SemigroupFilter::All,
                                  EnumerationMode::Backtracking);
    CHECK(a == b);
  }
}

TEST_CASE("enumeration output is independent of the worker count") {
  for (unsigned workers : {1u, 2u, 3u, 5u}) {
    CAPTURE(workers);
    CHECK(enumerate_semigroups(3, SemigroupFilter::All,
                               EnumerationMode::Exhaustive, workers)
          == enumerate_semigroups(3, SemigroupFilter::All,
                                  EnumerationMode::Exhaustive, 1));
    CHECK(enumerate_semigroups(4, SemigroupFilter::Inverse,
                               EnumerationMode::Backtracking, workers)
          == enumerate_semigroups(4, SemigroupFilter::Inverse,
                                  EnumerationMode::Backtracking, 1));
  }
}

TEST_CASE("enumeration is exhaustive, sorted, and closed under recheck") {
  auto tables = enumerate_semigroups(3, SemigroupFilter::All);
  // every emitted table re-passes the associativity predicate
  for (auto const& m : tables) {
    CHECK(is_associative(m).ok);
  }
  // strictly ascending lexicographic table order
  for (std::size_t i = 1; i < tables.size(); ++i) {
    CHECK(tables[i - 1].table < tables[i].table);
  }
  // nothing is missing: an independent scan finds the same number
  unsigned long independent = 0;
  unsigned long total = 19683;
  for (unsigned long code = 0; code < total; ++code) {
    unsigned long rest = code;
    unsigned t[9];
    for (unsigned i = 9; i-- > 0;) {
      t[i] = rest % 3;
      rest /= 3;
    }
    bool assoc = true;
    for (unsigned a = 0; a < 3 && assoc; ++a) {
      for (unsigned b = 0; b < 3 && assoc; ++b) {
        for (unsigned c = 0; c < 3 && assoc; ++c) {
          assoc = t[t[a * 3 + b] * 3 + c] == t[a * 3 + t[b * 3 + c]];
        }
      }
    }
    if (assoc) {
      ++independent;
    }
  }
  CHECK(independent == tables.size());
}

TEST_CASE("filtered enumerations nest") {
  auto all = enumerate_semigroups(3, SemigroupFilter::All);
  auto regular = enumerate_semigroups(3, SemigroupFilter::Regular);
  auto inverse = enumerate_semigroups(3, SemigroupFilter::Inverse);

  std::set<std::vector<ElementId>> all_set, regular_set;
  for (auto const& m : all) {
    all_set.insert(m.table);
  }
  for (auto const& m : regular) {
    regular_set.insert(m.table);
    CHECK(all_set.count(m.table) == 1);
  }
  for (auto const& m : inverse) {
    CHECK(regular_set.count(m.table) == 1);
    CHECK(has_unique_inverses(m).ok);
  }
}
