#include "isg/bridge.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace isg {

namespace {

[[noreturn]] void bug(std::string const& what) {
  throw std::logic_error("internal inconsistency: " + what);
}

}  // namespace

FiniteGroupoid FiniteGroupoid::validated(FinitePartialMagma carrier) {
  ElementId n = static_cast<ElementId>(carrier.order());
  if (carrier.inverse.size() != carrier.order()) {
    throw InvalidStructure("inverse map size does not match order");
  }
  for (ElementId x = 0; x < n; ++x) {
    if (carrier.inverse[x] >= n
        || carrier.inverse[carrier.inverse[x]] != x) {
      throw InvalidStructure("inverse map is not an involution");
    }
  }

  auto report = check_groupoid_axioms(carrier);
  if (!report.ok()) {
    auto        w = report.first_witness();
    std::string msg = "not a groupoid";
    if (w) {
      msg += " (clause " + std::to_string(w->clause) + ", witness "
             + witness_names(carrier.names, *w) + ")";
    }
    throw InvalidStructure(msg, w);
  }

  FiniteGroupoid g;
  g._source.resize(n);
  g._range.resize(n);
  std::set<ElementId> d_image, r_image;
  for (ElementId x = 0; x < n; ++x) {
    g._source[x] = *carrier.product(carrier.inverse[x], x);
    g._range[x]  = *carrier.product(x, carrier.inverse[x]);
    d_image.insert(g._source[x]);
    r_image.insert(g._range[x]);
  }
  if (d_image != r_image) {
    bug("image of d differs from image of r");
  }
  g._units.assign(d_image.begin(), d_image.end());
  for (ElementId u : g._units) {
    if (carrier.inverse[u] != u || carrier.product(u, u) != u) {
      bug("unit fails u^-1 = u.u = u");
    }
  }
  g._carrier = std::move(carrier);
  return g;
}

FiniteInverseSemigroup FiniteInverseSemigroup::validated(FiniteMagma carrier) {
  if (auto assoc = is_associative(carrier); !assoc.ok) {
    throw InvalidStructure(
        "not associative (witness "
            + witness_names(carrier.names, *assoc.witness) + ")",
        assoc.witness);
  }
  if (auto unique = has_unique_inverses(carrier); !unique.ok) {
    throw InvalidStructure(
        "inverses are not unique (witness "
            + witness_names(carrier.names, *unique.witness) + ")",
        unique.witness);
  }

  ElementId              n = static_cast<ElementId>(carrier.order());
  std::vector<ElementId> star(n);
  for (ElementId x = 0; x < n; ++x) {
    star[x] = inverses_of(carrier, x).front();
  }
  for (ElementId x = 0; x < n; ++x) {
    if (star[star[x]] != x) {
      bug("star map is not an involution");
    }
  }
  if (!idempotents_commute(carrier).ok) {
    bug("unique inverses but non-commuting idempotents");
  }
  // E(S) = {xx*} = {x*x}
  std::set<ElementId> from_xxs, from_sxx;
  for (ElementId x = 0; x < n; ++x) {
    from_xxs.insert(carrier.product(x, star[x]));
    from_sxx.insert(carrier.product(star[x], x));
  }
  auto idem = idempotents(carrier);
  if (std::set<ElementId>(idem.begin(), idem.end()) != from_xxs
      || from_xxs != from_sxx) {
    bug("idempotent set differs from {xx*}");
  }

  auto zero = find_zero(carrier);
  auto unit = find_unit(carrier);
  if (carrier.designated.zero && carrier.designated.zero != zero) {
    throw InvalidStructure("declared zero '"
                           + carrier.names[*carrier.designated.zero]
                           + "' is not absorbing");
  }
  if (carrier.designated.unit && carrier.designated.unit != unit) {
    throw InvalidStructure("declared unit '"
                           + carrier.names[*carrier.designated.unit]
                           + "' is not neutral");
  }
  carrier.designated = {zero, unit};

  FiniteInverseSemigroup s;
  s._carrier = std::move(carrier);
  s._star    = std::move(star);
  return s;
}

std::string fresh_zero_name(std::vector<std::string> const& taken) {
  std::string name = "0";
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) {
    name += '\'';
  }
  return name;
}

FiniteInverseSemigroup to_semigroup(FiniteGroupoid const& g) {
  ElementId   n    = static_cast<ElementId>(g.order());
  ElementId   zero = n;
  FiniteMagma m;
  m.names = g.carrier().names;
  m.names.push_back(fresh_zero_name(m.names));
  m.table.assign(static_cast<std::size_t>(n + 1) * (n + 1), zero);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (auto p = g.product(a, b)) {
        m.table[static_cast<std::size_t>(a) * (n + 1) + b] = *p;
      }
    }
  }

  auto s = FiniteInverseSemigroup::validated(std::move(m));

  // Everything below holds by construction; failures mean a bug upstream.
  if (s.zero() != std::optional<ElementId>(zero)) {
    bug("adjoined element is not the zero");
  }
  for (ElementId a = 0; a < n; ++a) {
    if (s.star(a) != g.inverse(a)) {
      bug("star differs from the groupoid inverse");
    }
  }
  if (s.star(zero) != zero) {
    bug("star does not fix the zero");
  }
  if (!nonzero_idempotents_orthogonal(s.carrier(), zero).ok) {
    bug("nonzero idempotents are not orthogonal");
  }
  // In the degenerate order-1 result the zero is also neutral, so the
  // unit-iff-single-unit law only applies to nonempty groupoids.
  bool expect_unit = g.units().size() == 1 || n == 0;
  if (s.unit().has_value() != expect_unit) {
    bug("unit exists iff the groupoid has exactly one unit");
  }
  return s;
}

FiniteGroupoid to_groupoid(FiniteInverseSemigroup const& s) {
  if (!s.zero()) {
    throw InvalidStructure("input has no zero element");
  }
  ElementId z = *s.zero();
  if (auto orth = nonzero_idempotents_orthogonal(s.carrier(), z); !orth.ok) {
    throw InvalidStructure(
        "nonzero idempotents are not mutually orthogonal (witness "
            + witness_names(s.carrier().names, *orth.witness) + ")",
        orth.witness);
  }

  ElementId              n = static_cast<ElementId>(s.order());
  std::vector<ElementId> to_new(n, UNDEFINED);
  FinitePartialMagma     m;
  for (ElementId x = 0; x < n; ++x) {
    if (x != z) {
      to_new[x] = static_cast<ElementId>(m.names.size());
      m.names.push_back(s.carrier().names[x]);
    }
  }
  ElementId k = static_cast<ElementId>(m.names.size());
  m.table.assign(static_cast<std::size_t>(k) * k, UNDEFINED);
  m.inverse.resize(k);
  for (ElementId x = 0; x < n; ++x) {
    if (x == z) {
      continue;
    }
    m.inverse[to_new[x]] = to_new[s.star(x)];
    for (ElementId y = 0; y < n; ++y) {
      if (y == z) {
        continue;
      }
      ElementId p = s.product(x, y);
      if (p != z) {
        m.table[static_cast<std::size_t>(to_new[x]) * k + to_new[y]] =
            to_new[p];
      }
    }
  }

  auto g = FiniteGroupoid::validated(std::move(m));

  // Composability must coincide with star(x)x = y star(y); the d = r form
  // is already covered by clause 4 of the axiom check.
  for (ElementId x = 0; x < n; ++x) {
    if (x == z) {
      continue;
    }
    for (ElementId y = 0; y < n; ++y) {
      if (y == z) {
        continue;
      }
      bool comp = g.composable(to_new[x], to_new[y]);
      bool idem_match =
          s.product(s.star(x), x) == s.product(y, s.star(y));
      if (comp != idem_match) {
        bug("composability differs from the x*x = yy* criterion");
      }
      if (comp) {
        // x*xy = y and xyy* = x for composable pairs
        if (s.product(s.product(s.star(x), x), y) != y
            || s.product(s.product(x, y), s.star(y)) != x) {
          bug("unit laws fail on a composable pair");
        }
      }
    }
  }
  return g;
}

RoundtripReport roundtrip_groupoid(FiniteGroupoid const& g) {
  auto back = to_groupoid(to_semigroup(g));

  auto const& a = g.carrier();
  auto const& b = back.carrier();
  if (a.names != b.names) {
    return {false, "element lists differ"};
  }
  if (a.table != b.table) {
    return {false, "partial tables differ"};
  }
  if (a.inverse != b.inverse) {
    return {false, "inverse maps differ"};
  }
  return {true, {}};
}

RoundtripReport roundtrip_semigroup(FiniteInverseSemigroup const& s) {
  auto g    = to_groupoid(s);  // throws when preconditions fail
  auto back = to_semigroup(g);

  ElementId n = static_cast<ElementId>(s.order());
  if (back.order() != s.order()) {
    return {false, "orders differ"};
  }
  ElementId z = *s.zero();

  // phi fixes the nonzero elements (in order) and sends zero to the fresh
  // last element of the reconstruction
  std::vector<ElementId> phi(n);
  ElementId              next = 0;
  for (ElementId x = 0; x < n; ++x) {
    phi[x] = (x == z) ? static_cast<ElementId>(n - 1) : next++;
  }

  for (ElementId x = 0; x < n; ++x) {
    if (x != z && s.carrier().names[x] != back.carrier().names[phi[x]]) {
      return {false, "nonzero element names differ"};
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (phi[s.product(x, y)] != back.product(phi[x], phi[y])) {
        std::ostringstream os;
        os << "products differ at (" << s.carrier().names[x] << ","
           << s.carrier().names[y] << ")";
        return {false, os.str()};
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    if (phi[s.star(x)] != back.star(phi[x])) {
      return {false, "star maps differ"};
    }
  }
  if (back.zero() != std::optional<ElementId>(phi[z])) {
    return {false, "zero positions differ"};
  }
  std::optional<ElementId> unit_image;
  if (s.unit()) {
    unit_image = phi[*s.unit()];
  }
  if (back.unit() != unit_image) {
    return {false, "units differ"};
  }
  return {true, {}};
}

}  // namespace isg
