#include "isg/axioms.hpp"

#include <algorithm>
#include <cassert>

namespace isg {

CheckResult is_associative(FiniteMagma const& m) {
  ElementId n = static_cast<ElementId>(m.order());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      ElementId ab = m.product(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (m.product(ab, c) != m.product(a, m.product(b, c))) {
          return {false,
                  Witness{WitnessKind::NonAssociativeTriple, {a, b, c}}};
        }
      }
    }
  }
  return {};
}

std::vector<ElementId> inverses_of(FiniteMagma const& m, ElementId x) {
  ElementId              n = static_cast<ElementId>(m.order());
  std::vector<ElementId> out;
  for (ElementId y = 0; y < n; ++y) {
    if (m.product(m.product(x, y), x) == x
        && m.product(m.product(y, x), y) == y) {
      out.push_back(y);
    }
  }
  return out;
}

CheckResult is_regular(FiniteMagma const& m) {
  ElementId n = static_cast<ElementId>(m.order());
  for (ElementId x = 0; x < n; ++x) {
    if (inverses_of(m, x).empty()) {
      return {false, Witness{WitnessKind::NoInverse, {x}}};
    }
  }
  return {};
}

CheckResult has_unique_inverses(FiniteMagma const& m) {
  ElementId n = static_cast<ElementId>(m.order());
  for (ElementId x = 0; x < n; ++x) {
    auto inv = inverses_of(m, x);
    if (inv.empty()) {
      return {false, Witness{WitnessKind::NoInverse, {x}}};
    }
    if (inv.size() > 1) {
      return {false,
              Witness{WitnessKind::MultipleInverses, {x, inv[0], inv[1]}}};
    }
  }
  return {};
}

std::vector<ElementId> idempotents(FiniteMagma const& m) {
  ElementId              n = static_cast<ElementId>(m.order());
  std::vector<ElementId> out;
  for (ElementId e = 0; e < n; ++e) {
    if (m.product(e, e) == e) {
      out.push_back(e);
    }
  }
  return out;
}

CheckResult idempotents_commute(FiniteMagma const& m) {
  auto idem = idempotents(m);
  for (ElementId e : idem) {
    for (ElementId f : idem) {
      if (e != f && m.product(e, f) != m.product(f, e)) {
        return {false, Witness{WitnessKind::NonCommutingIdempotents, {e, f}}};
      }
    }
  }
  return {};
}

VagnerReport check_vagner(FiniteMagma const& m) {
  if (auto assoc = is_associative(m); !assoc.ok) {
    throw InvalidStructure("check_vagner requires an associative table",
                           assoc.witness);
  }
  if (auto reg = is_regular(m); !reg.ok) {
    throw InvalidStructure("check_vagner requires a regular semigroup",
                           reg.witness);
  }
  return {has_unique_inverses(m).ok, idempotents_commute(m).ok};
}

std::optional<ElementId> find_zero(FiniteMagma const& m) {
  ElementId                n = static_cast<ElementId>(m.order());
  std::optional<ElementId> found;
  for (ElementId z = 0; z < n; ++z) {
    bool absorbing = true;
    for (ElementId x = 0; x < n && absorbing; ++x) {
      absorbing = m.product(z, x) == z && m.product(x, z) == z;
    }
    if (absorbing) {
      assert(!found);  // two absorbing elements would equal each other
      found = z;
    }
  }
  return found;
}

std::optional<ElementId> find_unit(FiniteMagma const& m) {
  ElementId                n = static_cast<ElementId>(m.order());
  std::optional<ElementId> found;
  for (ElementId u = 0; u < n; ++u) {
    bool neutral = true;
    for (ElementId x = 0; x < n && neutral; ++x) {
      neutral = m.product(u, x) == x && m.product(x, u) == x;
    }
    if (neutral) {
      assert(!found);
      found = u;
    }
  }
  return found;
}

CheckResult nonzero_idempotents_orthogonal(FiniteMagma const& m,
                                           ElementId          zero) {
  auto idem = idempotents(m);
  for (ElementId e : idem) {
    if (e == zero) {
      continue;
    }
    for (ElementId f : idem) {
      if (f == zero || e == f) {
        continue;
      }
      if (m.product(e, f) != zero || m.product(f, e) != zero) {
        return {false, Witness{WitnessKind::NonOrthogonalIdempotents, {e, f}}};
      }
    }
  }
  return {};
}

GroupoidReport check_groupoid_axioms(FinitePartialMagma const& g) {
  ElementId      n = static_cast<ElementId>(g.order());
  GroupoidReport report;

  // clause 1
  report.associativity.value = Flag::True;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!g.composable(a, b)) {
        continue;
      }
      ElementId ab = *g.product(a, b);
      for (ElementId c = 0; c < n; ++c) {
        if (!g.composable(b, c)) {
          continue;
        }
        ElementId bc = *g.product(b, c);
        if (!g.composable(ab, c) || !g.composable(a, bc)
            || *g.product(ab, c) != *g.product(a, bc)) {
          report.associativity = {
              Flag::False,
              Witness{WitnessKind::GroupoidAxiomViolation, {a, b, c}, 1}};
          goto clause2;
        }
      }
    }
  }
clause2:
  report.inverses_composable.value = Flag::True;
  for (ElementId b = 0; b < n; ++b) {
    if (!g.composable(b, g.inverse[b])) {
      report.inverses_composable = {
          Flag::False, Witness{WitnessKind::GroupoidAxiomViolation, {b}, 2}};
      break;
    }
  }

  // clause 3
  report.cancellation.value = Flag::True;
  for (ElementId a = 0; a < n && report.cancellation.value == Flag::True;
       ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!g.composable(a, b)) {
        continue;
      }
      ElementId ab   = *g.product(a, b);
      auto      left = g.product(g.inverse[a], ab);
      auto      right = g.product(ab, g.inverse[b]);
      if (left != std::optional<ElementId>(b)
          || right != std::optional<ElementId>(a)) {
        report.cancellation = {
            Flag::False,
            Witness{WitnessKind::GroupoidAxiomViolation, {a, b}, 3}};
        break;
      }
    }
  }

  // clause 4, evaluated on every pair whose d and r are defined; pairs
  // broken by a clause-2 failure are already reported there
  std::vector<std::optional<ElementId>> d(n), r(n);
  for (ElementId x = 0; x < n; ++x) {
    d[x] = g.product(g.inverse[x], x);
    r[x] = g.product(x, g.inverse[x]);
  }
  report.composability_criterion.value = Flag::True;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (d[x] && r[y] && g.composable(x, y) != (*d[x] == *r[y])) {
        report.composability_criterion = {
            Flag::False, Witness{WitnessKind::ComposabilityMismatch, {x, y}, 4}};
        return report;
      }
    }
  }
  return report;
}

std::optional<Witness> GroupoidReport::first_witness() const {
  for (auto const* f : {&associativity, &inverses_composable, &cancellation,
                        &composability_criterion}) {
    if (f->witness) {
      return f->witness;
    }
  }
  return std::nullopt;
}

Classification classify(FiniteMagma const& m) {
  Classification cls;
  auto           assoc = is_associative(m);
  cls.is_associative   = {assoc.ok ? Flag::True : Flag::False, assoc.witness};
  if (!assoc.ok) {
    return cls;  // downstream flags stay NotApplicable
  }

  auto to_flag = [](CheckResult const& c) {
    return FlagResult{c.ok ? Flag::True : Flag::False, c.witness};
  };
  cls.is_regular          = to_flag(is_regular(m));
  cls.has_unique_inverses = to_flag(has_unique_inverses(m));
  cls.idempotents_commute = to_flag(idempotents_commute(m));

  cls.zero           = find_zero(m);
  cls.unit           = find_unit(m);
  cls.has_zero.value = cls.zero ? Flag::True : Flag::False;
  cls.has_unit.value = cls.unit ? Flag::True : Flag::False;

  if (cls.zero) {
    cls.nonzero_idempotents_orthogonal =
        to_flag(nonzero_idempotents_orthogonal(m, *cls.zero));
  }

  if (m.designated.zero) {
    cls.declared_zero_valid = (cls.zero == m.designated.zero);
  }
  if (m.designated.unit) {
    cls.declared_unit_valid = (cls.unit == m.designated.unit);
  }
  return cls;
}

bool witness_refails(FiniteMagma const& m, Witness const& w) {
  auto const& e = w.elements;
  switch (w.kind) {
    case WitnessKind::NonAssociativeTriple:
      return e.size() == 3
             && m.product(m.product(e[0], e[1]), e[2])
                    != m.product(e[0], m.product(e[1], e[2]));
    case WitnessKind::NoInverse:
      return e.size() == 1 && inverses_of(m, e[0]).empty();
    case WitnessKind::MultipleInverses: {
      if (e.size() != 3 || e[1] == e[2]) {
        return false;
      }
      auto inv = inverses_of(m, e[0]);
      return std::find(inv.begin(), inv.end(), e[1]) != inv.end()
             && std::find(inv.begin(), inv.end(), e[2]) != inv.end();
    }
    case WitnessKind::NonCommutingIdempotents:
      return e.size() == 2 && m.product(e[0], e[0]) == e[0]
             && m.product(e[1], e[1]) == e[1]
             && m.product(e[0], e[1]) != m.product(e[1], e[0]);
    case WitnessKind::NonOrthogonalIdempotents: {
      auto zero = find_zero(m);
      return zero && e.size() == 2 && e[0] != e[1]
             && m.product(e[0], e[0]) == e[0]
             && m.product(e[1], e[1]) == e[1]
             && (m.product(e[0], e[1]) != *zero
                 || m.product(e[1], e[0]) != *zero);
    }
    default:
      return false;  // groupoid clauses do not apply to total tables
  }
}

bool witness_refails(FinitePartialMagma const& g, Witness const& w) {
  auto const& e = w.elements;
  switch (w.kind) {
    case WitnessKind::GroupoidAxiomViolation:
      switch (w.clause) {
        case 1: {
          if (e.size() != 3 || !g.composable(e[0], e[1])
              || !g.composable(e[1], e[2])) {
            return false;
          }
          ElementId ab = *g.product(e[0], e[1]);
          ElementId bc = *g.product(e[1], e[2]);
          return !g.composable(ab, e[2]) || !g.composable(e[0], bc)
                 || *g.product(ab, e[2]) != *g.product(e[0], bc);
        }
        case 2:
          return e.size() == 1 && !g.composable(e[0], g.inverse[e[0]]);
        case 3: {
          if (e.size() != 2 || !g.composable(e[0], e[1])) {
            return false;
          }
          ElementId ab = *g.product(e[0], e[1]);
          return g.product(g.inverse[e[0]], ab)
                     != std::optional<ElementId>(e[1])
                 || g.product(ab, g.inverse[e[1]])
                        != std::optional<ElementId>(e[0]);
        }
        default:
          return false;
      }
    case WitnessKind::ComposabilityMismatch: {
      if (e.size() != 2) {
        return false;
      }
      auto d = g.product(g.inverse[e[0]], e[0]);
      auto r = g.product(e[1], g.inverse[e[1]]);
      if (!d || !r) {
        return true;  // d/r undefined reproduces the breakage
      }
      return g.composable(e[0], e[1]) != (*d == *r);
    }
    default:
      return false;
  }
}

std::string witness_names(std::vector<std::string> const& names,
                          Witness const&                  w) {
  std::string out;
  for (std::size_t i = 0; i < w.elements.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += names[w.elements[i]];
  }
  return out;
}

}  // namespace isg
