#include "isg/algebra.hpp"

#include <stdexcept>

namespace isg {

CheckResult algebra_associative(StructureConstantAlgebra const& a) {
  ElementId n = static_cast<ElementId>(a.dim());
  auto mul = [&](std::optional<ElementId> x,
                 std::optional<ElementId> y) -> std::optional<ElementId> {
    if (!x || !y) {
      return std::nullopt;
    }
    return a.constant(*x, *y);
  };
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      auto ij = a.constant(i, j);
      for (ElementId k = 0; k < n; ++k) {
        if (mul(ij, k) != mul(i, a.constant(j, k))) {
          return {false,
                  Witness{WitnessKind::NonAssociativeTriple, {i, j, k}}};
        }
      }
    }
  }
  return {};
}

namespace {

void require_associative(StructureConstantAlgebra const& a) {
  if (!algebra_associative(a).ok) {
    throw std::logic_error(
        "internal inconsistency: non-associative structure constants");
  }
}

}  // namespace

StructureConstantAlgebra groupoid_algebra(FiniteGroupoid const& g) {
  StructureConstantAlgebra a;
  a.basis     = g.carrier().names;
  a.constants = g.carrier().table;
  require_associative(a);
  return a;
}

StructureConstantAlgebra contracted_semigroup_algebra(
    FiniteInverseSemigroup const& s) {
  if (!s.zero()) {
    throw InvalidStructure("contracted algebra requires a zero element");
  }
  ElementId z = *s.zero();
  ElementId n = static_cast<ElementId>(s.order());

  std::vector<ElementId>   to_new(n, UNDEFINED);
  StructureConstantAlgebra a;
  for (ElementId x = 0; x < n; ++x) {
    if (x != z) {
      to_new[x] = static_cast<ElementId>(a.basis.size());
      a.basis.push_back(s.carrier().names[x]);
    }
  }
  std::size_t k = a.basis.size();
  a.constants.assign(k * k, UNDEFINED);
  for (ElementId x = 0; x < n; ++x) {
    if (x == z) {
      continue;
    }
    for (ElementId y = 0; y < n; ++y) {
      if (y == z) {
        continue;
      }
      ElementId p = s.product(x, y);
      if (p != z) {
        a.constants[static_cast<std::size_t>(to_new[x]) * k + to_new[y]] =
            to_new[p];
      }
    }
  }
  require_associative(a);
  return a;
}

AlgebraComparison algebras_identical(StructureConstantAlgebra const& a,
                                     StructureConstantAlgebra const& b,
                                     std::vector<ElementId> const& bijection) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("algebra dimensions differ");
  }
  if (bijection.size() != a.dim()) {
    throw std::invalid_argument("bijection size does not match dimension");
  }
  std::vector<bool> hit(a.dim(), false);
  for (ElementId t : bijection) {
    if (t >= a.dim() || hit[t]) {
      throw std::invalid_argument("basis map is not a bijection");
    }
    hit[t] = true;
  }

  ElementId n = static_cast<ElementId>(a.dim());
  for (ElementId i = 0; i < n; ++i) {
    for (ElementId j = 0; j < n; ++j) {
      auto                     left = a.constant(i, j);
      std::optional<ElementId> mapped;
      if (left) {
        mapped = bijection[*left];
      }
      if (mapped != b.constant(bijection[i], bijection[j])) {
        return {false, std::make_pair(i, j)};
      }
    }
  }
  return {true, std::nullopt};
}

ZeroOneMatrix ZeroOneMatrix::transpose() const {
  ZeroOneMatrix t = zeros(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      t.at(j, i) = (*this)(i, j);
    }
  }
  return t;
}

bool ZeroOneMatrix::is_zero() const {
  for (auto e : entries) {
    if (e != 0) {
      return false;
    }
  }
  return true;
}

bool ZeroOneMatrix::is_partial_permutation() const {
  for (std::size_t i = 0; i < rows; ++i) {
    unsigned count = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      count += (*this)(i, j);
    }
    if (count > 1) {
      return false;
    }
  }
  for (std::size_t j = 0; j < cols; ++j) {
    unsigned count = 0;
    for (std::size_t i = 0; i < rows; ++i) {
      count += (*this)(i, j);
    }
    if (count > 1) {
      return false;
    }
  }
  return true;
}

bool multiply_equals(ZeroOneMatrix const& a, ZeroOneMatrix const& b,
                     ZeroOneMatrix const& expected) {
  if (a.cols != b.rows || expected.rows != a.rows
      || expected.cols != b.cols) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < b.cols; ++k) {
      unsigned sum = 0;
      for (std::size_t j = 0; j < a.cols; ++j) {
        sum += static_cast<unsigned>(a(i, j)) * b(j, k);
      }
      if (sum != expected(i, k)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<ZeroOneMatrix> regular_representation(FiniteGroupoid const& g) {
  std::size_t                n = g.order();
  std::vector<ZeroOneMatrix> pi(n, ZeroOneMatrix::zeros(n, n));
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (auto ab = g.product(a, b)) {
        pi[a].at(*ab, b) = 1;
      }
    }
  }
  return pi;
}

StarRepReport check_star_representation(FiniteInverseSemigroup const& s,
                                        std::vector<ZeroOneMatrix> const& pi) {
  ElementId n = static_cast<ElementId>(s.order());
  if (pi.size() != s.order()) {
    throw std::invalid_argument("representation must cover every element");
  }
  std::size_t dim = n > 0 ? pi[0].rows : 0;
  for (auto const& mat : pi) {
    if (mat.rows != dim || mat.cols != dim) {
      throw std::invalid_argument("matrix dimension mismatch");
    }
  }

  StarRepReport report;
  if (s.zero() && !pi[*s.zero()].is_zero()) {
    report.zero_image_ok = false;
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (!multiply_equals(pi[x], pi[y], pi[s.product(x, y)])) {
        report.product_violations.emplace_back(x, y);
      }
    }
  }
  for (ElementId x = 0; x < n; ++x) {
    if (pi[s.star(x)] != pi[x].transpose()) {
      report.star_violations.push_back(x);
    }
  }
  return report;
}

}  // namespace isg
