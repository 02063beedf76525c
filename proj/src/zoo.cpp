#include "isg/zoo.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "isg/axioms.hpp"

namespace isg {

FiniteGroupoid cyclic_group(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("cyclic group order must be positive");
  }
  if (n > MAX_ORDER) {
    throw std::invalid_argument("cyclic group order exceeds cap");
  }
  FinitePartialMagma m;
  for (unsigned i = 0; i < n; ++i) {
    m.names.push_back("g" + std::to_string(i));
  }
  m.table.resize(static_cast<std::size_t>(n) * n);
  m.inverse.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    m.inverse[i] = (n - i) % n;
    for (unsigned j = 0; j < n; ++j) {
      m.table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    }
  }
  return FiniteGroupoid::validated(std::move(m));
}

FiniteGroupoid pair_groupoid(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("pair groupoid base must be positive");
  }
  if (static_cast<std::size_t>(n) * n > MAX_ORDER) {
    throw std::invalid_argument("pair groupoid order exceeds cap");
  }
  FinitePartialMagma m;
  auto id = [n](unsigned i, unsigned j) {
    return static_cast<ElementId>((i - 1) * n + (j - 1));
  };
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      m.names.push_back(std::to_string(i) + ":" + std::to_string(j));
    }
  }
  std::size_t total = static_cast<std::size_t>(n) * n;
  m.table.assign(total * total, UNDEFINED);
  m.inverse.resize(total);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      m.inverse[id(i, j)] = id(j, i);
      for (unsigned l = 1; l <= n; ++l) {
        // (i:j).(j:l) = i:l
        m.table[static_cast<std::size_t>(id(i, j)) * total + id(j, l)] =
            id(i, l);
      }
    }
  }
  return FiniteGroupoid::validated(std::move(m));
}

namespace {

// partial injection on {1..n}: img[i] = 0 when i+1 is outside the domain,
// otherwise the (1-based) image of i+1
using PartialInjection = std::vector<int>;

PartialInjection compose(PartialInjection const& f, PartialInjection const& g) {
  PartialInjection out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0 && f[g[i] - 1] != 0) {
      out[i] = f[g[i] - 1];
    }
  }
  return out;
}

std::string injection_name(PartialInjection const& p) {
  std::string name;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      if (!name.empty()) {
        name += ';';
      }
      name += std::to_string(i + 1) + ">" + std::to_string(p[i]);
    }
  }
  return name.empty() ? "0" : name;
}

// all injections in canonical order: by domain size, then domain
// lexicographic, then image tuple lexicographic
void enumerate_injections(unsigned n, std::vector<PartialInjection>& out) {
  std::vector<unsigned> domain;
  std::vector<int>      image;
  std::vector<bool>     used(n + 1, false);
  PartialInjection      current(n, 0);

  std::function<void()> fill_images = [&]() {
    if (image.size() == domain.size()) {
      for (std::size_t t = 0; t < domain.size(); ++t) {
        current[domain[t] - 1] = image[t];
      }
      out.push_back(current);
      for (unsigned d : domain) {
        current[d - 1] = 0;
      }
      return;
    }
    for (unsigned v = 1; v <= n; ++v) {
      if (!used[v]) {
        used[v] = true;
        image.push_back(static_cast<int>(v));
        fill_images();
        image.pop_back();
        used[v] = false;
      }
    }
  };
  std::function<void(unsigned, unsigned)> fill_domain =
      [&](unsigned k, unsigned from) {
        if (domain.size() == k) {
          fill_images();
          return;
        }
        for (unsigned d = from; d <= n; ++d) {
          domain.push_back(d);
          fill_domain(k, d + 1);
          domain.pop_back();
        }
      };
  for (unsigned k = 0; k <= n; ++k) {
    fill_domain(k, 1);
  }
}

}  // namespace

FiniteInverseSemigroup symmetric_inverse_monoid(unsigned n) {
  if (n < 1 || n > 4) {
    throw std::invalid_argument(
        "symmetric inverse monoid supported for 1 <= n <= 4");
  }
  std::vector<PartialInjection> elems;
  enumerate_injections(n, elems);

  std::map<PartialInjection, ElementId> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i]] = static_cast<ElementId>(i);
  }

  FiniteMagma m;
  std::size_t order = elems.size();
  for (auto const& p : elems) {
    m.names.push_back(injection_name(p));
  }
  m.table.resize(order * order);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) {
      m.table[i * order + j] = index.at(compose(elems[i], elems[j]));
    }
  }
  return FiniteInverseSemigroup::validated(std::move(m));
}

FiniteGroupoid disjoint_union(std::vector<FiniteGroupoid> const& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("disjoint union of zero parts");
  }
  std::size_t total = 0;
  for (auto const& p : parts) {
    total += p.order();
  }
  if (total > MAX_ORDER) {
    throw std::invalid_argument("disjoint union order exceeds cap");
  }

  FinitePartialMagma m;
  m.table.assign(total * total, UNDEFINED);
  m.inverse.resize(total);
  std::size_t offset = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    auto const& part = parts[k].carrier();
    std::size_t n    = part.order();
    for (std::size_t i = 0; i < n; ++i) {
      m.names.push_back(std::to_string(k) + "." + part.names[i]);
      m.inverse[offset + i] =
          static_cast<ElementId>(offset + part.inverse[i]);
      for (std::size_t j = 0; j < n; ++j) {
        ElementId p = part.table[i * n + j];
        if (p != UNDEFINED) {
          m.table[(offset + i) * total + (offset + j)] =
              static_cast<ElementId>(offset + p);
        }
      }
    }
    offset += n;
  }
  return FiniteGroupoid::validated(std::move(m));
}

namespace {

using Code = std::uint64_t;

Code pow_u64(Code base, unsigned exp) {
  Code r = 1;
  while (exp-- > 0) {
    r *= base;
  }
  return r;
}

// cell 0 (row 0, column 0) is the most significant digit, so ascending
// codes are ascending lexicographic tables
void decode(Code code, unsigned n, std::uint8_t* t) {
  unsigned cells = n * n;
  for (unsigned i = cells; i-- > 0;) {
    t[i] = static_cast<std::uint8_t>(code % n);
    code /= n;
  }
}

bool associative_raw(std::uint8_t const* t, unsigned n) {
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      unsigned ab = t[a * n + b];
      for (unsigned c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          return false;
        }
      }
    }
  }
  return true;
}

// checks every triple whose four lookups are already assigned (cells are
// filled row-major, so cell < filled means assigned)
bool partially_associative(std::uint8_t const* t, unsigned n,
                           unsigned filled) {
  auto get = [&](unsigned cell) -> int {
    return cell < filled ? t[cell] : -1;
  };
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      int ab = get(a * n + b);
      for (unsigned c = 0; c < n; ++c) {
        int bc = get(b * n + c);
        if (ab < 0 || bc < 0) {
          continue;
        }
        int left  = get(static_cast<unsigned>(ab) * n + c);
        int right = get(a * n + static_cast<unsigned>(bc));
        if (left >= 0 && right >= 0 && left != right) {
          return false;
        }
      }
    }
  }
  return true;
}

void backtrack_cells(std::uint8_t* t, unsigned n, unsigned cell,
                     std::vector<Code>& out) {
  unsigned cells = n * n;
  if (cell == cells) {
    Code code = 0;
    for (unsigned i = 0; i < cells; ++i) {
      code = code * n + t[i];
    }
    out.push_back(code);
    return;
  }
  for (unsigned v = 0; v < n; ++v) {
    t[cell] = static_cast<std::uint8_t>(v);
    if (partially_associative(t, n, cell + 1)) {
      backtrack_cells(t, n, cell + 1, out);
    }
  }
}

FiniteMagma magma_from_code(Code code, unsigned n) {
  static std::vector<std::string> const kNames = {"a", "b", "c", "d"};
  FiniteMagma                           m;
  m.names.assign(kNames.begin(), kNames.begin() + n);
  std::uint8_t t[16];
  decode(code, n, t);
  m.table.resize(static_cast<std::size_t>(n) * n);
  for (unsigned i = 0; i < n * n; ++i) {
    m.table[i] = t[i];
  }
  return m;
}

bool passes_filter(FiniteMagma const& m, SemigroupFilter filter) {
  switch (filter) {
    case SemigroupFilter::All:
      return true;
    case SemigroupFilter::Regular:
      return is_regular(m).ok;
    case SemigroupFilter::Inverse:
      return has_unique_inverses(m).ok;
    case SemigroupFilter::InverseWithZeroOrthogonal: {
      if (!has_unique_inverses(m).ok) {
        return false;
      }
      auto zero = find_zero(m);
      return zero && nonzero_idempotents_orthogonal(m, *zero).ok;
    }
  }
  return false;
}

// all associative table codes of the given order, ascending
std::vector<Code> associative_codes(unsigned n, EnumerationMode mode,
                                    unsigned workers) {
  if (workers == 0) {
    workers = 1;
  }
  std::vector<Code> codes;
  if (mode == EnumerationMode::Exhaustive) {
    Code total = pow_u64(n, n * n);
    std::vector<std::vector<Code>> buckets(workers);
    std::vector<std::thread>       pool;
    Code chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w]() {
        Code lo = static_cast<Code>(w) * chunk;
        Code hi = std::min(total, lo + chunk);
        std::uint8_t t[16];
        for (Code code = lo; code < hi; ++code) {
          decode(code, n, t);
          if (associative_raw(t, n)) {
            buckets[w].push_back(code);
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (auto const& b : buckets) {
      codes.insert(codes.end(), b.begin(), b.end());
    }
  } else {
    // one DFS per first row; prefix order keeps the merged stream sorted
    Code prefixes = pow_u64(n, n);
    std::vector<std::vector<Code>> per_prefix(prefixes);
    std::atomic<Code>              next{0};
    std::vector<std::thread>       pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        std::uint8_t t[16];
        for (;;) {
          Code p = next.fetch_add(1);
          if (p >= prefixes) {
            return;
          }
          Code rest = p;
          for (unsigned i = n; i-- > 0;) {
            t[i] = static_cast<std::uint8_t>(rest % n);
            rest /= n;
          }
          if (partially_associative(t, n, n)) {
            backtrack_cells(t, n, n, per_prefix[p]);
          }
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (auto const& b : per_prefix) {
      codes.insert(codes.end(), b.begin(), b.end());
    }
  }
  return codes;
}

}  // namespace

void enumerate_semigroups(unsigned order, SemigroupFilter filter,
                          EnumerationMode mode, unsigned workers,
                          std::function<void(FiniteMagma const&)> const& visit) {
  if (order < 1 || order > 4) {
    throw std::invalid_argument("enumeration order out of supported range");
  }
  if (mode == EnumerationMode::Exhaustive && order > 3) {
    throw std::invalid_argument(
        "exhaustive enumeration supports order <= 3; use backtracking");
  }
  for (Code code : associative_codes(order, mode, workers)) {
    FiniteMagma m = magma_from_code(code, order);
    if (passes_filter(m, filter)) {
      visit(m);
    }
  }
}

std::vector<FiniteMagma> enumerate_semigroups(unsigned order,
                                              SemigroupFilter filter,
                                              EnumerationMode mode,
                                              unsigned        workers) {
  std::vector<FiniteMagma> out;
  enumerate_semigroups(order, filter, mode, workers,
                       [&](FiniteMagma const& m) { out.push_back(m); });
  return out;
}

}  // namespace isg
