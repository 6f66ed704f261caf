#include "monoidlab/monoid.hpp"

#include <stdexcept>
#include <string>

namespace monoidlab {

namespace {

std::vector<std::string> default_labels(std::uint32_t size) {
  std::vector<std::string> labels(size);
  for (std::uint32_t i = 0; i < size; ++i) labels[i] = std::to_string(i);
  return labels;
}

bool table_is_commutative(const std::vector<Element>& flat, std::uint32_t n) {
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x + 1; y < n; ++y)
      if (flat[std::size_t{x} * n + y] != flat[std::size_t{y} * n + x]) return false;
  return true;
}

}  // namespace

FiniteMonoid FiniteMonoid::from_flat_table(std::vector<Element> flat, std::uint32_t size,
                                           Element identity, std::vector<std::string> labels,
                                           std::uint32_t max_size) {
  if (size == 0) throw std::invalid_argument("monoid: size must be positive");
  if (size > max_size)
    throw std::invalid_argument("monoid: size " + std::to_string(size) +
                                " exceeds the cap of " + std::to_string(max_size));
  if (flat.size() != std::size_t{size} * size)
    throw std::invalid_argument("monoid: table is not size x size");
  for (auto e : flat)
    if (e >= size) throw std::invalid_argument("monoid: table entry out of range");
  if (identity >= size) throw std::invalid_argument("monoid: identity index out of range");

  for (std::uint32_t x = 0; x < size; ++x) {
    if (flat[std::size_t{identity} * size + x] != x ||
        flat[std::size_t{x} * size + identity] != x)
      throw std::invalid_argument("monoid: identity law violated at element " +
                                  std::to_string(x));
  }
  if (auto viol = kernels::associativity_violation(flat, size, kernels::kDefaultExec))
    throw std::invalid_argument("monoid: associativity fails at (" + std::to_string(viol->x) +
                                "," + std::to_string(viol->y) + "," + std::to_string(viol->z) +
                                ")");

  if (labels.empty()) labels = default_labels(size);
  if (labels.size() != size)
    throw std::invalid_argument("monoid: label count does not match size");

  FiniteMonoid M;
  M.size_ = size;
  M.table_ = std::move(flat);
  M.identity_ = identity;
  M.labels_ = std::move(labels);
  M.commutative_ = table_is_commutative(M.table_, size);
  return M;
}

FiniteMonoid FiniteMonoid::from_cayley_table(std::vector<std::vector<Element>> table,
                                             Element identity, std::vector<std::string> labels,
                                             std::uint32_t max_size) {
  const auto size = static_cast<std::uint32_t>(table.size());
  std::vector<Element> flat;
  flat.reserve(std::size_t{size} * size);
  for (const auto& row : table) {
    if (row.size() != size) throw std::invalid_argument("monoid: ragged table");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_flat_table(std::move(flat), size, identity, std::move(labels), max_size);
}

FiniteMonoid mul_mod(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("mul_mod: modulus must be >= 2");
  std::vector<Element> flat(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      flat[std::size_t{x} * n + y] = static_cast<Element>((std::uint64_t{x} * y) % n);
  return FiniteMonoid::from_flat_table(std::move(flat), n, 1);
}

FiniteMonoid reduced_power_monoid(std::uint32_t n, std::uint32_t max_size) {
  if (n < 2) throw std::invalid_argument("reduced_power_monoid: modulus must be >= 2");
  if (n >= 32 || (std::uint64_t{1} << (n - 1)) > max_size)
    throw std::invalid_argument(
        "reduced_power_monoid: 2^(n-1) elements exceed the size cap");
  const std::uint32_t size = 1u << (n - 1);
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);

  // Element i <-> subset mask (i << 1) | 1 (residue 0 always present).
  auto mask_of = [&](std::uint32_t i) { return (i << 1) | 1u; };
  auto rotate = [&](std::uint32_t m, std::uint32_t j) {
    return ((m << j) | (m >> (n - j))) & full;  // j in [1, n-1]
  };

  std::vector<Element> flat(std::size_t{size} * size);
  for (std::uint32_t i = 0; i < size; ++i) {
    const std::uint32_t mi = mask_of(i);
    for (std::uint32_t j = 0; j < size; ++j) {
      const std::uint32_t mj = mask_of(j);
      std::uint32_t sum = 0;
      for (std::uint32_t r = 0; r < n; ++r)
        if (mj & (1u << r)) sum |= (r == 0) ? mi : rotate(mi, r);
      flat[std::size_t{i} * size + j] = sum >> 1;
    }
  }

  std::vector<std::string> labels(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    std::string s = "{0";
    for (std::uint32_t r = 1; r < n; ++r)
      if (mask_of(i) & (1u << r)) s += "," + std::to_string(r);
    s += "}";
    labels[i] = std::move(s);
  }
  return FiniteMonoid::from_flat_table(std::move(flat), size, 0, std::move(labels), max_size);
}

FiniteMonoid trivial_monoid() {
  return FiniteMonoid::from_flat_table({0}, 1, 0, {"e"});
}

Element evaluate(const FiniteMonoid& M, const Word& w) {
  Element acc = M.identity();
  for (auto l : w.letters) {
    if (l >= M.size())
      throw std::invalid_argument("evaluate: letter out of range for the monoid");
    acc = M.mul(acc, l);
  }
  return acc;
}

ElementSet units(const FiniteMonoid& M) {
  ElementSet u(M.size());
  for (Element x = 0; x < M.size(); ++x)
    for (Element y = 0; y < M.size(); ++y)
      if (M.mul(x, y) == M.identity() && M.mul(y, x) == M.identity()) {
        u.set(x);
        break;
      }
  return u;
}

ElementSet submonoid_generated(const FiniteMonoid& M, const ElementSet& A) {
  ElementSet closure(M.size());
  closure.set(M.identity());
  std::vector<Element> queue{M.identity()};
  A.for_each([&](Element a) {
    if (!closure.test(a)) {
      closure.set(a);
      queue.push_back(a);
    }
  });
  const auto gens = A.to_vector();
  // Fixed-point closure under right multiplication by generators; the set
  // contains the identity, so left products are covered too.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      Element p = M.mul(queue[i], g);
      if (!closure.test(p)) {
        closure.set(p);
        queue.push_back(p);
      }
      p = M.mul(g, queue[i]);
      if (!closure.test(p)) {
        closure.set(p);
        queue.push_back(p);
      }
    }
  }
  return closure;
}

ElementSet atoms(const FiniteMonoid& M) {
  const ElementSet u = units(M);
  ElementSet result(M.size());
  for (Element a = 0; a < M.size(); ++a) {
    if (u.test(a)) continue;
    bool product_of_non_units = false;
    for (Element x = 0; x < M.size() && !product_of_non_units; ++x) {
      if (u.test(x)) continue;
      for (Element y = 0; y < M.size(); ++y) {
        if (u.test(y)) continue;
        if (M.mul(x, y) == a) {
          product_of_non_units = true;
          break;
        }
      }
    }
    if (!product_of_non_units) result.set(a);
  }
  return result;
}

bool is_acyclic(const FiniteMonoid& M, kernels::Exec exec) {
  return !kernels::acyclicity_violation(M.flat_table(), M.size(), units(M), exec).has_value();
}

bool is_unit_cancellative(const FiniteMonoid& M) {
  const ElementSet u = units(M);
  for (Element y = 0; y < M.size(); ++y) {
    if (u.test(y)) continue;
    for (Element x = 0; x < M.size(); ++x)
      if (M.mul(y, x) == x || M.mul(x, y) == x) return false;
  }
  return true;
}

}  // namespace monoidlab
