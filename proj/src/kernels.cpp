#include "monoidlab/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monoidlab::kernels {

namespace {

inline std::uint32_t mul(const std::vector<std::uint32_t>& t, std::uint32_t n,
                         std::uint32_t x, std::uint32_t y) {
  return t[static_cast<std::size_t>(x) * n + y];
}

}  // namespace

std::optional<Triple> associativity_violation(const std::vector<std::uint32_t>& table,
                                              std::uint32_t size, Exec exec) {
  if (exec == Exec::serial) {
    for (std::uint32_t x = 0; x < size; ++x)
      for (std::uint32_t y = 0; y < size; ++y) {
        const std::uint32_t xy = mul(table, size, x, y);
        for (std::uint32_t z = 0; z < size; ++z)
          if (mul(table, size, xy, z) != mul(table, size, x, mul(table, size, y, z)))
            return Triple{x, y, z};
      }
    return std::nullopt;
  }

  std::atomic<bool> found{false};
  Triple witness{0, 0, 0};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(size); ++xi) {
    if (found.load(std::memory_order_relaxed)) continue;
    const auto x = static_cast<std::uint32_t>(xi);
    for (std::uint32_t y = 0; y < size; ++y) {
      const std::uint32_t xy = mul(table, size, x, y);
      for (std::uint32_t z = 0; z < size; ++z)
        if (mul(table, size, xy, z) != mul(table, size, x, mul(table, size, y, z))) {
          bool expected = false;
          if (found.compare_exchange_strong(expected, true)) witness = Triple{x, y, z};
          break;
        }
      if (found.load(std::memory_order_relaxed)) break;
    }
  }
  if (found.load()) return witness;
  return std::nullopt;
}

std::vector<ElementSet> right_multiple_sets(const std::vector<std::uint32_t>& table,
                                            std::uint32_t size, Exec exec) {
  std::vector<ElementSet> rows(size, ElementSet(size));
  auto fill = [&](std::uint32_t u) {
    for (std::uint32_t t = 0; t < size; ++t) rows[u].set(mul(table, size, u, t));
  };
  if (exec == Exec::serial) {
    for (std::uint32_t u = 0; u < size; ++u) fill(u);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(size); ++u)
      fill(static_cast<std::uint32_t>(u));
  }
  return rows;
}

std::vector<ElementSet> left_multiple_sets(const std::vector<std::uint32_t>& table,
                                           std::uint32_t size, Exec exec) {
  std::vector<ElementSet> rows(size, ElementSet(size));
  auto fill = [&](std::uint32_t u) {
    for (std::uint32_t t = 0; t < size; ++t) rows[u].set(mul(table, size, t, u));
  };
  if (exec == Exec::serial) {
    for (std::uint32_t u = 0; u < size; ++u) fill(u);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(size); ++u)
      fill(static_cast<std::uint32_t>(u));
  }
  return rows;
}

std::vector<ElementSet> two_sided_multiple_sets(const std::vector<std::uint32_t>& table,
                                                std::uint32_t size, Exec exec) {
  // HuH = union over s of (su)H; reuse the right-multiple rows.
  std::vector<ElementSet> right = right_multiple_sets(table, size, exec);
  std::vector<ElementSet> rows(size, ElementSet(size));
  auto fill = [&](std::uint32_t u) {
    for (std::uint32_t s = 0; s < size; ++s) rows[u] |= right[mul(table, size, s, u)];
  };
  if (exec == Exec::serial) {
    for (std::uint32_t u = 0; u < size; ++u) fill(u);
  } else {
#pragma omp parallel for schedule(static)
    for (std::int64_t u = 0; u < static_cast<std::int64_t>(size); ++u)
      fill(static_cast<std::uint32_t>(u));
  }
  return rows;
}

std::optional<Triple> acyclicity_violation(const std::vector<std::uint32_t>& table,
                                           std::uint32_t size, const ElementSet& units,
                                           Exec exec) {
  auto scan_u = [&](std::uint32_t u) -> std::optional<Triple> {
    for (std::uint32_t x = 0; x < size; ++x) {
      const std::uint32_t ux = mul(table, size, u, x);
      for (std::uint32_t v = 0; v < size; ++v) {
        if (units.test(u) && units.test(v)) continue;
        if (mul(table, size, ux, v) == x) return Triple{u, x, v};
      }
    }
    return std::nullopt;
  };

  if (exec == Exec::serial) {
    for (std::uint32_t u = 0; u < size; ++u)
      if (auto w = scan_u(u)) return w;
    return std::nullopt;
  }

  std::atomic<bool> found{false};
  Triple witness{0, 0, 0};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(size); ++ui) {
    if (found.load(std::memory_order_relaxed)) continue;
    if (auto w = scan_u(static_cast<std::uint32_t>(ui))) {
      bool expected = false;
      if (found.compare_exchange_strong(expected, true)) witness = *w;
    }
  }
  if (found.load()) return witness;
  return std::nullopt;
}

std::vector<std::vector<std::uint32_t>> dickson_minimal(
    const std::vector<std::vector<std::uint32_t>>& vectors, Exec exec) {
  if (vectors.empty()) throw std::invalid_argument("dickson_minimal: empty input");
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != dim) throw std::invalid_argument("dickson_minimal: ragged dimensions");

  // Sort by component sum: a vector can only be dominated by one of strictly
  // smaller sum, and equal-sum distinct vectors are incomparable.
  std::vector<std::vector<std::uint32_t>> sorted = vectors;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto sum_of = [](const std::vector<std::uint32_t>& v) {
    std::uint64_t s = 0;
    for (auto c : v) s += c;
    return s;
  };
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto& a, const auto& b) { return sum_of(a) < sum_of(b); });

  auto leq = [dim](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    for (std::size_t t = 0; t < dim; ++t)
      if (a[t] > b[t]) return false;
    return true;
  };

  std::vector<std::vector<std::uint32_t>> minima;
  std::size_t i = 0;
  while (i < sorted.size()) {
    // One grade at a time: candidates of equal sum never dominate each other.
    std::size_t j = i;
    const std::uint64_t g = sum_of(sorted[i]);
    while (j < sorted.size() && sum_of(sorted[j]) == g) ++j;

    const std::size_t batch = j - i;
    std::vector<char> keep(batch, 1);
    auto filter_one = [&](std::size_t k) {
      for (const auto& m : minima)
        if (leq(m, sorted[i + k])) {
          keep[k] = 0;
          return;
        }
    };
    if (exec == Exec::serial || batch < 2) {
      for (std::size_t k = 0; k < batch; ++k) filter_one(k);
    } else {
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t k = 0; k < static_cast<std::int64_t>(batch); ++k)
        filter_one(static_cast<std::size_t>(k));
    }
    for (std::size_t k = 0; k < batch; ++k)
      if (keep[k]) minima.push_back(sorted[i + k]);
    i = j;
  }
  std::sort(minima.begin(), minima.end());
  return minima;
}

}  // namespace monoidlab::kernels
