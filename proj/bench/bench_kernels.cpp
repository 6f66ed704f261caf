// bench_kernels -- timing comparison of the serial reference kernels against
// the OpenMP-parallel ones on Cayley tables and vector sets

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "monoidlab/corpus.hpp"
#include "monoidlab/kernels.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/premon.hpp"

using namespace monoidlab;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double time_ms(F&& fn) {
  const auto t0 = Clock::now();
  fn();
  return ms_since(t0);
}

void report(const char* name, std::uint32_t n, double serial_ms, double parallel_ms,
            bool match) {
  std::printf("%-24s n=%-7u serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
              name, n, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "match" : "MISMATCH");
}

}  // namespace

int main() {
  int failures = 0;

  for (std::uint32_t n : {128u, 256u, 509u}) {
    const FiniteMonoid M = mul_mod(n);
    const auto& table = M.flat_table();

    std::optional<kernels::Triple> vs, vp;
    const double ts = time_ms(
        [&] { vs = kernels::associativity_violation(table, n, kernels::Exec::serial); });
    const double tp = time_ms(
        [&] { vp = kernels::associativity_violation(table, n, kernels::Exec::parallel); });
    const bool ok = !vs.has_value() && !vp.has_value();
    report("associativity", n, ts, tp, ok);
    if (!ok) ++failures;
  }

  for (std::uint32_t n : {128u, 256u, 509u}) {
    const FiniteMonoid M = mul_mod(n);
    const auto& table = M.flat_table();
    std::vector<ElementSet> rs, rp;
    const double ts = time_ms(
        [&] { rs = kernels::two_sided_multiple_sets(table, n, kernels::Exec::serial); });
    const double tp = time_ms(
        [&] { rp = kernels::two_sided_multiple_sets(table, n, kernels::Exec::parallel); });
    const bool ok = rs == rp;
    report("divisibility-matrix", n, ts, tp, ok);
    if (!ok) ++failures;
  }

  {
    corpus::Rng rng(7);
    const std::uint32_t count = 60000, dim = 6;
    std::vector<std::vector<std::uint32_t>> vecs(count, std::vector<std::uint32_t>(dim));
    for (auto& v : vecs)
      for (auto& c : v) c = rng.below(40);
    std::vector<std::vector<std::uint32_t>> ms, mp;
    const double ts =
        time_ms([&] { ms = kernels::dickson_minimal(vecs, kernels::Exec::serial); });
    const double tp =
        time_ms([&] { mp = kernels::dickson_minimal(vecs, kernels::Exec::parallel); });
    const bool ok = ms == mp;
    report("dickson-antichain", count, ts, tp, ok);
    if (!ok) ++failures;
  }

  {
    // Only groups are acyclic among finite monoids, so a cyclic group is the
    // case where the scan runs to completion instead of stopping at a witness.
    const std::uint32_t n = 509;
    std::vector<Element> flat(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = (x + y) % n;
    const FiniteMonoid M = FiniteMonoid::from_flat_table(std::move(flat), n, 0);
    const ElementSet u = units(M);
    std::optional<kernels::Triple> ws, wp;
    const double ts = time_ms([&] {
      ws = kernels::acyclicity_violation(M.flat_table(), n, u, kernels::Exec::serial);
    });
    const double tp = time_ms([&] {
      wp = kernels::acyclicity_violation(M.flat_table(), n, u, kernels::Exec::parallel);
    });
    const bool ok = !ws.has_value() && !wp.has_value();
    report("acyclicity-scan", n, ts, tp, ok);
    if (!ok) ++failures;
  }

  return failures == 0 ? 0 : 1;
}
