#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monoidlab/corpus.hpp"
#include "monoidlab/kernels.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/reference.hpp"

using namespace monoidlab;
using kernels::Exec;

TEST_CASE("parallel kernels match the serial reference") {
  corpus::Rng rng(5);

  SUBCASE("associativity and multiple sets on valid tables") {
    for (std::uint32_t n : {2u, 17u, 64u, 101u}) {
      const FiniteMonoid M = mul_mod(n);
      const auto& t = M.flat_table();
      CHECK_FALSE(kernels::associativity_violation(t, n, Exec::serial).has_value());
      CHECK_FALSE(kernels::associativity_violation(t, n, Exec::parallel).has_value());
      CHECK(kernels::right_multiple_sets(t, n, Exec::serial) ==
            kernels::right_multiple_sets(t, n, Exec::parallel));
      CHECK(kernels::left_multiple_sets(t, n, Exec::serial) ==
            kernels::left_multiple_sets(t, n, Exec::parallel));
      CHECK(kernels::two_sided_multiple_sets(t, n, Exec::serial) ==
            kernels::two_sided_multiple_sets(t, n, Exec::parallel));
      const ElementSet u = units(M);
      CHECK(kernels::acyclicity_violation(t, n, u, Exec::serial).has_value() ==
            kernels::acyclicity_violation(t, n, u, Exec::parallel).has_value());
    }
  }

  SUBCASE("mutated tables are flagged by both variants") {
    const FiniteMonoid M = mul_mod(32);
    for (int it = 0; it < 25; ++it) {
      auto t = M.flat_table();
      t[rng.below(static_cast<std::uint32_t>(t.size()))] = rng.below(32);
      const auto serial = kernels::associativity_violation(t, 32, Exec::serial);
      const auto parallel = kernels::associativity_violation(t, 32, Exec::parallel);
      CHECK(serial.has_value() == parallel.has_value());
      if (serial) {
        auto check_violation = [&](const kernels::Triple& v) {
          const auto mul = [&](Element a, Element b) { return t[std::size_t{a} * 32 + b]; };
          return mul(mul(v.x, v.y), v.z) != mul(v.x, mul(v.y, v.z));
        };
        CHECK(check_violation(*serial));
        CHECK(check_violation(*parallel));
      }
    }
  }

  SUBCASE("dickson") {
    for (int it = 0; it < 40; ++it) {
      const std::uint32_t dim = 2 + rng.below(5);
      std::vector<std::vector<std::uint32_t>> vecs(5 + rng.below(150),
                                                   std::vector<std::uint32_t>(dim));
      for (auto& v : vecs)
        for (auto& c : v) c = rng.below(10);
      const auto serial = kernels::dickson_minimal(vecs, Exec::serial);
      const auto parallel = kernels::dickson_minimal(vecs, Exec::parallel);
      const auto oracle = reference::pairwise_dickson(vecs);
      CHECK(serial == oracle);
      CHECK(parallel == oracle);
    }
  }
}
