#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "monoidlab/json_io.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/reference.hpp"

using namespace monoidlab;

TEST_CASE("cayley table validation") {
  const FiniteMonoid t = trivial_monoid();
  CHECK(t.size() == 1);
  CHECK(t.commutative());

  // Z/2 as a table.
  const FiniteMonoid z2 = FiniteMonoid::from_cayley_table({{0, 1}, {1, 0}}, 0);
  CHECK(z2.mul(1, 1) == 0);
  CHECK(z2.commutative());

  // (x*y)*z != x*(y*z) somewhere: right-projection table with wrong identity
  // candidates; build an explicitly broken table.
  CHECK_THROWS_WITH_AS(FiniteMonoid::from_cayley_table({{0, 1, 2}, {1, 2, 2}, {2, 2, 1}}, 0),
                       doctest::Contains("associativity"), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMonoid::from_cayley_table({{0, 1}, {1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMonoid::from_cayley_table({{1, 1}, {1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("mul_mod basics") {
  CHECK_THROWS_AS(mul_mod(1), std::invalid_argument);
  const FiniteMonoid M = mul_mod(8);
  CHECK(M.size() == 8);
  CHECK(M.identity() == 1);
  CHECK(M.commutative());

  CHECK(units(M) == ElementSet::from_indices(8, {1, 3, 5, 7}));
  CHECK(atoms(M) == ElementSet::from_indices(8, {2, 6}));

  // 2*2*2 = 0 and no product of fewer than 3 atoms is 0.
  CHECK(evaluate(M, make_word({2, 2, 2}, 8)) == 0);
  for (Element a : {2u, 6u}) {
    CHECK(a != 0);
    for (Element b : {2u, 6u}) CHECK(M.mul(a, b) != 0);
  }
}

TEST_CASE("reduced power monoid") {
  CHECK_THROWS_AS(reduced_power_monoid(1), std::invalid_argument);
  CHECK_THROWS_AS(reduced_power_monoid(12), std::invalid_argument);  // 2^11 over the cap
  CHECK(reduced_power_monoid(3).size() == 4);

  const FiniteMonoid P = reduced_power_monoid(4);
  CHECK(P.size() == 8);
  // Element index i encodes mask (i<<1)|1: {0,1} is 1, {0,2} is 2, {0,1,2,3} is 7.
  const Element e01 = 1, e02 = 2, full = 7;
  CHECK(P.mul(e01, e02) == full);
  CHECK(P.mul(e02, e02) == e02);  // idempotent irreducible {0,2}
  CHECK(P.label(e01) == "{0,1}");
  CHECK(units(P) == ElementSet::from_indices(8, {0}));
}

TEST_CASE("evaluate") {
  const FiniteMonoid M = mul_mod(8);
  CHECK(evaluate(M, empty_word(8)) == 1);
  CHECK(evaluate(M, make_word({2, 2, 2}, 8)) == 0);
  CHECK_THROWS_AS(evaluate(M, Word{{9}, 10}), std::invalid_argument);
}

TEST_CASE("submonoid generation") {
  const FiniteMonoid M = mul_mod(8);
  CHECK(submonoid_generated(M, ElementSet(8)) == ElementSet::from_indices(8, {1}));
  CHECK(submonoid_generated(M, ElementSet::from_indices(8, {2})) ==
        ElementSet::from_indices(8, {0, 1, 2, 4}));
  ElementSet all(8);
  for (Element x = 0; x < 8; ++x) all.set(x);
  CHECK(submonoid_generated(M, all) == all);
}

TEST_CASE("acyclicity and unit-cancellativity") {
  CHECK(is_acyclic(trivial_monoid()));
  CHECK(is_unit_cancellative(trivial_monoid()));
  const FiniteMonoid M = mul_mod(8);
  CHECK_FALSE(is_acyclic(M));          // 2*0*1 == 0
  CHECK_FALSE(is_unit_cancellative(M));  // 2*0 == 0
  // A finite group is acyclic vacuously.
  const FiniteMonoid z3 = FiniteMonoid::from_cayley_table(
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 0);
  CHECK(is_acyclic(z3));
}

TEST_CASE("unit counts match the totient") {
  for (std::uint32_t n : {4u, 8u, 9u, 27u})
    CHECK(units(mul_mod(n)).count() == reference::totient(n));
}

TEST_CASE("monoid spec JSON") {
  const auto direct = load_monoid_spec("mul_mod:8");
  CHECK(direct.monoid == mul_mod(8));

  const auto power = load_monoid_spec("power:4");
  CHECK(power.monoid == reduced_power_monoid(4));

  // Row-major, 0-based table.
  const auto cayley = load_monoid_spec(
      R"({"kind":"cayley","table":[[0,1],[1,0]],"identity":0,"labels":["e","a"]})");
  CHECK(cayley.monoid.size() == 2);
  CHECK(cayley.monoid.mul(1, 1) == 0);
  CHECK(cayley.monoid.label(1) == "a");

  CHECK_THROWS(load_monoid_spec("{broken"));
  CHECK_THROWS(load_monoid_spec(R"({"kind":"nope"})"));
  CHECK_THROWS(load_monoid_spec(
      R"({"kind":"cayley","table":[[0,1],[0,0]],"identity":0})"));
}
