#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "monoidlab/json_io.hpp"
#include "monoidlab/premon.hpp"

using namespace monoidlab;

TEST_CASE("premon construction validates the preorder axioms") {
  const FiniteMonoid M = mul_mod(4);
  std::vector<ElementSet> rows(4, ElementSet(4));
  for (Element x = 0; x < 4; ++x) rows[x].set(x);
  CHECK_NOTHROW(Premon(M, rows));

  auto missing_reflexive = rows;
  missing_reflexive[2] = ElementSet(4);
  CHECK_THROWS_AS(Premon(M, missing_reflexive), std::invalid_argument);

  auto intransitive = rows;
  intransitive[0].set(1);
  intransitive[1].set(2);  // 0<=1, 1<=2 but not 0<=2
  CHECK_THROWS_AS(Premon(M, intransitive), std::invalid_argument);
}

TEST_CASE("divisibility premon") {
  const FiniteMonoid M = mul_mod(8);
  const Premon P = divisibility_premon(M);
  // The identity divides everything.
  for (Element x = 0; x < 8; ++x) CHECK(P.leq(1, x));
  CHECK(P.leq(2, 4));
  CHECK_FALSE(P.leq(4, 2));
  CHECK(P.strictly_less(2, 4));
  // Associated atoms: 2 and 6 divide each other.
  CHECK(P.equivalent(2, 6));
}

TEST_CASE("left and right divisibility collapse for commutative monoids") {
  const FiniteMonoid M = mul_mod(8);
  const Premon div = divisibility_premon(M);
  const Premon left = left_divisibility_premon(M);
  const Premon right = right_divisibility_premon(M);
  for (Element x = 0; x < 8; ++x) {
    CHECK(left.upper_row(x) == right.upper_row(x));
    CHECK(left.upper_row(x) == div.upper_row(x));
  }
}

TEST_CASE("classification") {
  const FiniteMonoid M = mul_mod(8);
  const Premon P = divisibility_premon(M);
  const PremonClassification c = classify(P);
  CHECK(c.units == ElementSet::from_indices(8, {1, 3, 5, 7}));
  CHECK(c.irreducibles == ElementSet::from_indices(8, {2, 6}));
  CHECK((c.irreducibles & c.units).empty());
  // Atoms coincide with the divisibility irreducibles here.
  CHECK(atoms(M) == c.irreducibles);

  const PremonClassification t = classify(divisibility_premon(trivial_monoid()));
  CHECK(t.irreducibles.empty());

  // Power monoid: the three two-element subsets are irreducible. With the
  // mask encoding, {0,1} is index 1, {0,2} index 2, {0,3} index 4.
  const FiniteMonoid P4 = reduced_power_monoid(4);
  const PremonClassification c4 = classify(divisibility_premon(P4));
  CHECK(c4.irreducibles == ElementSet::from_indices(8, {1, 2, 4}));
}

TEST_CASE("product of non-units") {
  CHECK(product_of_nonunits_closed(divisibility_premon(mul_mod(8))));
  CHECK(product_of_nonunits_closed(left_divisibility_premon(mul_mod(12))));

  // Two non-units multiplying to a unit: the discrete preorder on Z/2.
  const FiniteMonoid z2 = FiniteMonoid::from_cayley_table({{0, 1}, {1, 0}}, 0);
  std::vector<ElementSet> rows(2, ElementSet(2));
  rows[0].set(0);
  rows[1].set(1);
  CHECK_FALSE(product_of_nonunits_closed(Premon(z2, rows)));
}

TEST_CASE("restrict_to_A on mul_mod(8)") {
  const FiniteMonoid M = mul_mod(8);
  const Premon P = divisibility_premon(M);

  SUBCASE("A = {2}") {
    const Premon PA = restrict_to_A(P, ElementSet::from_indices(8, {2}));
    const PremonClassification c = classify(PA);
    // Non-units are <A> minus the units: {2, 4, 0}.
    CHECK(c.units.complement() == ElementSet::from_indices(8, {0, 2, 4}));
    CHECK(c.irreducibles == ElementSet::from_indices(8, {2}));
    // phi levels: 2 < 4 < 0.
    CHECK(PA.strictly_less(2, 4));
    CHECK(PA.strictly_less(4, 0));
    CHECK(PA.strictly_less(2, 0));
  }

  SUBCASE("A = all irreducibles") {
    const Premon PA = restrict_to_A(P, ElementSet::from_indices(8, {2, 6}));
    CHECK(classify(PA).irreducibles == ElementSet::from_indices(8, {2, 6}));
  }

  SUBCASE("precondition violations") {
    CHECK_THROWS_AS(restrict_to_A(P, ElementSet::from_indices(8, {3})),
                    std::invalid_argument);
  }
}

TEST_CASE("custom preorder closure via loader") {
  const auto loaded = load_monoid_spec(
      R"({"kind":"mul_mod","modulus":4,"preorder":[[1,2],[2,3]]})");
  std::uint32_t added = 0;
  const Premon P = build_premon(loaded, PreorderChoice::custom, &added);
  CHECK(P.leq(1, 3));  // transitive closure
  CHECK(added == 1);   // exactly the pair (1,3) beyond input + diagonal
  CHECK_THROWS(build_premon(load_monoid_spec("mul_mod:4"), PreorderChoice::custom));
}
