// premon.hpp -- preorders attached to monoids: divisibility premons,
// preorder-units and -irreducibles, and the restriction-to-A construction

#pragma once

#include <cstdint>
#include <vector>

#include "monoidlab/element_set.hpp"
#include "monoidlab/kernels.hpp"
#include "monoidlab/monoid.hpp"

namespace monoidlab {

/// A monoid paired with a preorder on its elements. Rows of the relation
/// matrix are bitsets: row(x).test(y) means x <= y. Reflexivity and
/// transitivity are asserted at construction.
class Premon {
 public:
  Premon(FiniteMonoid monoid, std::vector<ElementSet> leq_rows);

  const FiniteMonoid& monoid() const { return monoid_; }
  std::uint32_t size() const { return monoid_.size(); }

  bool leq(Element x, Element y) const { return rows_[x].test(y); }
  bool strictly_less(Element x, Element y) const { return leq(x, y) && !leq(y, x); }
  bool equivalent(Element x, Element y) const { return leq(x, y) && leq(y, x); }
  const ElementSet& upper_row(Element x) const { return rows_[x]; }

 private:
  FiniteMonoid monoid_;
  std::vector<ElementSet> rows_;
};

/// u <= v iff v lies in HuH (u divides v).
Premon divisibility_premon(const FiniteMonoid& M,
                           kernels::Exec exec = kernels::kDefaultExec);

/// u <= v iff v lies in uH.
Premon left_divisibility_premon(const FiniteMonoid& M,
                                kernels::Exec exec = kernels::kDefaultExec);

/// u <= v iff v lies in Hu.
Premon right_divisibility_premon(const FiniteMonoid& M,
                                 kernels::Exec exec = kernels::kDefaultExec);

/// x <= y for all x, y.
Premon indiscrete_premon(const FiniteMonoid& M);

/// Builds a premon from an explicit relation list, closing it reflexively and
/// transitively. Reports via *pairs_added how many pairs the closure added
/// beyond the input and the reflexive diagonal.
Premon premon_from_pairs(const FiniteMonoid& M,
                         const std::vector<std::pair<Element, Element>>& pairs,
                         std::uint32_t* pairs_added = nullptr);

struct PremonClassification {
  ElementSet units;         // elements equivalent to the identity
  ElementSet irreducibles;  // non-units with no factorization into strictly
                            // smaller non-units
  std::vector<std::uint32_t> equiv_class_of;  // element -> class index
  std::uint32_t num_classes = 0;
};

/// Units, irreducibles and equivalence classes of a premon.
PremonClassification classify(const Premon& P);

/// True iff x*y is a preorder-non-unit for all preorder-non-units x, y.
bool product_of_nonunits_closed(const Premon& P);

/// The restriction construction: given A inside the irreducibles of P (with
/// products of non-units closed), builds the preorder whose non-units are
/// exactly <A> minus the P-units, whose irreducibles are exactly A, and whose
/// equivalence agrees with P's on A. All three postconditions are asserted.
Premon restrict_to_A(const Premon& P, const ElementSet& A);

}  // namespace monoidlab
