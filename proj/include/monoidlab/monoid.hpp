// monoid.hpp -- finite monoids as validated Cayley tables, builtin families,
// and structural predicates

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoidlab/element_set.hpp"
#include "monoidlab/kernels.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab {

using Element = std::uint32_t;

/// Largest accepted monoid size; associativity validation is cubic in it.
inline constexpr std::uint32_t kDefaultMaxMonoidSize = 512;

class FiniteMonoid {
 public:
  /// Validates associativity, the identity law and table entries; caches
  /// commutativity. Throws std::invalid_argument with the violating triple
  /// on a non-associative table.
  static FiniteMonoid from_cayley_table(std::vector<std::vector<Element>> table,
                                        Element identity,
                                        std::vector<std::string> labels = {},
                                        std::uint32_t max_size = kDefaultMaxMonoidSize);

  /// Same as above with a row-major flat table.
  static FiniteMonoid from_flat_table(std::vector<Element> flat, std::uint32_t size,
                                      Element identity, std::vector<std::string> labels = {},
                                      std::uint32_t max_size = kDefaultMaxMonoidSize);

  std::uint32_t size() const { return size_; }
  Element identity() const { return identity_; }
  bool commutative() const { return commutative_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  const std::vector<Element>& flat_table() const { return table_; }

  Element mul(Element x, Element y) const {
    return table_[static_cast<std::size_t>(x) * size_ + y];
  }

  bool operator==(const FiniteMonoid& other) const {
    return size_ == other.size_ && identity_ == other.identity_ && table_ == other.table_;
  }

 private:
  FiniteMonoid() = default;

  std::uint32_t size_ = 0;
  std::vector<Element> table_;  // row-major
  Element identity_ = 0;
  std::vector<std::string> labels_;
  bool commutative_ = false;
};

/// Multiplicative monoid of the integers modulo n (n >= 2): elements 0..n-1,
/// x*y mod n, identity 1.
FiniteMonoid mul_mod(std::uint32_t n);

/// Reduced power monoid of Z_n: the 2^(n-1) subsets of Z_n containing 0 under
/// setwise addition, identity {0}. Element i encodes the subset with bitmask
/// (i << 1) | 1 over residues. Throws if the element count exceeds max_size.
FiniteMonoid reduced_power_monoid(std::uint32_t n,
                                  std::uint32_t max_size = kDefaultMaxMonoidSize);

/// The one-element monoid.
FiniteMonoid trivial_monoid();

/// Left-to-right fold of the table starting at the identity. Letters of w
/// index elements of M; evaluate(epsilon) = identity.
Element evaluate(const FiniteMonoid& M, const Word& w);

/// Elements u with uv == vu == identity for some v.
ElementSet units(const FiniteMonoid& M);

/// Least subset containing the identity and A, closed under the operation.
ElementSet submonoid_generated(const FiniteMonoid& M, const ElementSet& A);

/// Non-units a that are not the product of two non-units.
ElementSet atoms(const FiniteMonoid& M);

/// u*x*v != x whenever u or v is a non-unit.
bool is_acyclic(const FiniteMonoid& M,
                kernels::Exec exec = kernels::kDefaultExec);

/// y*x != x != x*y for every non-unit y.
bool is_unit_cancellative(const FiniteMonoid& M);

}  // namespace monoidlab
