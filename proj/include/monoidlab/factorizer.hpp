// factorizer.hpp -- exact enumeration of (minimal) factorizations, length
// sets and their unions, elasticities, and the Dickson-antichain machinery

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monoidlab/elasticity.hpp"
#include "monoidlab/element_set.hpp"
#include "monoidlab/kernels.hpp"
#include "monoidlab/monoid.hpp"
#include "monoidlab/premon.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab {

/// A set of factorization lengths. When `truncated` is false the set is
/// complete; truncation can only arise from a caller-supplied length cap.
struct LengthSet {
  std::vector<std::uint32_t> values;  // sorted ascending
  bool truncated = false;

  bool contains(std::uint32_t k) const;
  bool operator==(const LengthSet& other) const {
    return values == other.values && truncated == other.truncated;
  }
};

/// The set of monoid values taken by some arrangement of a letter multiset.
/// `letters` maps slot t of the multiset to an element of M; computed by
/// dynamic programming over sub-multisets.
ElementSet achievable_products(const FiniteMonoid& M, const std::vector<Element>& letters,
                               const ValuationVector& multiset);

/// A word w over the letter list A (w.letters index A, not M) is minimal if
/// no proper sub-multiset of it achieves evaluate(w) among its arrangements.
bool is_minimal_word(const FiniteMonoid& M, const std::vector<Element>& A, const Word& w);

/// All minimal A-words evaluating to x, complete by the |M| length bound.
/// For commutative monoids the canonical multiset forms are the answer; for
/// non-commutative monoids the words themselves are materialized as well.
struct MinimalWords {
  std::vector<ValuationVector> multisets;  // canonical forms, sorted
  std::vector<Word> words;                 // all minimal words (letters index A);
                                           // populated for non-commutative M
};
MinimalWords minimal_words(const FiniteMonoid& M, const std::vector<Element>& A, Element x);

/// All irreducible-letter factorizations of x up to max_length. Words are
/// over the monoid's element alphabet, letters restricted to the
/// irreducibles of P. `truncated` is set iff some word of length exactly
/// max_length evaluates to x: sets with the flag clear are complete at the
/// cap (cap-level emptiness certificate).
struct Factorizations {
  std::vector<Word> words;
  bool truncated = false;
};
Factorizations factorizations(const Premon& P, Element x, std::uint32_t max_length);

/// Minimal factorizations of x under the shuffling preorder, deduplicated up
/// to shuffling equivalence: one lexicographically-least representative per
/// class, plus the class count. Complete by the |M| length bound.
struct MinimalFactorizations {
  std::vector<Word> representatives;             // sorted, letters are elements of M
  std::vector<ValuationVector> class_vectors;    // per representative, counts by
                                                 // irreducible equivalence class
  std::uint32_t class_count = 0;
};
MinimalFactorizations minimal_factorizations(const Premon& P, Element x);

class FactorizationAnalysis;

/// Overload reusing a prebuilt analysis (batch callers).
MinimalFactorizations minimal_factorizations(const FactorizationAnalysis& analysis,
                                             Element x);

/// (length set at the cap, minimal length set). The former may be truncated;
/// the latter is always exact.
std::pair<LengthSet, LengthSet> length_sets(const Premon& P, Element x,
                                            std::uint32_t max_length);

/// Unions of (minimal) length sets containing k, over preorder-non-units.
/// U_0 and U_0^m are empty by construction.
std::pair<LengthSet, LengthSet> unions(const Premon& P, std::uint32_t k,
                                       std::uint32_t max_length);

/// Exact minimal elasticity: sup over non-units of max/min of the minimal
/// length set. Zero when no non-unit has a factorization.
Elasticity minimal_elasticity(const Premon& P);

/// Classical elasticity from enumeration capped at max_length; exact only
/// when no factorization of a non-unit reaches the cap.
Elasticity classical_elasticity(const Premon& P, std::uint32_t max_length);

/// Classical elasticity of a single element at the cap; exact iff x has no
/// factorization of length max_length.
Elasticity classical_elasticity_of(const Premon& P, Element x, std::uint32_t max_length);

/// Exact minimal A-elasticity (letters compared by equality, not preorder
/// equivalence): sup of length ratios over pairs of minimal A-words with the
/// same product.
Elasticity minimal_A_elasticity(const FiniteMonoid& M, const std::vector<Element>& A);

/// Componentwise-minimal vectors of a non-empty uniform-dimension set.
std::vector<ValuationVector> dickson_minimal(const std::vector<ValuationVector>& vectors,
                                             kernels::Exec exec = kernels::kDefaultExec);

/// The bound r from the bounded-triple construction: enumerates the capped
/// fragment of the triple set S, maps it through the valuation map f into
/// N^(3s), extracts the Dickson-minimal set T, and returns the largest
/// length ratio over T. Requires M commutative and A non-empty; asserts
/// minimal_A_elasticity(M, A) <= r before returning.
Elasticity rho_star_bound(const FiniteMonoid& M, const std::vector<Element>& A);

// ---------------------------------------------------------------------------
// Engine layer: per-premon analysis reused across queries. The free functions
// above construct one of these on the fly; batch callers (CLI, acceptance
// suites) should build it once.
// ---------------------------------------------------------------------------

/// Minimal-multiset search over a letter list with an equivalence on slots.
/// Slots are equivalence classes; reach(gamma) is the set of monoid values of
/// words whose class-count vector is gamma. The engine stores, per target x,
/// the antichain of class-count vectors of minimal words for x.
class MinimalWordEngine {
 public:
  /// letters[t] is an element of M; slot_of[t] assigns each letter a slot
  /// (pass the identity map for letter-level minimality).
  MinimalWordEngine(const FiniteMonoid& M, std::vector<Element> letters,
                    std::vector<std::uint32_t> slot_of);

  std::uint32_t num_slots() const { return num_slots_; }
  const std::vector<Element>& letters() const { return letters_; }

  /// Antichain of minimal class-count vectors for x (empty if x has no word).
  const std::vector<ValuationVector>& minimal_vectors(Element x) const {
    return min_sets_[x];
  }

  /// Sorted distinct lengths of minimal words for x.
  std::vector<std::uint32_t> minimal_lengths(Element x) const;

  /// All words w (letters indexing the letter list) with class counts gamma
  /// and product x. Gamma must describe a realizable pair.
  std::vector<Word> words_for(const ValuationVector& gamma, Element x) const;

  /// Lexicographically least such word.
  Word lex_least_word_for(const ValuationVector& gamma, Element x) const;

 private:
  FiniteMonoid monoid_;
  std::vector<Element> letters_;
  std::vector<std::uint32_t> slot_of_;
  std::uint32_t num_slots_ = 0;
  std::vector<std::vector<ValuationVector>> min_sets_;  // per target element

  ElementSet reach_of(const ValuationVector& gamma) const;
  void run();
};

/// Premon-level analysis: classification, irreducible letters, the class-level
/// minimal-word engine, and length-set tables at a cap.
class FactorizationAnalysis {
 public:
  FactorizationAnalysis(const Premon& P, std::uint32_t max_length);

  const Premon& premon() const { return premon_; }
  const PremonClassification& classification() const { return classification_; }
  const std::vector<Element>& irreducible_letters() const { return letters_; }
  std::uint32_t max_length() const { return max_length_; }
  const MinimalWordEngine& engine() const { return engine_; }

  LengthSet length_set(Element x) const;          // capped, truncated flag
  LengthSet minimal_length_set(Element x) const;  // exact
  std::pair<LengthSet, LengthSet> unions(std::uint32_t k) const;
  Elasticity minimal_elasticity() const;
  Elasticity classical_elasticity() const;
  Elasticity classical_elasticity_of(Element x) const;
  Elasticity minimal_elasticity_of(Element x) const;

 private:
  Premon premon_;
  PremonClassification classification_;
  std::vector<Element> letters_;              // irreducibles, ascending
  std::vector<std::uint32_t> letter_slot_;    // letter -> equivalence-class slot
  std::uint32_t max_length_;
  MinimalWordEngine engine_;
  std::vector<ElementSet> reachable_at_;      // R_j, j = 0..max_length
};

}  // namespace monoidlab
