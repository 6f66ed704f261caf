// words.hpp -- free-monoid words, valuation vectors, and the permuted-subword
// and shuffling preorders

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace monoidlab {

using LetterId = std::uint32_t;

/// Label strings of an alphabet. Words themselves only carry letter ids;
/// the alphabet is consulted for parsing and printing.
struct Alphabet {
  std::vector<std::string> labels;

  std::uint32_t size() const { return static_cast<std::uint32_t>(labels.size()); }
};

/// A word over an abstract alphabet of `alphabet_size` letters.
struct Word {
  std::vector<LetterId> letters;
  std::uint32_t alphabet_size = 0;

  std::uint32_t length() const { return static_cast<std::uint32_t>(letters.size()); }
  bool empty() const { return letters.empty(); }

  bool operator==(const Word& other) const {
    return alphabet_size == other.alphabet_size && letters == other.letters;
  }
  bool operator!=(const Word& other) const { return !(*this == other); }

  /// Lexicographic order on letter sequences; ties broken by nothing else
  /// (words compared across alphabets are ordered by content only).
  bool operator<(const Word& other) const { return letters < other.letters; }
};

/// Builds a word, validating every letter against the alphabet size.
Word make_word(std::vector<LetterId> letters, std::uint32_t alphabet_size);

/// The empty word over an alphabet.
inline Word empty_word(std::uint32_t alphabet_size) { return Word{{}, alphabet_size}; }

/// Letter-multiplicity vector of a word: counts[t] = occurrences of letter t.
struct ValuationVector {
  std::vector<std::uint32_t> counts;

  std::uint32_t dimension() const { return static_cast<std::uint32_t>(counts.size()); }

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }

  bool operator==(const ValuationVector& other) const { return counts == other.counts; }
  bool operator!=(const ValuationVector& other) const { return counts != other.counts; }
  bool operator<(const ValuationVector& other) const { return counts < other.counts; }
};

/// componentwise u <= v
bool dominated_by(const ValuationVector& u, const ValuationVector& v);

/// componentwise u <= v with u != v
bool strictly_dominated_by(const ValuationVector& u, const ValuationVector& v);

/// A partition of the letters of an alphabet into equivalence classes.
struct LetterEquivalence {
  std::vector<std::uint32_t> class_of;  // letter id -> class index

  std::uint32_t num_letters() const { return static_cast<std::uint32_t>(class_of.size()); }
  std::uint32_t num_classes() const;

  /// The discrete partition: every letter its own class.
  static LetterEquivalence discrete(std::uint32_t num_letters);
};

/// Concatenation in the free monoid. Throws on alphabet mismatch.
Word concat(const Word& u, const Word& v);

/// Letter-multiplicity vector of u; the component sum equals length(u).
ValuationVector valuation(const Word& u);

/// u is a permuted subword of v: some injection of positions of u into
/// positions of v preserves letters. Computed as componentwise valuation
/// dominance. Throws on alphabet mismatch.
bool is_permuted_subword(const Word& u, const Word& v);

/// Strict variant: u permuted subword of v but not conversely.
bool is_strict_permuted_subword(const Word& u, const Word& v);

/// Shuffling preorder: injection with letters matched up to eq-classes.
/// Computed class-wise (count dominance per class).
bool shuffling_leq(const Word& u, const Word& v, const LetterEquivalence& eq);

/// All vectors w with w <= valuation(u) componentwise and w != valuation(u),
/// in graded (total ascending) order, each exactly once.
std::vector<ValuationVector> proper_sub_multisets(const Word& u);

/// Callback form of the above, same order; stops early when fn returns false.
/// Returns false iff stopped early.
bool for_each_proper_sub_multiset(const ValuationVector& full,
                                  const std::function<bool(const ValuationVector&)>& fn);

std::string to_string(const Word& w, const Alphabet& alphabet);

}  // namespace monoidlab
