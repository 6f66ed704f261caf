// reference.hpp -- independent reference implementations (definition-level
// brute force) used as oracles by the property suites and tests. These stay
// deliberately naive: injection search instead of counting, full word
// enumeration instead of the multiset engine.

#pragma once

#include <cstdint>
#include <vector>

#include "monoidlab/monoid.hpp"
#include "monoidlab/premon.hpp"
#include "monoidlab/words.hpp"

namespace monoidlab::reference {

/// Injection sigma with u[i] equivalent to v[sigma(i)], found by backtracking
/// over positions (the textbook definition, no counting shortcut).
bool injection_exists(const Word& u, const Word& v, const LetterEquivalence& eq);

/// Letter-equality injection (permuted subword by definition).
bool permuted_subword_by_injection(const Word& u, const Word& v);

/// All words over an alphabet of k letters with length <= max_len,
/// lexicographic within each length, lengths ascending.
std::vector<Word> all_words(std::uint32_t k, std::uint32_t max_len);

/// Products of every permutation of a letter multiset, by factorial brute
/// force. letters[t] is the monoid element of slot t.
ElementSet products_of_all_arrangements(const FiniteMonoid& M,
                                        const std::vector<Element>& letters,
                                        const ValuationVector& multiset);

/// Minimal A-words by definition: every word over A up to max_len, kept iff
/// no strictly-smaller-by-injection word with the same product exists among
/// words of smaller length. Words index A.
std::vector<Word> naive_minimal_A_words(const FiniteMonoid& M, const std::vector<Element>& A,
                                        Element x, std::uint32_t max_len);

/// Minimal preorder-factorizations by definition: every word over the
/// irreducibles of P up to max_len evaluating to x, kept iff no class-level
/// strictly-smaller word with the same product exists. Words are over the
/// monoid element alphabet.
std::vector<Word> naive_minimal_factorizations(const Premon& P, Element x,
                                               std::uint32_t max_len);

/// O(n^2) pairwise-dominance Dickson oracle.
std::vector<std::vector<std::uint32_t>> pairwise_dickson(
    const std::vector<std::vector<std::uint32_t>>& vectors);

/// Euler totient by sieve (count of residues coprime to n).
std::uint32_t totient(std::uint32_t n);

/// Factor occurrences of `needle` in `haystack` by direct scanning.
std::uint64_t count_factor_occurrences(const std::vector<LetterId>& haystack,
                                       const std::vector<LetterId>& needle);

}  // namespace monoidlab::reference
