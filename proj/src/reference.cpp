#include "monoidlab/reference.hpp"

#include <algorithm>
#include <numeric>

namespace monoidlab::reference {

namespace {

bool injection_rec(const Word& u, const Word& v, const LetterEquivalence& eq,
                   std::size_t i, std::vector<bool>& used) {
  if (i == u.letters.size()) return true;
  for (std::size_t j = 0; j < v.letters.size(); ++j) {
    if (used[j]) continue;
    if (eq.class_of[u.letters[i]] != eq.class_of[v.letters[j]]) continue;
    used[j] = true;
    if (injection_rec(u, v, eq, i + 1, used)) return true;
    used[j] = false;
  }
  return false;
}

}  // namespace

bool injection_exists(const Word& u, const Word& v, const LetterEquivalence& eq) {
  if (u.letters.size() > v.letters.size()) return false;
  std::vector<bool> used(v.letters.size(), false);
  return injection_rec(u, v, eq, 0, used);
}

bool permuted_subword_by_injection(const Word& u, const Word& v) {
  return injection_exists(u, v, LetterEquivalence::discrete(u.alphabet_size));
}

std::vector<Word> all_words(std::uint32_t k, std::uint32_t max_len) {
  std::vector<Word> out;
  out.push_back(empty_word(k));
  if (k == 0) return out;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    std::vector<LetterId> w(len, 0);
    while (true) {
      out.push_back(Word{w, k});
      std::uint32_t t = len;
      while (t > 0 && w[t - 1] + 1 == k) w[--t] = 0;
      if (t == 0) break;
      ++w[t - 1];
    }
  }
  return out;
}

ElementSet products_of_all_arrangements(const FiniteMonoid& M,
                                        const std::vector<Element>& letters,
                                        const ValuationVector& multiset) {
  std::vector<Element> seq;
  for (std::size_t t = 0; t < multiset.counts.size(); ++t)
    seq.insert(seq.end(), multiset.counts[t], letters[t]);
  std::sort(seq.begin(), seq.end());
  ElementSet out(M.size());
  do {
    Element p = M.identity();
    for (auto a : seq) p = M.mul(p, a);
    out.set(p);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

namespace {

/// Words over an indexed letter list, grouped by length, with their products.
struct WordTable {
  std::vector<Word> words;
  std::vector<Element> products;
};

WordTable build_table(const FiniteMonoid& M, const std::vector<Element>& letters,
                      std::uint32_t max_len) {
  WordTable t;
  t.words = all_words(static_cast<std::uint32_t>(letters.size()), max_len);
  t.products.reserve(t.words.size());
  for (const auto& w : t.words) {
    Element p = M.identity();
    for (auto l : w.letters) p = M.mul(p, letters[l]);
    t.products.push_back(p);
  }
  return t;
}

std::vector<Word> filter_minimal(const WordTable& t, Element x,
                                 const LetterEquivalence& eq) {
  std::vector<Word> out;
  for (std::size_t i = 0; i < t.words.size(); ++i) {
    if (t.products[i] != x) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < t.words.size() && minimal; ++j) {
      if (t.products[j] != x) continue;
      if (t.words[j].letters.size() >= t.words[i].letters.size()) continue;
      // A strictly smaller word in the (class-level) permuted-subword order:
      // an injection from the shorter word into the longer one.
      if (injection_exists(t.words[j], t.words[i], eq)) minimal = false;
    }
    if (minimal) out.push_back(t.words[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Word> naive_minimal_A_words(const FiniteMonoid& M, const std::vector<Element>& A,
                                        Element x, std::uint32_t max_len) {
  const WordTable t = build_table(M, A, max_len);
  return filter_minimal(t, x, LetterEquivalence::discrete(static_cast<std::uint32_t>(A.size())));
}

std::vector<Word> naive_minimal_factorizations(const Premon& P, Element x,
                                               std::uint32_t max_len) {
  const PremonClassification cls = classify(P);
  const std::vector<Element> letters = cls.irreducibles.to_vector();
  const WordTable t = build_table(P.monoid(), letters, max_len);

  LetterEquivalence eq;
  eq.class_of.resize(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i)
    eq.class_of[i] = cls.equiv_class_of[letters[i]];

  std::vector<Word> indexed = filter_minimal(t, x, eq);
  // Convert letter indices back to monoid elements.
  std::vector<Word> out;
  out.reserve(indexed.size());
  for (const auto& w : indexed) {
    std::vector<LetterId> elems;
    elems.reserve(w.letters.size());
    for (auto l : w.letters) elems.push_back(letters[l]);
    out.push_back(Word{std::move(elems), P.size()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> pairwise_dickson(
    const std::vector<std::vector<std::uint32_t>>& vectors) {
  std::vector<std::vector<std::uint32_t>> uniq = vectors;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  auto leq = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    for (std::size_t t = 0; t < a.size(); ++t)
      if (a[t] > b[t]) return false;
    return true;
  };
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t i = 0; i < uniq.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < uniq.size() && minimal; ++j)
      if (j != i && leq(uniq[j], uniq[i])) minimal = false;
    if (minimal) out.push_back(uniq[i]);
  }
  return out;
}

std::uint32_t totient(std::uint32_t n) {
  std::uint32_t count = 0;
  for (std::uint32_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

std::uint64_t count_factor_occurrences(const std::vector<LetterId>& haystack,
                                       const std::vector<LetterId>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return 0;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i + needle.size() <= haystack.size(); ++i)
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) ++count;
  return count;
}

}  // namespace monoidlab::reference
