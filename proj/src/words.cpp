#include "monoidlab/words.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace monoidlab {

Word make_word(std::vector<LetterId> letters, std::uint32_t alphabet_size) {
  for (auto l : letters)
    if (l >= alphabet_size)
      throw std::invalid_argument("make_word: letter id " + std::to_string(l) +
                                  " out of range for alphabet of size " +
                                  std::to_string(alphabet_size));
  return Word{std::move(letters), alphabet_size};
}

bool dominated_by(const ValuationVector& u, const ValuationVector& v) {
  if (u.counts.size() != v.counts.size())
    throw std::invalid_argument("valuation dimension mismatch");
  for (std::size_t t = 0; t < u.counts.size(); ++t)
    if (u.counts[t] > v.counts[t]) return false;
  return true;
}

bool strictly_dominated_by(const ValuationVector& u, const ValuationVector& v) {
  return dominated_by(u, v) && u.counts != v.counts;
}

std::uint32_t LetterEquivalence::num_classes() const {
  std::uint32_t m = 0;
  for (auto c : class_of) m = std::max(m, c + 1);
  return m;
}

LetterEquivalence LetterEquivalence::discrete(std::uint32_t num_letters) {
  LetterEquivalence eq;
  eq.class_of.resize(num_letters);
  std::iota(eq.class_of.begin(), eq.class_of.end(), 0u);
  return eq;
}

static void check_same_alphabet(const Word& u, const Word& v, const char* op) {
  if (u.alphabet_size != v.alphabet_size)
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch (" +
                                std::to_string(u.alphabet_size) + " vs " +
                                std::to_string(v.alphabet_size) + ")");
}

Word concat(const Word& u, const Word& v) {
  check_same_alphabet(u, v, "concat");
  Word r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

ValuationVector valuation(const Word& u) {
  ValuationVector val;
  val.counts.assign(u.alphabet_size, 0);
  for (auto l : u.letters) ++val.counts[l];
  return val;
}

bool is_permuted_subword(const Word& u, const Word& v) {
  check_same_alphabet(u, v, "is_permuted_subword");
  // An injection exists iff every letter occurs in u at most as often as in v.
  return dominated_by(valuation(u), valuation(v));
}

bool is_strict_permuted_subword(const Word& u, const Word& v) {
  check_same_alphabet(u, v, "is_strict_permuted_subword");
  return strictly_dominated_by(valuation(u), valuation(v));
}

bool shuffling_leq(const Word& u, const Word& v, const LetterEquivalence& eq) {
  check_same_alphabet(u, v, "shuffling_leq");
  if (eq.num_letters() != u.alphabet_size)
    throw std::invalid_argument("shuffling_leq: partition size mismatch");
  // Letters matched up to eq-classes; Hall's condition for a partition-induced
  // bipartite structure reduces to per-class count dominance.
  std::uint32_t k = eq.num_classes();
  std::vector<std::uint32_t> cu(k, 0), cv(k, 0);
  for (auto l : u.letters) ++cu[eq.class_of[l]];
  for (auto l : v.letters) ++cv[eq.class_of[l]];
  for (std::uint32_t c = 0; c < k; ++c)
    if (cu[c] > cv[c]) return false;
  return true;
}

bool for_each_proper_sub_multiset(const ValuationVector& full,
                                  const std::function<bool(const ValuationVector&)>& fn) {
  const auto dim = full.counts.size();
  const std::uint64_t total = full.total();
  // Graded enumeration: all sub-vectors of component sum g, for g = 0..total-1.
  ValuationVector cur;
  cur.counts.assign(dim, 0);
  for (std::uint64_t g = 0; g + 1 <= total; ++g) {
    // Enumerate vectors <= full with sum == g by positional recursion.
    std::function<bool(std::size_t, std::uint64_t)> rec = [&](std::size_t t,
                                                              std::uint64_t rem) -> bool {
      if (t + 1 == dim) {
        if (rem > full.counts[t]) return true;  // no vector down this branch
        cur.counts[t] = static_cast<std::uint32_t>(rem);
        return fn(cur);
      }
      std::uint64_t hi = std::min<std::uint64_t>(rem, full.counts[t]);
      for (std::uint64_t c = 0; c <= hi; ++c) {
        cur.counts[t] = static_cast<std::uint32_t>(c);
        if (!rec(t + 1, rem - c)) return false;
      }
      return true;
    };
    if (dim == 0) break;
    if (!rec(0, g)) return false;
  }
  return true;
}

std::vector<ValuationVector> proper_sub_multisets(const Word& u) {
  std::vector<ValuationVector> out;
  for_each_proper_sub_multiset(valuation(u), [&](const ValuationVector& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "ε";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += "*";
    s += alphabet.labels.at(w.letters[i]);
  }
  return s;
}

}  // namespace monoidlab
