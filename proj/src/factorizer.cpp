#include "monoidlab/factorizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace monoidlab {

namespace {

using CountVec = std::vector<std::uint32_t>;

struct VecHash {
  std::size_t operator()(const CountVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::uint64_t vec_sum(const CountVec& v) {
  std::uint64_t s = 0;
  for (auto c : v) s += c;
  return s;
}

bool vec_leq(const CountVec& a, const CountVec& b) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] > b[t]) return false;
  return true;
}

std::vector<std::uint32_t> identity_slots(std::uint32_t k) {
  std::vector<std::uint32_t> s(k);
  std::iota(s.begin(), s.end(), 0u);
  return s;
}

void validate_letters(const FiniteMonoid& M, const std::vector<Element>& letters) {
  std::unordered_set<Element> seen;
  for (auto a : letters) {
    if (a >= M.size())
      throw std::invalid_argument("letter element out of range for the monoid");
    if (!seen.insert(a).second)
      throw std::invalid_argument("letter list contains a duplicate element");
  }
}

/// Full-lattice reach sets for every sub-vector r <= gamma: reach(r) is the
/// set of values of words whose slot counts are exactly r. Enumerated grade
/// by grade; stops early (returning partial data) once stop(grade_map, g)
/// returns true.
using ReachMap = std::unordered_map<CountVec, ElementSet, VecHash>;

ReachMap full_reach_table(const FiniteMonoid& M, const std::vector<Element>& letters,
                          const std::vector<std::uint32_t>& slot_of, const CountVec& gamma,
                          const std::function<bool(const ReachMap&, std::uint64_t)>& stop = {}) {
  const std::uint32_t k = static_cast<std::uint32_t>(gamma.size());
  std::vector<std::vector<std::uint32_t>> letters_by_slot(k);
  for (std::uint32_t t = 0; t < slot_of.size(); ++t)
    letters_by_slot[slot_of[t]].push_back(t);

  ReachMap table;
  ElementSet r0(M.size());
  r0.set(M.identity());
  CountVec zero(k, 0);
  table.emplace(zero, r0);

  std::vector<CountVec> frontier{zero};
  const std::uint64_t total = vec_sum(gamma);
  for (std::uint64_t g = 1; g <= total && !frontier.empty(); ++g) {
    if (stop && stop(table, g - 1)) break;
    std::unordered_set<CountVec, VecHash> cands;
    for (const auto& v : frontier)
      for (std::uint32_t c = 0; c < k; ++c)
        if (v[c] < gamma[c]) {
          CountVec w = v;
          ++w[c];
          cands.insert(std::move(w));
        }
    std::vector<CountVec> next;
    next.reserve(cands.size());
    for (const auto& cand : cands) {
      ElementSet reach(M.size());
      for (std::uint32_t c = 0; c < k; ++c) {
        if (cand[c] == 0) continue;
        CountVec pred = cand;
        --pred[c];
        const auto it = table.find(pred);
        for (auto t : letters_by_slot[c]) {
          const Element a = letters[t];
          it->second.for_each([&](Element y) { reach.set(M.mul(y, a)); });
        }
      }
      table.emplace(cand, std::move(reach));
      next.push_back(cand);
    }
    frontier = std::move(next);
  }
  return table;
}

/// Antichain of componentwise-minimal vectors under streaming insertion.
class MinAntichain {
 public:
  bool dominated(const CountVec& v) const {
    for (const auto& m : members_)
      if (vec_leq(m, v)) return true;
    return false;
  }

  void insert(const CountVec& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (vec_leq(members_[i], v)) return;  // dominated: not minimal
      if (!vec_leq(v, members_[i])) {
        if (w != i) members_[w] = std::move(members_[i]);
        ++w;
      }
    }
    members_.resize(w);
    members_.push_back(v);
  }

  const std::vector<CountVec>& members() const { return members_; }

 private:
  std::vector<CountVec> members_;
};

}  // namespace

bool LengthSet::contains(std::uint32_t k) const {
  return std::binary_search(values.begin(), values.end(), k);
}

// ---------------------------------------------------------------------------
// MinimalWordEngine
// ---------------------------------------------------------------------------

MinimalWordEngine::MinimalWordEngine(const FiniteMonoid& M, std::vector<Element> letters,
                                     std::vector<std::uint32_t> slot_of)
    : monoid_(M), letters_(std::move(letters)), slot_of_(std::move(slot_of)) {
  validate_letters(monoid_, letters_);
  if (slot_of_.size() != letters_.size())
    throw std::invalid_argument("engine: slot map size mismatch");
  for (auto s : slot_of_) num_slots_ = std::max(num_slots_, s + 1);
  run();
}

void MinimalWordEngine::run() {
  const std::uint32_t n = monoid_.size();
  min_sets_.assign(n, {});

  std::vector<std::vector<std::uint32_t>> letters_by_slot(num_slots_);
  for (std::uint32_t t = 0; t < slot_of_.size(); ++t)
    letters_by_slot[slot_of_[t]].push_back(t);

  // Graded search over slot-count vectors, keeping only vectors that are
  // minimal for at least one target ("live"). A vector of counts gamma is
  // minimal for x when x is a product of some word with counts gamma and no
  // strictly smaller vector achieves x. Dead vectors stay dead under
  // extension, and every minimal vector extends a live one by one slot, so
  // the frontier of live vectors is a complete search basis. Reach sets are
  // accumulated along live predecessors only; a peeling argument shows this
  // still sees every (x, gamma) with gamma minimal for x.
  std::unordered_map<CountVec, ElementSet, VecHash> frontier;
  const CountVec zero(num_slots_, 0);
  ElementSet r0(n);
  r0.set(monoid_.identity());
  frontier.emplace(zero, r0);
  min_sets_[monoid_.identity()].push_back(ValuationVector{zero});

  for (std::uint32_t g = 1; !frontier.empty(); ++g) {
    // No minimal word is longer than |M|: a longer word has two equal prefix
    // products, and deleting the middle block leaves a strictly smaller word
    // with the same value.
    if (g > n)
      throw std::logic_error("minimal-word search exceeded the monoid-size bound");

    std::unordered_set<CountVec, VecHash> cands;
    for (const auto& [v, reach] : frontier)
      for (std::uint32_t c = 0; c < num_slots_; ++c) {
        CountVec w = v;
        ++w[c];
        cands.insert(std::move(w));
      }

    std::unordered_map<CountVec, ElementSet, VecHash> next;
    for (const auto& cand : cands) {
      ElementSet reach(n);
      for (std::uint32_t c = 0; c < num_slots_; ++c) {
        if (cand[c] == 0) continue;
        CountVec pred = cand;
        --pred[c];
        const auto it = frontier.find(pred);
        if (it == frontier.end()) continue;  // dead predecessor
        for (auto t : letters_by_slot[c]) {
          const Element a = letters_[t];
          it->second.for_each([&](Element y) { reach.set(monoid_.mul(y, a)); });
        }
      }
      bool live = false;
      reach.for_each([&](Element x) {
        auto& anti = min_sets_[x];
        for (const auto& m : anti)
          if (vec_leq(m.counts, cand)) return;
        anti.push_back(ValuationVector{cand});
        live = true;
      });
      if (live) next.emplace(cand, std::move(reach));
    }
    frontier = std::move(next);
  }
}

std::vector<std::uint32_t> MinimalWordEngine::minimal_lengths(Element x) const {
  std::vector<std::uint32_t> out;
  for (const auto& v : min_sets_[x]) out.push_back(static_cast<std::uint32_t>(v.total()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ElementSet MinimalWordEngine::reach_of(const ValuationVector& gamma) const {
  auto table = full_reach_table(monoid_, letters_, slot_of_, gamma.counts);
  return table.at(gamma.counts);
}

std::vector<Word> MinimalWordEngine::words_for(const ValuationVector& gamma, Element x) const {
  const auto table = full_reach_table(monoid_, letters_, slot_of_, gamma.counts);
  const auto num_letters = static_cast<std::uint32_t>(letters_.size());

  std::vector<Word> out;
  CountVec remaining = gamma.counts;
  std::vector<LetterId> prefix;
  // Depth-first over prefixes; a branch survives iff some suffix with the
  // remaining counts completes the product to x.
  std::function<void(Element)> dfs = [&](Element p) {
    if (vec_sum(remaining) == 0) {
      if (p == x) out.push_back(Word{prefix, num_letters});
      return;
    }
    for (std::uint32_t t = 0; t < num_letters; ++t) {
      const std::uint32_t c = slot_of_[t];
      if (remaining[c] == 0) continue;
      --remaining[c];
      const Element p2 = monoid_.mul(p, letters_[t]);
      bool feasible = false;
      table.at(remaining).for_each([&](Element q) {
        if (!feasible && monoid_.mul(p2, q) == x) feasible = true;
      });
      if (feasible) {
        prefix.push_back(t);
        dfs(p2);
        prefix.pop_back();
      }
      ++remaining[c];
    }
  };
  dfs(monoid_.identity());
  std::sort(out.begin(), out.end());
  return out;
}

Word MinimalWordEngine::lex_least_word_for(const ValuationVector& gamma, Element x) const {
  const auto table = full_reach_table(monoid_, letters_, slot_of_, gamma.counts);
  const auto num_letters = static_cast<std::uint32_t>(letters_.size());

  CountVec remaining = gamma.counts;
  std::vector<LetterId> word;
  Element p = monoid_.identity();
  const auto total = vec_sum(gamma.counts);
  for (std::uint64_t step = 0; step < total; ++step) {
    bool advanced = false;
    for (std::uint32_t t = 0; t < num_letters && !advanced; ++t) {
      const std::uint32_t c = slot_of_[t];
      if (remaining[c] == 0) continue;
      --remaining[c];
      const Element p2 = monoid_.mul(p, letters_[t]);
      bool feasible = false;
      table.at(remaining).for_each([&](Element q) {
        if (!feasible && monoid_.mul(p2, q) == x) feasible = true;
      });
      if (feasible) {
        word.push_back(t);
        p = p2;
        advanced = true;
      } else {
        ++remaining[c];
      }
    }
    if (!advanced)
      throw std::invalid_argument("lex_least_word_for: no word realizes the pair");
  }
  if (p != x) throw std::invalid_argument("lex_least_word_for: no word realizes the pair");
  return Word{std::move(word), num_letters};
}

// ---------------------------------------------------------------------------
// Letter-level operations
// ---------------------------------------------------------------------------

ElementSet achievable_products(const FiniteMonoid& M, const std::vector<Element>& letters,
                               const ValuationVector& multiset) {
  validate_letters(M, letters);
  if (multiset.dimension() != letters.size())
    throw std::invalid_argument("achievable_products: multiset dimension mismatch");
  const auto table =
      full_reach_table(M, letters, identity_slots(multiset.dimension()), multiset.counts);
  return table.at(multiset.counts);
}

bool is_minimal_word(const FiniteMonoid& M, const std::vector<Element>& A, const Word& w) {
  validate_letters(M, A);
  if (w.alphabet_size != A.size())
    throw std::invalid_argument("is_minimal_word: word alphabet must index A");
  Element x = M.identity();
  for (auto l : w.letters) x = M.mul(x, A[l]);

  const ValuationVector full = valuation(w);
  // Graded reach computation with early exit: the word is non-minimal as soon
  // as any proper sub-multiset achieves x.
  bool minimal = true;
  full_reach_table(M, A, identity_slots(full.dimension()), full.counts,
                   [&](const ReachMap& table, std::uint64_t completed_grade) {
                     for (const auto& [vec, reach] : table) {
                       if (vec_sum(vec) != completed_grade) continue;
                       if (vec != full.counts && reach.test(x)) {
                         minimal = false;
                         return true;
                       }
                     }
                     // The full grade is never a proper sub-multiset.
                     return completed_grade + 1 >= full.total();
                   });
  return minimal;
}

MinimalWords minimal_words(const FiniteMonoid& M, const std::vector<Element>& A, Element x) {
  if (x >= M.size()) throw std::invalid_argument("minimal_words: target out of range");
  MinimalWordEngine engine(M, A, identity_slots(static_cast<std::uint32_t>(A.size())));
  MinimalWords out;
  out.multisets = engine.minimal_vectors(x);
  std::sort(out.multisets.begin(), out.multisets.end());
  if (!M.commutative()) {
    for (const auto& gamma : out.multisets) {
      auto words = engine.words_for(gamma, x);
      out.words.insert(out.words.end(), words.begin(), words.end());
    }
    std::sort(out.words.begin(), out.words.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// FactorizationAnalysis
// ---------------------------------------------------------------------------

namespace {

std::vector<std::uint32_t> irreducible_slots(const PremonClassification& cls,
                                             const std::vector<Element>& letters) {
  // Re-index the equivalence classes met among the irreducibles by first
  // appearance, so slots are dense.
  std::vector<std::uint32_t> slot_of(letters.size());
  std::unordered_map<std::uint32_t, std::uint32_t> reindex;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const std::uint32_t cls_id = cls.equiv_class_of[letters[t]];
    auto [it, inserted] = reindex.emplace(cls_id, static_cast<std::uint32_t>(reindex.size()));
    slot_of[t] = it->second;
  }
  return slot_of;
}

}  // namespace

FactorizationAnalysis::FactorizationAnalysis(const Premon& P, std::uint32_t max_length)
    : premon_(P),
      classification_(classify(P)),
      letters_(classification_.irreducibles.to_vector()),
      letter_slot_(irreducible_slots(classification_, letters_)),
      max_length_(max_length),
      engine_(premon_.monoid(), letters_, letter_slot_) {
  const auto& M = premon_.monoid();
  reachable_at_.reserve(max_length_ + 1);
  ElementSet r(M.size());
  r.set(M.identity());
  reachable_at_.push_back(r);
  for (std::uint32_t j = 1; j <= max_length_; ++j) {
    ElementSet next(M.size());
    reachable_at_.back().for_each([&](Element y) {
      for (auto a : letters_) next.set(M.mul(y, a));
    });
    reachable_at_.push_back(std::move(next));
  }
}

LengthSet FactorizationAnalysis::length_set(Element x) const {
  LengthSet ls;
  for (std::uint32_t j = 0; j <= max_length_; ++j)
    if (reachable_at_[j].test(x)) ls.values.push_back(j);
  ls.truncated = reachable_at_[max_length_].test(x);
  return ls;
}

LengthSet FactorizationAnalysis::minimal_length_set(Element x) const {
  return LengthSet{engine_.minimal_lengths(x), false};
}

std::pair<LengthSet, LengthSet> FactorizationAnalysis::unions(std::uint32_t k) const {
  LengthSet u, um;
  if (k == 0) return {u, um};  // no non-unit has length 0
  const std::uint32_t n = premon_.size();
  std::vector<bool> in_u(max_length_ + 1, false);
  std::vector<bool> in_um(premon_.size() + 1, false);
  for (Element x = 0; x < n; ++x) {
    if (classification_.units.test(x)) continue;
    const LengthSet lx = length_set(x);
    if (lx.contains(k)) {
      for (auto v : lx.values) in_u[v] = true;
      u.truncated = u.truncated || lx.truncated;
    }
    const LengthSet mx = minimal_length_set(x);
    if (mx.contains(k))
      for (auto v : mx.values) in_um[v] = true;
  }
  if (k > max_length_)
    u.truncated = true;  // contributors beyond the enumeration cap are unknown
  for (std::uint32_t v = 0; v < in_u.size(); ++v)
    if (in_u[v]) u.values.push_back(v);
  for (std::uint32_t v = 0; v < in_um.size(); ++v)
    if (in_um[v]) um.values.push_back(v);
  return {u, um};
}

Elasticity FactorizationAnalysis::minimal_elasticity_of(Element x) const {
  const auto lengths = engine_.minimal_lengths(x);
  std::vector<std::uint32_t> positive;
  for (auto l : lengths)
    if (l > 0) positive.push_back(l);
  if (positive.empty()) return Elasticity::zero();
  return Elasticity::ratio(positive.back(), positive.front(), true);
}

Elasticity FactorizationAnalysis::minimal_elasticity() const {
  Elasticity best = Elasticity::zero();
  for (Element x = 0; x < premon_.size(); ++x) {
    if (classification_.units.test(x)) continue;
    const Elasticity e = minimal_elasticity_of(x);
    if (best < e) best = e;
  }
  return best;
}

Elasticity FactorizationAnalysis::classical_elasticity_of(Element x) const {
  const LengthSet ls = length_set(x);
  std::vector<std::uint32_t> positive;
  for (auto l : ls.values)
    if (l > 0) positive.push_back(l);
  const bool exact = !ls.truncated;
  if (positive.empty()) return Elasticity::zero(exact);
  auto e = Elasticity::ratio(positive.back(), positive.front(), exact);
  return e;
}

Elasticity FactorizationAnalysis::classical_elasticity() const {
  Elasticity best = Elasticity::zero();
  bool exact = true;
  for (Element x = 0; x < premon_.size(); ++x) {
    if (classification_.units.test(x)) continue;
    const Elasticity e = classical_elasticity_of(x);
    exact = exact && e.exact;
    if (best < e) best = e;
  }
  best.exact = exact;
  return best;
}

// ---------------------------------------------------------------------------
// Premon-level operations
// ---------------------------------------------------------------------------

Factorizations factorizations(const Premon& P, Element x, std::uint32_t max_length) {
  if (x >= P.size()) throw std::invalid_argument("factorizations: target out of range");
  const auto& M = P.monoid();
  const PremonClassification cls = classify(P);
  const std::vector<Element> letters = cls.irreducibles.to_vector();

  // Products of exactly-j irreducible words, for suffix-feasibility pruning.
  std::vector<ElementSet> at(max_length + 1, ElementSet(M.size()));
  at[0].set(M.identity());
  for (std::uint32_t j = 1; j <= max_length; ++j)
    at[j - 1].for_each([&](Element y) {
      for (auto a : letters) at[j].set(M.mul(y, a));
    });

  Factorizations out;
  out.truncated = at[max_length].test(x);

  std::vector<LetterId> prefix;
  std::function<void(Element, std::uint32_t)> dfs = [&](Element p, std::uint32_t len) {
    if (p == x) out.words.push_back(make_word(prefix, M.size()));
    if (len == max_length) return;
    for (auto a : letters) {
      const Element p2 = M.mul(p, a);
      bool feasible = false;
      for (std::uint32_t j = 0; j + len + 1 <= max_length && !feasible; ++j) {
        at[j].for_each([&](Element q) {
          if (!feasible && M.mul(p2, q) == x) feasible = true;
        });
      }
      if (feasible) {
        prefix.push_back(a);
        dfs(p2, len + 1);
        prefix.pop_back();
      }
    }
  };
  dfs(M.identity(), 0);
  std::sort(out.words.begin(), out.words.end());
  return out;
}

MinimalFactorizations minimal_factorizations(const FactorizationAnalysis& analysis,
                                             Element x) {
  const auto& engine = analysis.engine();
  const auto& letters = analysis.irreducible_letters();
  const std::uint32_t n = analysis.premon().size();

  MinimalFactorizations out;
  std::vector<ValuationVector> vectors = engine.minimal_vectors(x);
  std::sort(vectors.begin(), vectors.end());
  for (const auto& gamma : vectors) {
    Word w = engine.lex_least_word_for(gamma, x);
    // Convert letter indices to monoid elements; the letter list is sorted
    // ascending, so lexicographic order is preserved.
    std::vector<LetterId> elems;
    elems.reserve(w.letters.size());
    for (auto t : w.letters) elems.push_back(letters[t]);
    out.representatives.push_back(make_word(std::move(elems), n));
    out.class_vectors.push_back(gamma);
  }
  out.class_count = static_cast<std::uint32_t>(out.representatives.size());
  return out;
}

MinimalFactorizations minimal_factorizations(const Premon& P, Element x) {
  if (x >= P.size()) throw std::invalid_argument("minimal_factorizations: target out of range");
  return minimal_factorizations(FactorizationAnalysis(P, 0), x);
}

std::pair<LengthSet, LengthSet> length_sets(const Premon& P, Element x,
                                            std::uint32_t max_length) {
  if (x >= P.size()) throw std::invalid_argument("length_sets: target out of range");
  FactorizationAnalysis a(P, max_length);
  return {a.length_set(x), a.minimal_length_set(x)};
}

std::pair<LengthSet, LengthSet> unions(const Premon& P, std::uint32_t k,
                                       std::uint32_t max_length) {
  return FactorizationAnalysis(P, max_length).unions(k);
}

Elasticity minimal_elasticity(const Premon& P) {
  return FactorizationAnalysis(P, 0).minimal_elasticity();
}

Elasticity classical_elasticity(const Premon& P, std::uint32_t max_length) {
  return FactorizationAnalysis(P, max_length).classical_elasticity();
}

Elasticity classical_elasticity_of(const Premon& P, Element x, std::uint32_t max_length) {
  if (x >= P.size()) throw std::invalid_argument("classical_elasticity_of: target out of range");
  return FactorizationAnalysis(P, max_length).classical_elasticity_of(x);
}

namespace {

Elasticity minimal_A_elasticity_from(const MinimalWordEngine& engine, std::uint32_t size) {
  Elasticity best = Elasticity::zero();
  for (Element x = 0; x < size; ++x) {
    const auto lengths = engine.minimal_lengths(x);
    std::vector<std::uint32_t> positive;
    for (auto l : lengths)
      if (l > 0) positive.push_back(l);
    if (positive.empty()) continue;
    const Elasticity e = Elasticity::ratio(positive.back(), positive.front(), true);
    if (best < e) best = e;
  }
  return best;
}

}  // namespace

Elasticity minimal_A_elasticity(const FiniteMonoid& M, const std::vector<Element>& A) {
  MinimalWordEngine engine(M, A, identity_slots(static_cast<std::uint32_t>(A.size())));
  return minimal_A_elasticity_from(engine, M.size());
}

std::vector<ValuationVector> dickson_minimal(const std::vector<ValuationVector>& vectors,
                                             kernels::Exec exec) {
  std::vector<CountVec> raw;
  raw.reserve(vectors.size());
  for (const auto& v : vectors) raw.push_back(v.counts);
  auto minima = kernels::dickson_minimal(raw, exec);
  std::vector<ValuationVector> out;
  out.reserve(minima.size());
  for (auto& m : minima) out.push_back(ValuationVector{std::move(m)});
  return out;
}

Elasticity rho_star_bound(const FiniteMonoid& M, const std::vector<Element>& A) {
  if (!M.commutative())
    throw std::invalid_argument("rho_star_bound: the monoid must be commutative");
  if (A.empty()) throw std::invalid_argument("rho_star_bound: A must be non-empty");
  validate_letters(M, A);

  const auto s = static_cast<std::uint32_t>(A.size());
  const std::uint32_t n = M.size();
  MinimalWordEngine engine(M, A, identity_slots(s));

  // Exponent caps: pow[t] lists the distinct values of a_t^j (j = 0..cap_t);
  // any larger exponent repeats one of these, so capping components of the
  // b-part only removes triples dominated by in-cap triples.
  std::vector<std::vector<Element>> pow(s);
  for (std::uint32_t t = 0; t < s; ++t) {
    pow[t].push_back(M.identity());
    ElementSet seen(n);
    Element cur = M.identity();
    while (true) {
      cur = M.mul(cur, A[t]);
      if (seen.test(cur)) break;
      seen.set(cur);
      pow[t].push_back(cur);
    }
  }
  auto product_of = [&](const CountVec& v) {
    Element p = M.identity();
    for (std::uint32_t t = 0; t < s; ++t) p = M.mul(p, pow[t][v[t]]);
    return p;
  };

  // Enumerate candidate b-vectors, bucketed by their product.
  std::vector<std::vector<CountVec>> bucket(n);
  {
    CountVec vb(s, 0);
    while (true) {
      // odometer increment
      std::uint32_t t = 0;
      while (t < s && vb[t] + 1 >= pow[t].size()) {
        vb[t] = 0;
        ++t;
      }
      if (t == s) break;
      ++vb[t];
      bucket[product_of(vb)].push_back(vb);
    }
  }

  // Stream the capped triple set through the Dickson antichain.
  MinAntichain antichain;
  CountVec image(3 * std::size_t{s});
  for (Element x = 0; x < n; ++x) {
    for (const auto& m : engine.minimal_vectors(x)) {
      // All splits m = va + vz.
      CountVec vz(s, 0);
      while (true) {
        const Element pz = product_of(vz);
        for (Element y = 0; y < n; ++y) {
          if (bucket[y].empty() || M.mul(y, pz) != x) continue;
          for (const auto& vb : bucket[y]) {
            for (std::uint32_t t = 0; t < s; ++t) {
              image[t] = m.counts[t] - vz[t];  // va
              image[s + t] = vb[t];
              image[2 * std::size_t{s} + t] = vz[t];
            }
            antichain.insert(image);
          }
        }
        // odometer over vz <= m
        std::uint32_t t = 0;
        while (t < s && vz[t] + 1 > m.counts[t]) {
          vz[t] = 0;
          ++t;
        }
        if (t == s) break;
        ++vz[t];
      }
    }
  }

  Elasticity r = Elasticity::zero();
  for (const auto& v : antichain.members()) {
    std::int64_t num = 0, den = 0;
    for (std::uint32_t t = 0; t < s; ++t) {
      num += v[t];
      den += v[s + t];
    }
    const Elasticity e = Elasticity::ratio(num, den, true);
    if (r < e) r = e;
  }

  const Elasticity rho_m = minimal_A_elasticity_from(engine, n);
  if (!(rho_m <= r))
    throw std::logic_error("rho_star_bound: bound fell below the minimal A-elasticity");
  return r;
}

}  // namespace monoidlab
