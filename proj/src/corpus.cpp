#include "monoidlab/corpus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "monoidlab/factorizer.hpp"
#include "monoidlab/reference.hpp"

namespace monoidlab::corpus {

void SuiteResult::check(bool ok, const std::string& message) {
  ++checks;
  if (!ok) {
    ++failures;
    if (failure_messages.size() < 20) failure_messages.push_back(message);
  }
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

namespace {

/// Relabel a closed subset of a host monoid as an abstract Cayley table.
FiniteMonoid relabel_submonoid(const FiniteMonoid& host, const ElementSet& closed) {
  const auto members = closed.to_vector();
  std::vector<std::uint32_t> index(host.size(), 0);
  for (std::uint32_t i = 0; i < members.size(); ++i) index[members[i]] = i;
  const auto n = static_cast<std::uint32_t>(members.size());
  std::vector<Element> flat(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      flat[std::size_t{i} * n + j] = index[host.mul(members[i], members[j])];
  return FiniteMonoid::from_flat_table(std::move(flat), n, index[host.identity()]);
}

FiniteMonoid truncated_addition(std::uint32_t k) {
  const std::uint32_t n = k + 1;
  std::vector<Element> flat(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y)
      flat[std::size_t{x} * n + y] = std::min(x + y, k);
  return FiniteMonoid::from_flat_table(std::move(flat), n, 0);
}

FiniteMonoid max_semilattice(std::uint32_t k) {
  const std::uint32_t n = k + 1;
  std::vector<Element> flat(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = std::max(x, y);
  return FiniteMonoid::from_flat_table(std::move(flat), n, 0);
}

FiniteMonoid cyclic_group(std::uint32_t n) {
  std::vector<Element> flat(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) flat[std::size_t{x} * n + y] = (x + y) % n;
  return FiniteMonoid::from_flat_table(std::move(flat), n, 0);
}

FiniteMonoid left_zero_with_identity() {
  // e, x, y with x*x = x*y = x and y*x = y*y = y.
  return FiniteMonoid::from_cayley_table({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0,
                                         {"e", "x", "y"});
}

FiniteMonoid full_transformation_monoid_2() {
  // id, swap, const0, const1 as functions on {0, 1}, composed left to right.
  const std::vector<std::array<std::uint32_t, 2>> fns{{0, 1}, {1, 0}, {0, 0}, {1, 1}};
  std::vector<Element> flat(16);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) {
      std::array<std::uint32_t, 2> comp{fns[j][fns[i][0]], fns[j][fns[i][1]]};
      for (std::uint32_t k = 0; k < 4; ++k)
        if (fns[k] == comp) flat[std::size_t{i} * 4 + j] = k;
    }
  return FiniteMonoid::from_flat_table(std::move(flat), 4, 0,
                                       {"id", "swap", "c0", "c1"});
}

}  // namespace

std::vector<Instance> builtin_instances() {
  std::vector<Instance> out;
  out.push_back({trivial_monoid(), "trivial"});
  out.push_back({mul_mod(4), "mul_mod:4"});
  out.push_back({mul_mod(8), "mul_mod:8"});
  out.push_back({mul_mod(9), "mul_mod:9"});
  out.push_back({mul_mod(12), "mul_mod:12"});
  out.push_back({reduced_power_monoid(3), "power:3"});
  out.push_back({reduced_power_monoid(4), "power:4"});
  out.push_back({truncated_addition(3), "trunc_add:3"});
  out.push_back({max_semilattice(3), "max_lattice:3"});
  out.push_back({left_zero_with_identity(), "left_zero+1"});
  out.push_back({full_transformation_monoid_2(), "T2"});
  return out;
}

std::vector<Instance> random_commutative(std::uint32_t count, std::uint32_t size_min,
                                         std::uint32_t size_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Instance> out;
  std::uint32_t attempts = 0;
  std::uint32_t tiny_accepted = 0;  // quota so size-2 closures don't dominate
  while (out.size() < count && attempts < 400u * count) {
    ++attempts;
    FiniteMonoid host = trivial_monoid();
    std::string kind;
    switch (rng.below(5)) {
      case 0:
      case 1: {
        const std::uint32_t n = 4 + rng.below(29);  // 4..32
        host = mul_mod(n);
        kind = "mul_mod" + std::to_string(n);
        break;
      }
      case 2: {
        const std::uint32_t k = 1 + rng.below(5);
        host = truncated_addition(k);
        kind = "trunc" + std::to_string(k);
        break;
      }
      case 3: {
        const std::uint32_t k = 1 + rng.below(5);
        host = max_semilattice(k);
        kind = "lat" + std::to_string(k);
        break;
      }
      default: {
        const std::uint32_t n = 2 + rng.below(7);  // 2..8
        host = cyclic_group(n);
        kind = "cyc" + std::to_string(n);
        break;
      }
    }
    ElementSet gens(host.size());
    const std::uint32_t g = 1 + rng.below(3);
    for (std::uint32_t i = 0; i < g; ++i) gens.set(rng.below(host.size()));
    const ElementSet closed = submonoid_generated(host, gens);
    if (closed.count() < size_min || closed.count() > size_max) continue;
    if (closed.count() == 2) {
      if (tiny_accepted >= count / 3 + 1) continue;
      ++tiny_accepted;
    }
    out.push_back({relabel_submonoid(host, closed),
                   "rc" + std::to_string(out.size()) + "(" + kind + ")"});
  }
  if (out.size() < count)
    throw std::runtime_error("random_commutative: could not fill the corpus");
  return out;
}

std::vector<Instance> random_general(std::uint32_t count, std::uint32_t size_min,
                                     std::uint32_t size_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Instance> out;
  std::uint32_t attempts = 0;
  while (out.size() < count && attempts < 400u * count) {
    ++attempts;
    const std::uint32_t m = 2 + rng.below(2);  // transformations of 2..3 points
    const std::uint32_t g = 1 + rng.below(2);
    // Functions encoded as base-m digit strings; composition f then h.
    std::vector<std::vector<std::uint32_t>> fns;
    std::vector<std::uint32_t> id(m);
    for (std::uint32_t p = 0; p < m; ++p) id[p] = p;
    fns.push_back(id);
    for (std::uint32_t i = 0; i < g; ++i) {
      std::vector<std::uint32_t> f(m);
      for (std::uint32_t p = 0; p < m; ++p) f[p] = rng.below(m);
      fns.push_back(f);
    }
    // Close under composition.
    std::set<std::vector<std::uint32_t>> seen(fns.begin(), fns.end());
    std::vector<std::vector<std::uint32_t>> queue(seen.begin(), seen.end());
    bool too_big = false;
    for (std::size_t i = 0; i < queue.size() && !too_big; ++i)
      for (std::size_t j = 0; j < queue.size() && !too_big; ++j) {
        std::vector<std::uint32_t> comp(m);
        for (std::uint32_t p = 0; p < m; ++p) comp[p] = queue[j][queue[i][p]];
        if (seen.insert(comp).second) {
          queue.push_back(comp);
          if (seen.size() > size_max) too_big = true;
        }
      }
    if (too_big || seen.size() < size_min) continue;

    std::vector<std::vector<std::uint32_t>> members(seen.begin(), seen.end());
    const auto n = static_cast<std::uint32_t>(members.size());
    auto index_of = [&](const std::vector<std::uint32_t>& f) {
      return static_cast<std::uint32_t>(
          std::lower_bound(members.begin(), members.end(), f) - members.begin());
    };
    std::vector<Element> flat(std::size_t{n} * n);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        std::vector<std::uint32_t> comp(m);
        for (std::uint32_t p = 0; p < m; ++p) comp[p] = members[j][members[i][p]];
        flat[std::size_t{i} * n + j] = index_of(comp);
      }
    out.push_back({FiniteMonoid::from_flat_table(std::move(flat), n, index_of(id)),
                   "rt" + std::to_string(out.size()) + "(T" + std::to_string(m) + ")"});
  }
  if (out.size() < count)
    throw std::runtime_error("random_general: could not fill the corpus");
  return out;
}

std::vector<Element> random_letter_set(const FiniteMonoid& M, Rng& rng,
                                       std::uint32_t max_letters) {
  const std::uint32_t want = 1 + rng.below(std::min(max_letters, M.size()));
  ElementSet picked(M.size());
  for (std::uint32_t i = 0; i < want; ++i) picked.set(rng.below(M.size()));
  return picked.to_vector();
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

Word random_word(Rng& rng, std::uint32_t alphabet, std::uint32_t max_len) {
  const std::uint32_t len = rng.below(max_len + 1);
  std::vector<LetterId> letters(len);
  for (auto& l : letters) l = rng.below(alphabet);
  return Word{std::move(letters), alphabet};
}

}  // namespace

SuiteResult suite_word_preorders(std::uint64_t seed) {
  SuiteResult r{"word-preorders"};
  Rng rng(seed);
  const std::uint32_t alphabet = 3;

  for (int it = 0; it < 400; ++it) {
    const Word u = random_word(rng, alphabet, 6);
    const Word v = random_word(rng, alphabet, 6);
    const Word w = random_word(rng, alphabet, 6);
    r.check(is_permuted_subword(u, u), "reflexivity");
    if (is_permuted_subword(u, v) && is_permuted_subword(v, w))
      r.check(is_permuted_subword(u, w), "transitivity");
    if (is_strict_permuted_subword(u, v))
      r.check(u.length() < v.length(), "artinianity surrogate: strict implies shorter");
    r.check((is_permuted_subword(u, v) && is_permuted_subword(v, u)) ==
                (valuation(u) == valuation(v)),
            "mutual embedding iff equal valuations");
    // Strong positivity: padding preserves the relation and its strictness.
    const Word p = random_word(rng, alphabet, 3);
    const Word q = random_word(rng, alphabet, 3);
    const Word pu = concat(concat(p, u), q);
    const Word pv = concat(concat(p, v), q);
    if (is_permuted_subword(u, v)) r.check(is_permuted_subword(pu, pv), "strong positivity");
    if (is_strict_permuted_subword(u, v))
      r.check(is_strict_permuted_subword(pu, pv), "strong positivity, strict");
    // Against the injection-search definition.
    r.check(is_permuted_subword(u, v) == reference::permuted_subword_by_injection(u, v),
            "valuation dominance equals injection search");
  }

  // shuffling_leq with the discrete partition coincides with the permuted
  // subword preorder, exhaustively up to length 6 over 3 letters.
  const auto eq = LetterEquivalence::discrete(alphabet);
  const auto words = reference::all_words(alphabet, 6);
  std::uint64_t mismatches = 0;
  for (const auto& u : words)
    for (const auto& v : words)
      if (shuffling_leq(u, v, eq) != is_permuted_subword(u, v)) ++mismatches;
  r.check(mismatches == 0, "shuffling with discrete partition == permuted subword");

  // Sub-multiset enumeration: counting formula and graded order.
  for (int it = 0; it < 50; ++it) {
    const Word u = random_word(rng, 4, 6);
    const auto subs = proper_sub_multisets(u);
    std::uint64_t expect = 1;
    for (auto c : valuation(u).counts) expect *= (c + 1);
    r.check(subs.size() == expect - 1, "sub-multiset count formula");
    bool graded = true, unique = true, proper = true;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (i + 1 < subs.size() && subs[i].total() > subs[i + 1].total()) graded = false;
      if (!strictly_dominated_by(subs[i], valuation(u))) proper = false;
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        if (subs[i] == subs[j]) unique = false;
    }
    r.check(graded && unique && proper, "sub-multiset enumeration well-formed");
  }
  return r;
}

SuiteResult suite_monoid_axioms(const std::vector<Instance>& instances, std::uint64_t seed) {
  SuiteResult r{"monoid-axioms"};
  Rng rng(seed);
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    // evaluate is a homomorphism.
    for (int it = 0; it < 20; ++it) {
      const Word u = random_word(rng, M.size(), 4);
      const Word v = random_word(rng, M.size(), 4);
      r.check(evaluate(M, concat(u, v)) == M.mul(evaluate(M, u), evaluate(M, v)),
              inst.name + ": evaluate homomorphism law");
    }
    r.check(evaluate(M, empty_word(M.size())) == M.identity(),
            inst.name + ": evaluate of the empty word");
    // Units form a submonoid containing the identity.
    const ElementSet u = units(M);
    r.check(u.test(M.identity()), inst.name + ": identity is a unit");
    bool closed = true;
    u.for_each([&](Element x) {
      u.for_each([&](Element y) {
        if (!u.test(M.mul(x, y))) closed = false;
      });
    });
    r.check(closed, inst.name + ": units closed under the operation");
    // Generated submonoid sanity.
    ElementSet all(M.size());
    for (Element x = 0; x < M.size(); ++x) all.set(x);
    r.check(submonoid_generated(M, ElementSet(M.size())).count() == 1,
            inst.name + ": <empty set> is the identity alone");
    r.check(submonoid_generated(M, all) == all, inst.name + ": <H> = H");
  }
  // Unit counts of mul_mod(p^k) match the totient.
  for (std::uint32_t n : {4u, 8u, 9u, 27u})
    r.check(units(mul_mod(n)).count() == reference::totient(n),
            "mul_mod(" + std::to_string(n) + ") unit count equals the totient");
  return r;
}

SuiteResult suite_acyclicity(const std::vector<Instance>& instances) {
  SuiteResult r{"acyclicity"};
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    const bool ac = is_acyclic(M);
    const bool uc = is_unit_cancellative(M);
    if (ac) r.check(uc, inst.name + ": acyclic implies unit-cancellative");
    if (M.commutative())
      r.check(ac == uc, inst.name + ": commutative acyclicity == unit-cancellativity");
  }
  return r;
}

SuiteResult suite_premon_structure(const std::vector<Instance>& instances) {
  SuiteResult r{"premon-structure"};
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    const Premon div = divisibility_premon(M);
    const Premon left = left_divisibility_premon(M);
    const Premon right = right_divisibility_premon(M);
    const ElementSet mu = units(M);

    const PremonClassification cd = classify(div);
    r.check(cd.units == mu, inst.name + ": divisibility premon units == monoid units");
    r.check((cd.irreducibles & cd.units).empty(),
            inst.name + ": irreducibles are non-units");
    // Units form exactly one equivalence class, the class of the identity.
    bool one_class = true;
    cd.units.for_each([&](Element x) {
      if (cd.equiv_class_of[x] != cd.equiv_class_of[M.identity()]) one_class = false;
    });
    for (Element x = 0; x < M.size(); ++x)
      if (!cd.units.test(x) &&
          cd.equiv_class_of[x] == cd.equiv_class_of[M.identity()])
        one_class = false;
    r.check(one_class, inst.name + ": units are exactly the identity's class");

    r.check(product_of_nonunits_closed(div),
            inst.name + ": divisibility non-units closed under products");
    r.check(product_of_nonunits_closed(left),
            inst.name + ": left-divisibility non-units closed under products");
    r.check(product_of_nonunits_closed(right),
            inst.name + ": right-divisibility non-units closed under products");

    if (M.commutative()) {
      bool same = true;
      for (Element x = 0; x < M.size(); ++x)
        if (left.upper_row(x) != right.upper_row(x) || left.upper_row(x) != div.upper_row(x))
          same = false;
      r.check(same, inst.name + ": commutative left == right == two-sided divisibility");
    }

    const ElementSet at = atoms(M);
    r.check(at.is_subset_of(cd.irreducibles),
            inst.name + ": atoms are divisibility-irreducibles");
    if (is_acyclic(M))
      r.check(at == cd.irreducibles, inst.name + ": acyclic atoms == irreducibles");

    if (M.commutative() && is_unit_cancellative(M)) {
      // Mutual divisibility coincides with associatedness up to units.
      bool agrees = true;
      for (Element x = 0; x < M.size() && agrees; ++x)
        for (Element y = 0; y < M.size(); ++y) {
          bool assoc = false;
          mu.for_each([&](Element w) {
            if (M.mul(y, w) == x) assoc = true;
          });
          if (div.equivalent(x, y) != assoc) {
            agrees = false;
            break;
          }
        }
      r.check(agrees,
              inst.name + ": unit-cancellative commutative equivalence classes are "
                          "associate classes");
    }
  }
  return r;
}

SuiteResult suite_reduction_to_irreducibles(const std::vector<Instance>& instances,
                                            std::uint64_t seed) {
  SuiteResult r{"reduction-to-irreducibles"};
  Rng rng(seed);
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    const Premon div = divisibility_premon(M);
    const PremonClassification cd = classify(div);
    const auto irr = cd.irreducibles.to_vector();

    // Random subsets of the irreducibles (plus the full set).
    std::vector<ElementSet> As;
    As.push_back(cd.irreducibles);
    for (int it = 0; it < 2; ++it) {
      ElementSet A(M.size());
      for (auto a : irr)
        if (rng.below(2)) A.set(a);
      As.push_back(A);
    }
    for (const auto& A : As) {
      // restrict_to_A asserts the three postconditions internally.
      const Premon PA = restrict_to_A(div, A);
      const PremonClassification ca = classify(PA);
      r.check(ca.irreducibles == A, inst.name + ": restricted irreducibles are A");
      const ElementSet S_complement = ca.units;
      ElementSet expected = submonoid_generated(M, A);
      cd.units.for_each([&](Element u) {
        if (expected.test(u)) expected.reset(u);
      });
      r.check(S_complement == expected.complement(),
              inst.name + ": restricted units are the complement of <A> minus units");
      bool equiv_ok = true;
      A.for_each([&](Element a) {
        A.for_each([&](Element b) {
          if (div.equivalent(a, b) != PA.equivalent(a, b)) equiv_ok = false;
        });
      });
      r.check(equiv_ok, inst.name + ": equivalence on A preserved");
    }
  }

  // A hand-built premon where two non-units multiply to a unit.
  {
    const FiniteMonoid z2 = cyclic_group(2);
    std::vector<ElementSet> rows(2, ElementSet(2));
    rows[0].set(0);
    rows[1].set(1);  // discrete preorder: only the identity is a preorder-unit
    const Premon discrete(z2, rows);
    r.check(!product_of_nonunits_closed(discrete),
            "discrete preorder on Z/2: non-units not closed under products");
  }
  return r;
}

SuiteResult suite_theorem_main(const std::vector<Instance>& commutative, std::uint64_t seed) {
  SuiteResult r{"theorem-main"};
  Rng rng(seed);
  for (const auto& inst : commutative) {
    const auto& M = inst.monoid;
    if (!M.commutative()) continue;
    const std::vector<Element> A = random_letter_set(M, rng, 4);
    const Elasticity rho_m = minimal_A_elasticity(M, A);
    r.check(rho_m.is_finite() && rho_m.exact,
            inst.name + ": minimal A-elasticity is a finite exact rational");
    const Elasticity bound = rho_star_bound(M, A);
    r.check(rho_m <= bound, inst.name + ": minimal A-elasticity bounded by rho*");
    bool has_non_identity = false;
    for (auto a : A)
      if (a != M.identity()) has_non_identity = true;
    if (has_non_identity)
      r.check(Elasticity::ratio(1, 1, true) <= bound,
              inst.name + ": rho* at least 1 (single-letter triple)");
  }
  return r;
}

SuiteResult suite_minimal_word_oracle(const std::vector<Instance>& instances,
                                      std::uint64_t seed) {
  SuiteResult r{"minimal-word-oracle"};
  Rng rng(seed);
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    if (M.size() > 5) continue;

    // Engine vs naive enumeration for minimal preorder-factorizations.
    const Premon div = divisibility_premon(M);
    const FactorizationAnalysis analysis(div, 0);
    const auto& letters = analysis.irreducible_letters();
    for (Element x = 0; x < M.size(); ++x) {
      std::vector<Word> engine_words;
      for (const auto& gamma : analysis.engine().minimal_vectors(x)) {
        for (const auto& w : analysis.engine().words_for(gamma, x)) {
          std::vector<LetterId> elems;
          for (auto t : w.letters) elems.push_back(letters[t]);
          engine_words.push_back(Word{std::move(elems), M.size()});
        }
      }
      std::sort(engine_words.begin(), engine_words.end());
      const auto naive = reference::naive_minimal_factorizations(div, x, M.size());
      r.check(engine_words == naive,
              inst.name + ": engine == naive minimal factorizations at element " +
                  std::to_string(x));
    }

    // Letter-level minimal words against the naive filter.
    const std::vector<Element> A = random_letter_set(M, rng, 3);
    std::vector<std::set<Word>> naive_by_target(M.size());
    for (Element x = 0; x < M.size(); ++x) {
      const MinimalWords mw = minimal_words(M, A, x);
      const auto naive = reference::naive_minimal_A_words(M, A, x, M.size());
      naive_by_target[x].insert(naive.begin(), naive.end());
      if (M.commutative()) {
        std::set<ValuationVector> naive_vals;
        for (const auto& w : naive) naive_vals.insert(valuation(w));
        const std::set<ValuationVector> engine_vals(mw.multisets.begin(), mw.multisets.end());
        r.check(engine_vals == naive_vals,
                inst.name + ": engine == naive minimal multisets at " + std::to_string(x));
      } else {
        r.check(mw.words == naive,
                inst.name + ": engine == naive minimal A-words at " + std::to_string(x));
      }
    }
    // is_minimal_word agrees with the naive filter on every word up to |M|.
    bool predicate_agrees = true;
    for (const auto& w :
         reference::all_words(static_cast<std::uint32_t>(A.size()), M.size())) {
      Element p = M.identity();
      for (auto l : w.letters) p = M.mul(p, A[l]);
      if (is_minimal_word(M, A, w) != (naive_by_target[p].count(w) > 0))
        predicate_agrees = false;
    }
    r.check(predicate_agrees,
            inst.name + ": is_minimal_word matches the naive filter exhaustively");

    // Arrangement products against factorial brute force.
    for (int it = 0; it < 5; ++it) {
      const std::vector<Element> B = random_letter_set(M, rng, 3);
      ValuationVector m;
      m.counts.resize(B.size());
      std::uint32_t total = 0;
      for (auto& c : m.counts) {
        c = rng.below(3);
        total += c;
      }
      if (total > 6) continue;
      r.check(achievable_products(M, B, m) == reference::products_of_all_arrangements(M, B, m),
              inst.name + ": achievable products == all-arrangements brute force");
    }
  }

  // Prefix-pigeonhole: no minimal word longer than |M|, searched to |M| + 2.
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    if (M.size() > 6) continue;
    Rng rng2(seed ^ 0x5bd1e995u);
    const std::vector<Element> A = random_letter_set(M, rng2, 4);
    const std::uint32_t hi = M.size() + 2;

    // Reach sets for every multiset up to total hi, bottom-up.
    std::map<std::vector<std::uint32_t>, ElementSet> reach;
    std::vector<std::vector<std::uint32_t>> frontier{std::vector<std::uint32_t>(A.size(), 0)};
    ElementSet r0(M.size());
    r0.set(M.identity());
    reach[frontier[0]] = r0;
    bool cap_respected = true;
    for (std::uint32_t g = 1; g <= hi; ++g) {
      std::set<std::vector<std::uint32_t>> next;
      for (const auto& v : frontier)
        for (std::size_t t = 0; t < A.size(); ++t) {
          auto w = v;
          ++w[t];
          next.insert(w);
        }
      for (const auto& v : next) {
        ElementSet acc(M.size());
        for (std::size_t t = 0; t < A.size(); ++t) {
          if (v[t] == 0) continue;
          auto pred = v;
          --pred[t];
          reach[pred].for_each([&](Element y) { acc.set(M.mul(y, A[t])); });
        }
        reach[v] = acc;
      }
      if (g > M.size()) {
        // Every multiset of this size must be non-minimal for every target.
        for (const auto& v : next) {
          bool minimal_somewhere = false;
          reach[v].for_each([&](Element x) {
            bool witnessed = false;
            for (const auto& [u, ru] : reach) {
              if (u == v) continue;
              bool leq = true;
              for (std::size_t t = 0; t < u.size(); ++t)
                if (u[t] > v[t]) leq = false;
              if (leq && ru.test(x)) witnessed = true;
            }
            if (!witnessed) minimal_somewhere = true;
          });
          if (minimal_somewhere) cap_respected = false;
        }
      }
      frontier.assign(next.begin(), next.end());
    }
    r.check(cap_respected, inst.name + ": no minimal word beyond the |M| length bound");
  }
  return r;
}

SuiteResult suite_dickson_oracle(std::uint64_t seed, std::uint32_t sets,
                                 std::uint32_t large_sets) {
  SuiteResult r{"dickson-oracle"};
  Rng rng(seed);
  auto run_one = [&](std::uint32_t size, std::uint32_t dim, std::uint32_t hi) {
    std::vector<std::vector<std::uint32_t>> vecs(size, std::vector<std::uint32_t>(dim));
    for (auto& v : vecs)
      for (auto& c : v) c = rng.below(hi + 1);
    const auto serial = kernels::dickson_minimal(vecs, kernels::Exec::serial);
    const auto parallel = kernels::dickson_minimal(vecs, kernels::Exec::parallel);
    const auto oracle = reference::pairwise_dickson(vecs);
    r.check(serial == oracle, "dickson serial == pairwise oracle");
    r.check(parallel == oracle, "dickson parallel == pairwise oracle");
  };
  for (std::uint32_t i = 0; i < sets; ++i)
    run_one(5 + rng.below(196), 2 + rng.below(5), 12);
  for (std::uint32_t i = 0; i < large_sets; ++i) run_one(10000, 5, 30);
  return r;
}

SuiteResult suite_length_invariants(const std::vector<Instance>& instances) {
  SuiteResult r{"length-invariants"};
  for (const auto& inst : instances) {
    const auto& M = inst.monoid;
    const Premon div = divisibility_premon(M);
    const std::uint32_t cap = M.size() + 4;
    const FactorizationAnalysis analysis(div, cap);
    const auto& cls = analysis.classification();

    std::set<std::uint32_t> all_min_lengths;
    bool min_subset_ok = true, antichain_ok = true, bf_bound_ok = true;
    for (Element x = 0; x < M.size(); ++x) {
      const LengthSet ls = analysis.length_set(x);
      const LengthSet ms = analysis.minimal_length_set(x);
      for (auto v : ms.values) {
        if (!ls.contains(v)) min_subset_ok = false;
        all_min_lengths.insert(v);
      }
      // Theorem (local finiteness): the minimal vectors form an antichain and
      // bound the number of minimal lengths.
      const auto& vecs = analysis.engine().minimal_vectors(x);
      for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs.size(); ++j)
          if (i != j && dominated_by(vecs[i], vecs[j])) antichain_ok = false;
      if (ms.values.size() > vecs.size()) bf_bound_ok = false;
    }
    r.check(min_subset_ok, inst.name + ": minimal length sets inside length sets");
    r.check(antichain_ok, inst.name + ": minimal vectors form an antichain");
    r.check(bf_bound_ok, inst.name + ": |minimal length set| bounded by the antichain size");

    // Bounded-word-length dichotomy, desk form: lengths of minimal
    // factorizations over all of H form an initial segment of N.
    bool initial_segment = true;
    if (!all_min_lengths.empty()) {
      const std::uint32_t top = *all_min_lengths.rbegin();
      for (std::uint32_t v = 0; v <= top; ++v)
        if (!all_min_lengths.count(v)) initial_segment = false;
    }
    r.check(initial_segment, inst.name + ": minimal lengths form an initial segment");

    // Elasticity proposition (i), minimal flavor.
    const Elasticity rho_m = analysis.minimal_elasticity();
    bool all_singleton = true;
    for (Element x = 0; x < M.size(); ++x) {
      if (cls.units.test(x)) continue;
      if (analysis.minimal_length_set(x).values.size() > 1) all_singleton = false;
    }
    r.check((rho_m <= Elasticity::ratio(1, 1, true)) == all_singleton,
            inst.name + ": minimal elasticity <= 1 iff all minimal length sets are "
                        "singletons");

    // Unions: U_0 empty; minimal unions always exact and finite.
    for (std::uint32_t k = 0; k <= cap; ++k) {
      const auto [u, um] = analysis.unions(k);
      if (k == 0)
        r.check(u.values.empty() && um.values.empty(), inst.name + ": U_0 empty");
      r.check(!um.truncated, inst.name + ": minimal unions are exact");
    }

    // Finite minimal elasticity for commutative instances.
    if (M.commutative())
      r.check(rho_m.is_finite() && rho_m.exact,
              inst.name + ": commutative minimal elasticity finite and exact");

    // Every minimal preorder-factorization is a minimal word over the
    // irreducibles in the letter-equality sense.
    const auto& letters = analysis.irreducible_letters();
    std::vector<std::uint32_t> letter_index(M.size(), 0);
    for (std::uint32_t t = 0; t < letters.size(); ++t) letter_index[letters[t]] = t;
    bool def2_ok = true;
    for (Element x = 0; x < M.size(); ++x) {
      if (cls.units.test(x)) continue;
      const MinimalFactorizations mf = minimal_factorizations(analysis, x);
      for (const auto& w : mf.representatives) {
        std::vector<LetterId> idx;
        for (auto e : w.letters) idx.push_back(letter_index[e]);
        if (!is_minimal_word(M, letters, Word{idx, static_cast<std::uint32_t>(letters.size())}))
          def2_ok = false;
      }
    }
    r.check(def2_ok,
            inst.name + ": minimal factorizations are minimal irreducible-words");
  }
  return r;
}

SuiteResult suite_validation_negative_control() {
  SuiteResult r{"validation-negative-control"};
  const FiniteMonoid M = mul_mod(8);
  auto flat = M.flat_table();
  bool caught_with_triple = false;
  // Mutating a product of two non-identity elements breaks associativity for
  // this table; scan mutations until validation rejects one.
  for (std::uint32_t pos = 0; pos < flat.size() && !caught_with_triple; ++pos) {
    auto mutated = flat;
    mutated[pos] = (mutated[pos] + 1) % M.size();
    try {
      FiniteMonoid::from_flat_table(std::move(mutated), M.size(), 1);
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      if (what.find("associativity") != std::string::npos &&
          what.find('(') != std::string::npos)
        caught_with_triple = true;
    }
  }
  r.check(caught_with_triple, "mutated Cayley table rejected with a violating triple");

  bool identity_caught = false;
  try {
    FiniteMonoid::from_cayley_table({{0, 1}, {1, 1}}, 1);
  } catch (const std::invalid_argument&) {
    identity_caught = true;
  }
  r.check(identity_caught, "identity-law violation rejected");

  bool ragged_caught = false;
  try {
    FiniteMonoid::from_cayley_table({{0, 1}, {1}}, 0);
  } catch (const std::invalid_argument&) {
    ragged_caught = true;
  }
  r.check(ragged_caught, "ragged table rejected");
  return r;
}

Report run_all_suites(const Config& config) {
  Report report;
  report.config = config;

  std::vector<Instance> instances = builtin_instances();
  const auto commutative =
      random_commutative(config.commutative_count, 2, config.size_max, config.seed);
  const auto general = random_general(config.general_count, 2, config.size_max,
                                      config.seed ^ 0x9e3779b9u);
  instances.insert(instances.end(), commutative.begin(), commutative.end());
  instances.insert(instances.end(), general.begin(), general.end());
  report.instance_count = static_cast<std::uint32_t>(instances.size());

  report.suites.push_back(suite_word_preorders(config.seed));
  report.suites.push_back(suite_monoid_axioms(instances, config.seed + 1));
  report.suites.push_back(suite_acyclicity(instances));
  report.suites.push_back(suite_premon_structure(instances));
  report.suites.push_back(suite_reduction_to_irreducibles(instances, config.seed + 2));
  report.suites.push_back(suite_theorem_main(commutative, config.seed + 3));
  report.suites.push_back(suite_minimal_word_oracle(instances, config.seed + 4));
  report.suites.push_back(suite_dickson_oracle(config.seed + 5, 60, 1));
  report.suites.push_back(suite_length_invariants(instances));
  report.suites.push_back(suite_validation_negative_control());
  return report;
}

}  // namespace monoidlab::corpus
