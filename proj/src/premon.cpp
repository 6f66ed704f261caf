#include "monoidlab/premon.hpp"

#include <stdexcept>
#include <string>

namespace monoidlab {

Premon::Premon(FiniteMonoid monoid, std::vector<ElementSet> leq_rows)
    : monoid_(std::move(monoid)), rows_(std::move(leq_rows)) {
  const std::uint32_t n = monoid_.size();
  if (rows_.size() != n) throw std::invalid_argument("premon: relation matrix size mismatch");
  for (std::uint32_t x = 0; x < n; ++x) {
    if (rows_[x].universe_size() != n)
      throw std::invalid_argument("premon: relation row has wrong width");
    if (!rows_[x].test(x))
      throw std::invalid_argument("premon: relation is not reflexive at " + std::to_string(x));
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    bool ok = true;
    rows_[x].for_each([&](std::uint32_t y) {
      if (ok && !rows_[y].is_subset_of(rows_[x])) ok = false;
    });
    if (!ok)
      throw std::invalid_argument("premon: relation is not transitive at " + std::to_string(x));
  }
}

Premon divisibility_premon(const FiniteMonoid& M, kernels::Exec exec) {
  // u <= v iff v in HuH: row(u) = two-sided multiples of u.
  return Premon(M, kernels::two_sided_multiple_sets(M.flat_table(), M.size(), exec));
}

Premon left_divisibility_premon(const FiniteMonoid& M, kernels::Exec exec) {
  return Premon(M, kernels::right_multiple_sets(M.flat_table(), M.size(), exec));
}

Premon right_divisibility_premon(const FiniteMonoid& M, kernels::Exec exec) {
  return Premon(M, kernels::left_multiple_sets(M.flat_table(), M.size(), exec));
}

Premon indiscrete_premon(const FiniteMonoid& M) {
  ElementSet full(M.size());
  for (Element x = 0; x < M.size(); ++x) full.set(x);
  return Premon(M, std::vector<ElementSet>(M.size(), full));
}

Premon premon_from_pairs(const FiniteMonoid& M,
                         const std::vector<std::pair<Element, Element>>& pairs,
                         std::uint32_t* pairs_added) {
  const std::uint32_t n = M.size();
  std::vector<ElementSet> rows(n, ElementSet(n));
  std::uint32_t given = 0;
  for (auto [x, y] : pairs) {
    if (x >= n || y >= n)
      throw std::invalid_argument("premon_from_pairs: element index out of range");
    if (!rows[x].test(y)) {
      rows[x].set(y);
      ++given;
    }
  }
  for (Element x = 0; x < n; ++x)
    if (!rows[x].test(x)) {
      rows[x].set(x);
      ++given;
    }
  // Warshall-style transitive closure on bitset rows.
  for (Element k = 0; k < n; ++k)
    for (Element x = 0; x < n; ++x)
      if (rows[x].test(k)) rows[x] |= rows[k];
  if (pairs_added) {
    std::uint32_t total = 0;
    for (const auto& r : rows) total += r.count();
    *pairs_added = total - given;
  }
  return Premon(M, std::move(rows));
}

PremonClassification classify(const Premon& P) {
  const std::uint32_t n = P.size();
  const Element one = P.monoid().identity();

  PremonClassification c;
  c.units = ElementSet(n);
  c.irreducibles = ElementSet(n);
  c.equiv_class_of.assign(n, 0);

  for (Element x = 0; x < n; ++x)
    if (P.equivalent(x, one)) c.units.set(x);

  // Equivalence classes of mutual leq, indexed by first appearance.
  std::uint32_t next_class = 0;
  std::vector<bool> assigned(n, false);
  for (Element x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    const std::uint32_t cls = next_class++;
    for (Element y = x; y < n; ++y)
      if (!assigned[y] && P.equivalent(x, y)) {
        assigned[y] = true;
        c.equiv_class_of[y] = cls;
      }
  }
  c.num_classes = next_class;

  const auto& M = P.monoid();
  for (Element a = 0; a < n; ++a) {
    if (c.units.test(a)) continue;
    bool reducible = false;
    for (Element x = 0; x < n && !reducible; ++x) {
      if (c.units.test(x) || !P.strictly_less(x, a)) continue;
      for (Element y = 0; y < n; ++y) {
        if (c.units.test(y) || !P.strictly_less(y, a)) continue;
        if (M.mul(x, y) == a) {
          reducible = true;
          break;
        }
      }
    }
    if (!reducible) c.irreducibles.set(a);
  }
  return c;
}

bool product_of_nonunits_closed(const Premon& P) {
  const PremonClassification c = classify(P);
  const auto& M = P.monoid();
  for (Element x = 0; x < P.size(); ++x) {
    if (c.units.test(x)) continue;
    for (Element y = 0; y < P.size(); ++y) {
      if (c.units.test(y)) continue;
      if (c.units.test(M.mul(x, y))) return false;
    }
  }
  return true;
}

Premon restrict_to_A(const Premon& P, const ElementSet& A) {
  const auto& M = P.monoid();
  const std::uint32_t n = P.size();
  const PremonClassification base = classify(P);

  if (!A.is_subset_of(base.irreducibles))
    throw std::invalid_argument("restrict_to_A: A must consist of irreducibles");
  if (!product_of_nonunits_closed(P))
    throw std::invalid_argument(
        "restrict_to_A: products of non-units must be non-units in the base premon");

  // S = <A> minus the base units; phi(x) = least k >= 1 with x in A^k, 0 off S.
  const ElementSet gen = submonoid_generated(M, A);
  ElementSet S = gen;
  base.units.for_each([&](Element u) {
    if (S.test(u)) S.reset(u);
  });

  std::vector<std::uint32_t> phi(n, 0);
  {
    // Level sets A^k by breadth-first products; first-seen level is phi.
    // Levels beyond the monoid size cannot introduce new first appearances.
    std::vector<Element> level = A.to_vector();
    const std::vector<Element> gens = A.to_vector();
    for (auto a : level)
      if (phi[a] == 0 && S.test(a)) phi[a] = 1;
    for (std::uint32_t k = 2; k <= n && !level.empty(); ++k) {
      std::vector<Element> next;
      ElementSet seen(n);
      for (auto x : level)
        for (auto a : gens) {
          const Element p = M.mul(x, a);
          if (!seen.test(p)) {
            seen.set(p);
            next.push_back(p);
            if (phi[p] == 0 && S.test(p)) phi[p] = k;
          }
        }
      level = std::move(next);
    }
  }

  std::vector<ElementSet> rows(n, ElementSet(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      bool le;
      if (!S.test(x) && !S.test(y))
        le = true;
      else if (S.test(x) && S.test(y))
        le = phi[x] < phi[y] || (phi[x] == phi[y] && P.leq(x, y));
      else
        le = false;
      if (le) rows[x].set(y);
    }
  Premon result(M, std::move(rows));

  // Paper-backed postconditions of the construction.
  const PremonClassification rc = classify(result);
  if (rc.units != S.complement())
    throw std::logic_error("restrict_to_A: non-unit set differs from <A> \\ units");
  if (rc.irreducibles != A)
    throw std::logic_error("restrict_to_A: irreducible set differs from A");
  bool equiv_agrees = true;
  A.for_each([&](Element a) {
    A.for_each([&](Element b) {
      if (P.equivalent(a, b) != result.equivalent(a, b)) equiv_agrees = false;
    });
  });
  if (!equiv_agrees)
    throw std::logic_error("restrict_to_A: equivalence on A not preserved");

  return result;
}

}  // namespace monoidlab
