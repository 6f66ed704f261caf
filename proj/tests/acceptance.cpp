// acceptance -- end-to-end checks of the worked examples and finiteness
// theorems at their stated tolerances, one pass/fail line per criterion

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "monoidlab/corpus.hpp"
#include "monoidlab/factorizer.hpp"
#include "monoidlab/presentation.hpp"
#include "monoidlab/reference.hpp"

using namespace monoidlab;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void criterion(int id, const std::string& name, bool ok) {
  std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", id, name.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<std::uint32_t> interval(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> v;
  for (std::uint32_t k = lo; k <= hi; ++k) v.push_back(k);
  return v;
}

bool contains_interval(const LengthSet& ls, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t k = lo; k <= hi; ++k)
    if (!ls.contains(k)) return false;
  return true;
}

// Criterion 1: the modular-arithmetic blowup example, p^n with p=2 and p=3.
void criterion_1() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (std::uint32_t modulus : {8u, 27u}) {
    const Premon P = divisibility_premon(mul_mod(modulus));
    const FactorizationAnalysis analysis(P, 12);
    for (std::uint32_t k = 1; k <= 3; ++k)
      ok = ok && analysis.unions(k).second.values == std::vector<std::uint32_t>{k};
    for (std::uint32_t k = 4; k <= 6; ++k)
      ok = ok && analysis.unions(k).second.values.empty();
    const auto [u2, um2] = analysis.unions(2);
    ok = ok && u2.values == std::vector<std::uint32_t>{2} && !u2.truncated;
    const auto [u3, um3] = analysis.unions(3);
    ok = ok && contains_interval(u3, 3, 12) && u3.truncated;
    const Elasticity rho_m = analysis.minimal_elasticity();
    ok = ok && rho_m == Elasticity::ratio(1, 1, true) && rho_m.exact;
    const Elasticity rho = analysis.classical_elasticity();
    ok = ok && Elasticity::ratio(4, 1, true) <= rho && !rho.exact;
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 5.0;
  criterion(1, "mul_mod(8) and mul_mod(27) reproduce the blowup example (" +
                   std::to_string(secs).substr(0, 5) + " s)",
            ok);
}

// Criterion 2: the reduced power monoid example, even and odd cases.
void criterion_2() {
  const auto t0 = Clock::now();
  bool ok = true;
  {
    const Premon P = divisibility_premon(reduced_power_monoid(4));
    const FactorizationAnalysis analysis(P, 10);
    // Z_4 is element index 7 under the mask encoding.
    ok = ok && analysis.minimal_length_set(7).values == interval(2, 3);
    ok = ok && analysis.unions(2).second.values == interval(2, 3);
    ok = ok && analysis.unions(3).second.values == interval(2, 3);
    for (std::uint32_t k = 4; k <= 10; ++k)
      ok = ok && analysis.unions(k).second.values.empty();
    const auto [u1, um1] = analysis.unions(1);
    ok = ok && contains_interval(u1, 1, 10);
  }
  {
    const Premon P = divisibility_premon(reduced_power_monoid(5));
    const FactorizationAnalysis analysis(P, 10);
    const auto [u1, um1] = analysis.unions(1);
    ok = ok && u1.values == std::vector<std::uint32_t>{1} && !u1.truncated;
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 10.0;
  criterion(2, "power monoids n=4 (even) and n=5 (odd) reproduce the example (" +
                   std::to_string(secs).substr(0, 5) + " s)",
            ok);
}

// Criterion 3: finiteness of the minimal A-elasticity on a commutative corpus,
// with the Dickson bound as a certificate.
void criterion_3() {
  const auto t0 = Clock::now();
  const auto instances = corpus::random_commutative(100, 2, 6, 42);
  corpus::Rng rng(43);
  bool ok = instances.size() >= 100;
  for (const auto& inst : instances) {
    const auto A = corpus::random_letter_set(inst.monoid, rng, 4);
    const Elasticity rho_m = minimal_A_elasticity(inst.monoid, A);
    const Elasticity bound = rho_star_bound(inst.monoid, A);
    ok = ok && rho_m.is_finite() && rho_m.exact && rho_m <= bound;
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < 60.0;
  criterion(3, "minimal A-elasticity finite, exact and within rho* on " +
                   std::to_string(instances.size()) + " commutative monoids (" +
                   std::to_string(secs).substr(0, 5) + " s)",
            ok);
}

// Criterion 4: oracle equivalence for the engine and the Dickson kernel.
void criterion_4() {
  bool ok = true;

  std::vector<corpus::Instance> instances = corpus::builtin_instances();
  {
    auto commutative = corpus::random_commutative(40, 2, 5, 44);
    auto general = corpus::random_general(20, 2, 5, 45);
    instances.insert(instances.end(), commutative.begin(), commutative.end());
    instances.insert(instances.end(), general.begin(), general.end());
  }
  std::uint32_t checked = 0;
  for (const auto& inst : instances) {
    if (inst.monoid.size() > 5) continue;
    ++checked;
    const Premon P = divisibility_premon(inst.monoid);
    const FactorizationAnalysis analysis(P, 0);
    const auto& letters = analysis.irreducible_letters();
    for (Element x = 0; x < inst.monoid.size(); ++x) {
      std::vector<Word> engine_words;
      for (const auto& gamma : analysis.engine().minimal_vectors(x))
        for (const auto& w : analysis.engine().words_for(gamma, x)) {
          std::vector<LetterId> elems;
          for (auto t : w.letters) elems.push_back(letters[t]);
          engine_words.push_back(Word{std::move(elems), inst.monoid.size()});
        }
      std::sort(engine_words.begin(), engine_words.end());
      if (engine_words !=
          reference::naive_minimal_factorizations(P, x, inst.monoid.size()))
        ok = false;
    }
  }
  ok = ok && checked >= 40;

  const corpus::SuiteResult dickson = corpus::suite_dickson_oracle(46, 995, 5);
  ok = ok && dickson.passed() && dickson.checks >= 2000;

  criterion(4, "engine == naive enumeration on " + std::to_string(checked) +
                   " monoids; dickson == pairwise oracle on 1000 vector sets",
            ok);
}

// Criterion 5: proposition suites over the full corpus.
void criterion_5() {
  std::vector<corpus::Instance> instances = corpus::builtin_instances();
  {
    auto commutative = corpus::random_commutative(100, 2, 6, 42);
    auto general = corpus::random_general(30, 2, 6, 47);
    instances.insert(instances.end(), commutative.begin(), commutative.end());
    instances.insert(instances.end(), general.begin(), general.end());
  }
  const corpus::SuiteResult lengths = corpus::suite_length_invariants(instances);
  const corpus::SuiteResult reduction =
      corpus::suite_reduction_to_irreducibles(instances, 48);
  const bool ok = lengths.passed() && reduction.passed();
  if (!ok) {
    for (const auto& m : lengths.failure_messages) std::printf("    %s\n", m.c_str());
    for (const auto& m : reduction.failure_messages) std::printf("    %s\n", m.c_str());
  }
  criterion(5, "elasticity/bounded-length/local-finiteness/unions/reduction "
               "propositions over " + std::to_string(instances.size()) + " instances",
            ok);
}

// Criterion 6: the 3-generator presentation example.
void criterion_6() {
  const auto t0 = Clock::now();
  const Presentation pres = guba_example(8);
  bool ok = is_class_Kpq(pres, 3, 2);

  const auto [left, right] = adian_graphs(pres);
  ok = ok && girth(left) == std::optional<std::uint32_t>{2};
  ok = ok && girth(right) == std::optional<std::uint32_t>{2};

  for (std::uint32_t n = 2; n <= 8; ++n) {
    const SaturationResult sat = congruence_class(guba_s_word(n), pres, 64);
    ok = ok && sat.complete && sat.class_members.size() == 2 &&
         sat.contains(guba_s_word(n)) && sat.contains(guba_t_word(n));
  }
  for (std::uint32_t n = 2; n <= 5; ++n) {
    ok = ok && is_minimal_atomic_factorization(guba_s_word(n), pres, 64) == Tristate::yes;
    ok = ok && is_minimal_atomic_factorization(guba_t_word(n), pres, 64) == Tristate::yes;
  }

  const Elasticity r8 =
      Elasticity::ratio(guba_s_word(8).length(), guba_t_word(8).length(), true);
  ok = ok && r8 == Elasticity::ratio(137, 13, true);
  ok = ok && Elasticity::ratio(10, 1, true) < r8;
  Elasticity prev = Elasticity::zero();
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const Elasticity rn =
        Elasticity::ratio(guba_s_word(n).length(), guba_t_word(n).length(), true);
    ok = ok && prev < rn;
    prev = rn;
  }

  const double secs = seconds_since(t0);
  ok = ok && secs < 30.0;
  criterion(6, "guba_example(8): K_3^2, girths 2, two-element classes, minimality, "
               "ratio 137/13 (" + std::to_string(secs).substr(0, 5) + " s)",
            ok);
}

// Criterion 7: infinite claims are only reported as monotone lower bounds with
// honest exactness flags.
void criterion_7() {
  bool ok = true;

  // Classical elasticity of mul_mod(p^n) grows with the cap and is never exact.
  {
    const Premon P = divisibility_premon(mul_mod(8));
    Elasticity prev = Elasticity::zero();
    for (std::uint32_t cap : {6u, 9u, 12u}) {
      const Elasticity rho = classical_elasticity(P, cap);
      ok = ok && !rho.exact && rho.is_finite();
      ok = ok && (prev < rho || prev == rho);
      ok = ok && prev < rho;  // strictly growing for this family
      prev = rho;
    }
  }

  // U_1 of the even power monoid keeps growing with the cap, flagged truncated.
  {
    const Premon P = divisibility_premon(reduced_power_monoid(4));
    std::size_t prev_size = 0;
    for (std::uint32_t cap : {6u, 8u, 10u}) {
      const FactorizationAnalysis analysis(P, cap);
      const auto [u1, um1] = analysis.unions(1);
      ok = ok && u1.truncated;
      ok = ok && u1.values.size() > prev_size;
      prev_size = u1.values.size();
    }
  }

  // The presentation witness ratios grow without bound in the index; each
  // reported value is a plain rational, never a computed infinity.
  {
    Elasticity prev = Elasticity::zero();
    for (std::uint32_t n = 2; n <= 10; ++n) {
      const Elasticity rn =
          Elasticity::ratio(guba_s_word(n).length(), guba_t_word(n).length(), true);
      ok = ok && rn.is_finite() && prev < rn;
      prev = rn;
    }
  }

  criterion(7, "infinite claims reported as monotone lower bounds with exact=false / "
               "truncated=true",
            ok);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
