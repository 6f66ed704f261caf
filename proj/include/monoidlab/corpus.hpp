// corpus.hpp -- deterministic corpora of small monoids and the property
// suites run over them by the corpus command and the acceptance tests

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "monoidlab/monoid.hpp"

namespace monoidlab::corpus {

/// Deterministic splitmix64-based generator; the same seed yields the same
/// corpus on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n).
  std::uint32_t below(std::uint32_t n) { return static_cast<std::uint32_t>(next() % n); }

 private:
  std::uint64_t state_;
};

struct Instance {
  FiniteMonoid monoid;
  std::string name;
};

/// Hand-picked small monoids: trivial, mul_mod powers, reduced power monoids,
/// a left-zero monoid with identity, the full transformation monoid on 2
/// points.
std::vector<Instance> builtin_instances();

/// Random commutative monoids of sizes [size_min, size_max]: submonoid
/// closures of random generators inside commutative blocks (modular
/// multiplication, truncated addition, max-semilattices, cyclic groups),
/// relabelled as abstract Cayley tables.
std::vector<Instance> random_commutative(std::uint32_t count, std::uint32_t size_min,
                                         std::uint32_t size_max, std::uint64_t seed);

/// Random monoids that need not be commutative: closures of random
/// transformations of a small set under composition.
std::vector<Instance> random_general(std::uint32_t count, std::uint32_t size_min,
                                     std::uint32_t size_max, std::uint64_t seed);

/// A random non-empty letter set of at most max_letters elements of M.
std::vector<Element> random_letter_set(const FiniteMonoid& M, Rng& rng,
                                       std::uint32_t max_letters);

struct SuiteResult {
  std::string name;
  std::uint32_t checks = 0;
  std::uint32_t failures = 0;
  std::vector<std::string> failure_messages;

  SuiteResult() = default;
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  void check(bool ok, const std::string& message);
  bool passed() const { return failures == 0; }
};

struct Config {
  std::uint64_t seed = 42;
  std::uint32_t size_max = 6;
  std::uint32_t commutative_count = 120;
  std::uint32_t general_count = 40;
};

struct Report {
  Config config;
  std::uint32_t instance_count = 0;
  std::vector<SuiteResult> suites;

  bool ok() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

// Individual suites (exposed for the acceptance tests).
SuiteResult suite_word_preorders(std::uint64_t seed);
SuiteResult suite_monoid_axioms(const std::vector<Instance>& instances, std::uint64_t seed);
SuiteResult suite_acyclicity(const std::vector<Instance>& instances);
SuiteResult suite_premon_structure(const std::vector<Instance>& instances);
SuiteResult suite_reduction_to_irreducibles(const std::vector<Instance>& instances,
                                            std::uint64_t seed);
SuiteResult suite_theorem_main(const std::vector<Instance>& commutative, std::uint64_t seed);
SuiteResult suite_minimal_word_oracle(const std::vector<Instance>& instances,
                                      std::uint64_t seed);
SuiteResult suite_dickson_oracle(std::uint64_t seed, std::uint32_t sets,
                                 std::uint32_t large_sets);
SuiteResult suite_length_invariants(const std::vector<Instance>& instances);
SuiteResult suite_validation_negative_control();

/// Runs everything over builtin + random corpora.
Report run_all_suites(const Config& config);

}  // namespace monoidlab::corpus
