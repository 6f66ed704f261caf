// presentation.hpp -- finitely presented monoids: one-step rewriting,
// congruence-class saturation, pieces, Adian graphs, and the K_p^q test

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "monoidlab/words.hpp"

namespace monoidlab {

enum class Tristate { no, yes, unknown };

/// Generators plus defining relation pairs of generator words.
struct Presentation {
  Alphabet generators;
  std::vector<std::pair<Word, Word>> relations;

  std::uint32_t num_generators() const { return generators.size(); }
};

/// Validates that all relation words fit the generator alphabet.
Presentation make_presentation(Alphabet generators,
                               std::vector<std::pair<Word, Word>> relations);

/// The 3-generator family: generators {a, b, c} and, for n = 2..N, the
/// relation identifying c a^n b^(2^n) a^n c with a c^n b^n c^n a.
Presentation guba_example(std::uint32_t N);

/// Convenience accessors for the words of guba_example relations.
Word guba_s_word(std::uint32_t n);
Word guba_t_word(std::uint32_t n);

/// All words obtained from w by replacing one factor occurrence of a relation
/// side with the other side, in either direction. Returned sorted, deduplicated.
std::vector<Word> rewrite_neighbors(const Word& w, const Presentation& pres);

struct SaturationResult {
  std::vector<Word> class_members;  // sorted
  bool complete = false;

  bool contains(const Word& w) const;
};

/// Breadth-first closure of {w} under one-step rewriting, stopping once the
/// class would exceed cap members. complete is true iff the closure
/// stabilized within the cap.
SaturationResult congruence_class(const Word& w, const Presentation& pres,
                                  std::uint32_t cap);

/// Whether u and v present the same element, saturating from u with the cap.
Tristate equivalent(const Word& u, const Word& v, const Presentation& pres,
                    std::uint32_t cap);

/// Whether w is a minimal atomic factorization of its class: the saturated
/// class is complete and no member's valuation strictly dominates another
/// member's. Requires every relation side to have length >= 2 (so that the
/// generators are atoms in the checked fragment). Unknown when saturation is
/// incomplete.
Tristate is_minimal_atomic_factorization(const Word& w, const Presentation& pres,
                                         std::uint32_t cap);

/// Occurrence index over the (deduplicated) defining words of a presentation.
/// A non-empty word is a piece iff it occurs as a factor of defining words in
/// two distinct contexts, which is equivalent to occurring at two distinct
/// (word, position) slots.
class PieceIndex {
 public:
  explicit PieceIndex(const Presentation& pres);
  ~PieceIndex();
  PieceIndex(PieceIndex&&) noexcept;
  PieceIndex& operator=(PieceIndex&&) noexcept;

  /// Number of factor occurrences of u across the deduplicated defining words.
  std::uint64_t occurrences(const Word& u) const;

  bool is_piece(const Word& u) const;

  /// For each start position i of w, the longest L with w[i..i+L) a piece.
  std::vector<std::uint32_t> piece_run_lengths(const Word& w) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

bool is_piece(const Word& u, const Presentation& pres);

/// Minimum number of pieces concatenating to w (shortest-path DP over cut
/// positions); nullopt when no decomposition into pieces exists.
std::optional<std::uint32_t> min_piece_decomposition(const Word& w,
                                                     const Presentation& pres);

/// Undirected multigraph on the generators; loops and parallel edges kept.
struct MultiGraph {
  std::uint32_t num_vertices = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// (left graph, right graph): one edge joining the first (resp. last) letters
/// of the two sides of each relation. Throws if a relation side is empty.
std::pair<MultiGraph, MultiGraph> adian_graphs(const Presentation& pres);

/// Shortest cycle length: a loop counts 1, a parallel pair 2; nullopt for
/// cycle-free graphs.
std::optional<std::uint32_t> girth(const MultiGraph& g);

/// Every defining word needs at least p pieces and both Adian graphs have
/// girth at least q (infinite girth passes every q).
bool is_class_Kpq(const Presentation& pres, std::uint32_t p, std::uint32_t q);

}  // namespace monoidlab
