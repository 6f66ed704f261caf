#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>

#include "monoidlab/corpus.hpp"
#include "monoidlab/json_io.hpp"
#include "monoidlab/presentation.hpp"
#include "monoidlab/reference.hpp"

using namespace monoidlab;

namespace {

Word gw(std::initializer_list<LetterId> letters) { return make_word(letters, 3); }

}  // namespace

TEST_CASE("guba words") {
  CHECK(guba_s_word(2).length() == 10);  // 2^2 + 2*2 + 2
  CHECK(guba_t_word(2).length() == 8);   // 3*2 + 2
  CHECK(guba_s_word(2) == gw({2, 0, 0, 1, 1, 1, 1, 0, 0, 2}));
  CHECK(guba_t_word(2) == gw({0, 2, 2, 1, 1, 2, 2, 0}));
  CHECK_THROWS_AS(guba_example(1), std::invalid_argument);
  CHECK(guba_example(5).relations.size() == 4);  // n = 2..5
}

TEST_CASE("rewrite neighbors") {
  const Presentation pres = guba_example(8);
  // No relation side occurs in a short unrelated word.
  CHECK(rewrite_neighbors(gw({0, 1, 2}), pres).empty());
  // s_2 rewrites exactly to t_2.
  const auto nb = rewrite_neighbors(guba_s_word(2), pres);
  REQUIRE(nb.size() == 1);
  CHECK(nb[0] == guba_t_word(2));
  // Symmetry on random words: v in N(u) iff u in N(v).
  corpus::Rng rng(11);
  for (int it = 0; it < 40; ++it) {
    std::vector<LetterId> letters(rng.below(12));
    for (auto& l : letters) l = rng.below(3);
    const Word u{letters, 3};
    for (const auto& v : rewrite_neighbors(u, pres)) {
      const auto back = rewrite_neighbors(v, pres);
      CHECK(std::find(back.begin(), back.end(), u) != back.end());
    }
  }
}

TEST_CASE("congruence classes") {
  const Presentation pres = guba_example(8);
  // A word with no applicable relation saturates to itself.
  const auto lone = congruence_class(gw({0, 1}), pres, 16);
  CHECK(lone.complete);
  CHECK(lone.class_members == std::vector<Word>{gw({0, 1})});

  const auto c3 = congruence_class(guba_s_word(3), pres, 64);
  CHECK(c3.complete);
  CHECK(c3.class_members.size() == 2);
  CHECK(c3.contains(guba_s_word(3)));
  CHECK(c3.contains(guba_t_word(3)));

  CHECK(equivalent(guba_s_word(2), guba_t_word(2), pres, 64) == Tristate::yes);
  CHECK(equivalent(guba_s_word(2), gw({0}), pres, 64) == Tristate::no);
  // Cap of 1 cannot even hold the class: unknown for non-members.
  CHECK(equivalent(guba_s_word(2), gw({0}), pres, 1) == Tristate::unknown);

  // Monotone in the cap.
  const auto small = congruence_class(guba_s_word(2), pres, 1);
  CHECK_FALSE(small.complete);
  for (const auto& m : small.class_members) CHECK(c3.complete);
}

TEST_CASE("minimal atomic factorizations") {
  const Presentation pres = guba_example(8);
  for (std::uint32_t n = 2; n <= 5; ++n) {
    CHECK(is_minimal_atomic_factorization(guba_s_word(n), pres, 64) == Tristate::yes);
    CHECK(is_minimal_atomic_factorization(guba_t_word(n), pres, 64) == Tristate::yes);
  }

  // A class holding a word and a strictly dominating rearrangement-extension:
  // x*x ~ x*y*x, so neither side is a minimal atomic factorization.
  const Presentation shrink = make_presentation(
      Alphabet{{"x", "y"}}, {{make_word({0, 0}, 2), make_word({0, 1, 0}, 2)}});
  CHECK(is_minimal_atomic_factorization(make_word({0, 0}, 2), shrink, 64) ==
        Tristate::no);
  CHECK(is_minimal_atomic_factorization(make_word({0, 1, 0}, 2), shrink, 64) ==
        Tristate::no);

  // Tiny cap: verdict unknown.
  CHECK(is_minimal_atomic_factorization(guba_s_word(2), pres, 1) == Tristate::unknown);

  // Precondition: a relation side of length < 2 is rejected.
  const Presentation bad = make_presentation(
      Alphabet{{"x", "y"}}, {{make_word({0}, 2), make_word({1, 1}, 2)}});
  CHECK_THROWS_AS(is_minimal_atomic_factorization(make_word({0}, 2), bad, 8),
                  std::invalid_argument);
}

TEST_CASE("pieces") {
  const Presentation pres = guba_example(8);
  const PieceIndex index(pres);

  // Single letters occur all over the defining words.
  CHECK(index.is_piece(gw({0})));
  CHECK(index.is_piece(gw({1})));
  CHECK(index.is_piece(gw({2})));

  // None of c a^k b, b a^k c, a c^k b, b c^k a is a piece: each occurs at
  // most once across the defining words.
  for (std::uint32_t k = 2; k <= 4; ++k) {
    auto run_word = [&](LetterId first, LetterId mid, LetterId last) {
      std::vector<LetterId> w{first};
      w.insert(w.end(), k, mid);
      w.push_back(last);
      return Word{w, 3};
    };
    CHECK_FALSE(index.is_piece(run_word(2, 0, 1)));  // c a^k b
    CHECK_FALSE(index.is_piece(run_word(1, 0, 2)));  // b a^k c
    CHECK_FALSE(index.is_piece(run_word(0, 2, 1)));  // a c^k b
    CHECK_FALSE(index.is_piece(run_word(1, 2, 0)));  // b c^k a
  }

  // Words longer than every defining word cannot occur.
  CHECK_FALSE(index.is_piece(Word{std::vector<LetterId>(500, 1), 3}));

  CHECK_THROWS_AS(index.is_piece(empty_word(3)), std::invalid_argument);
}

TEST_CASE("piece index matches naive occurrence counting") {
  corpus::Rng rng(23);
  for (int it = 0; it < 30; ++it) {
    // Random presentation over 2 letters with 2 relations.
    auto rnd_word = [&](std::uint32_t max_len) {
      std::vector<LetterId> w(1 + rng.below(max_len));
      for (auto& l : w) l = rng.below(2);
      return Word{w, 2};
    };
    const Presentation pres = make_presentation(
        Alphabet{{"x", "y"}},
        {{rnd_word(6), rnd_word(6)}, {rnd_word(6), rnd_word(6)}});
    const PieceIndex index(pres);

    std::set<std::vector<LetterId>> defining;
    for (const auto& [u, v] : pres.relations) {
      defining.insert(u.letters);
      defining.insert(v.letters);
    }
    for (const auto& probe_src : defining) {
      for (std::size_t i = 0; i < probe_src.size(); ++i)
        for (std::size_t j = i + 1; j <= probe_src.size(); ++j) {
          const std::vector<LetterId> probe(probe_src.begin() + i, probe_src.begin() + j);
          std::uint64_t naive = 0;
          for (const auto& d : defining)
            naive += reference::count_factor_occurrences(d, probe);
          CHECK(index.occurrences(Word{probe, 2}) == naive);
        }
    }
  }
}

TEST_CASE("min piece decomposition") {
  const Presentation pres = guba_example(8);
  const auto s2 = min_piece_decomposition(guba_s_word(2), pres);
  REQUIRE(s2.has_value());
  CHECK(*s2 >= 3);
  const auto t2 = min_piece_decomposition(guba_t_word(2), pres);
  REQUIRE(t2.has_value());
  CHECK(*t2 >= 3);

  // A letter that is not a piece makes the word indecomposable.
  const Presentation tiny = make_presentation(
      Alphabet{{"x", "y"}}, {{make_word({0, 0}, 2), make_word({0, 0, 0}, 2)}});
  CHECK_FALSE(min_piece_decomposition(make_word({1}, 2), tiny).has_value());
}

TEST_CASE("adian graphs and girth") {
  const Presentation pres = guba_example(8);
  const auto [left, right] = adian_graphs(pres);
  CHECK(left.edges.size() == 7);   // one per relation, n = 2..8
  CHECK(right.edges.size() == 7);
  // Every s_n starts with c and every t_n starts with a.
  for (const auto& [x, y] : left.edges) {
    CHECK(x == 2);
    CHECK(y == 0);
  }
  CHECK(girth(left) == 2);
  CHECK(girth(right) == 2);

  // A loop from a relation with equal first letters.
  const Presentation loop = make_presentation(
      Alphabet{{"x", "y"}}, {{make_word({0, 1}, 2), make_word({0, 0}, 2)}});
  CHECK(girth(adian_graphs(loop).first) == 1);

  MultiGraph path;
  path.num_vertices = 3;
  path.edges = {{0, 1}, {1, 2}};
  CHECK_FALSE(girth(path).has_value());

  MultiGraph triangle;
  triangle.num_vertices = 3;
  triangle.edges = {{0, 1}, {1, 2}, {2, 0}};
  CHECK(girth(triangle) == 3);

  MultiGraph square;
  square.num_vertices = 4;
  square.edges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  CHECK(girth(square) == 4);

  // Two triangles sharing a vertex.
  MultiGraph bowtie;
  bowtie.num_vertices = 5;
  bowtie.edges = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
  CHECK(girth(bowtie) == 3);

  // A square with one diagonal: shortest cycle drops to 3.
  MultiGraph chord = square;
  chord.edges.emplace_back(0, 2);
  CHECK(girth(chord) == 3);

  const Presentation empty_rel = make_presentation(Alphabet{{"x"}}, {});
  CHECK(adian_graphs(empty_rel).first.edges.empty());
  const Presentation empty_side = make_presentation(
      Alphabet{{"x"}}, {{empty_word(1), make_word({0}, 1)}});
  CHECK_THROWS_AS(adian_graphs(empty_side), std::invalid_argument);
}

TEST_CASE("class K_p^q") {
  CHECK(is_class_Kpq(guba_example(8), 3, 2));
  // A left-graph loop fails girth 2.
  const Presentation loop = make_presentation(
      Alphabet{{"x", "y"}}, {{make_word({0, 1}, 2), make_word({0, 0}, 2)}});
  CHECK_FALSE(is_class_Kpq(loop, 1, 2));
  // No relations: vacuously in every class.
  const Presentation free3 = make_presentation(Alphabet{{"a", "b", "c"}}, {});
  CHECK(is_class_Kpq(free3, 5, 5));
  CHECK_THROWS_AS(is_class_Kpq(free3, 0, 1), std::invalid_argument);
}

TEST_CASE("presentation JSON") {
  const Presentation g = load_presentation_spec("guba:4");
  CHECK(g.relations.size() == 3);

  const Presentation p = load_presentation_spec(
      R"({"kind":"presentation","generators":["a","b"],
          "relations":[[["a","b"],["b","a"]]]})");
  CHECK(p.num_generators() == 2);
  REQUIRE(p.relations.size() == 1);
  CHECK(p.relations[0].first == make_word({0, 1}, 2));

  CHECK_THROWS(load_presentation_spec(R"({"kind":"presentation","generators":["a"],
      "relations":[[["a"],["z"]]]})"));

  // Word parsing: shorthand and label lists.
  CHECK(parse_word("s_3", g.generators) == guba_s_word(3));
  CHECK(parse_word("t_4", g.generators) == guba_t_word(4));
  CHECK(parse_word("c,a,a", g.generators) == make_word({2, 0, 0}, 3));
  CHECK_THROWS(parse_word("q", g.generators));
}
