#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "monoidlab/reference.hpp"
#include "monoidlab/words.hpp"

using namespace monoidlab;

namespace {

Word w(std::initializer_list<LetterId> letters, std::uint32_t alphabet = 3) {
  return make_word(letters, alphabet);
}

}  // namespace

TEST_CASE("concat") {
  const Word ab = w({0, 1});
  CHECK(concat(empty_word(3), ab) == ab);
  CHECK(concat(ab, empty_word(3)) == ab);
  CHECK(concat(ab, w({2})) == w({0, 1, 2}));
  CHECK(concat(ab, w({2})).length() == 3);
  CHECK_THROWS_AS(concat(ab, empty_word(4)), std::invalid_argument);
  CHECK_THROWS_AS(make_word({3}, 3), std::invalid_argument);
}

TEST_CASE("valuation") {
  CHECK(valuation(empty_word(3)) == ValuationVector{{0, 0, 0}});
  CHECK(valuation(w({0, 0, 1})) == ValuationVector{{2, 1, 0}});  // "aab" over {a,b,c}
  // Component sum equals the length.
  for (const auto& u : reference::all_words(3, 5))
    CHECK(valuation(u).total() == u.length());
}

TEST_CASE("permuted subword") {
  CHECK(is_permuted_subword(empty_word(3), w({0, 1, 2})));
  CHECK(is_permuted_subword(empty_word(3), empty_word(3)));
  // "aab" into "abac": both a's and the b embed.
  CHECK(is_permuted_subword(w({0, 0, 1}), w({0, 1, 0, 2})));
  // "aab" vs "abc": only one a available.
  CHECK_FALSE(is_permuted_subword(w({0, 0, 1}), w({0, 1, 2})));
  CHECK_THROWS_AS(is_permuted_subword(w({0}), empty_word(4)), std::invalid_argument);
}

TEST_CASE("strict permuted subword") {
  CHECK(is_strict_permuted_subword(w({0}), w({0, 0})));
  // "ab" and "ba" embed into each other.
  CHECK_FALSE(is_strict_permuted_subword(w({0, 1}), w({1, 0})));
  CHECK_FALSE(is_strict_permuted_subword(w({0}), w({0})));
}

TEST_CASE("shuffling preorder with letter classes") {
  // a ~ b: single letters match across the class.
  LetterEquivalence eq{{0, 0, 1}};
  CHECK(shuffling_leq(w({0}), w({1}), eq));
  // ("ab", "cc") with a ~ c but b not ~ c.
  LetterEquivalence eq2{{0, 1, 0}};
  CHECK_FALSE(shuffling_leq(w({0, 1}), w({2, 2}), eq2));
  CHECK(shuffling_leq(w({0, 0}), w({2, 2}), eq2));
}

TEST_CASE("proper sub-multisets") {
  const auto single = proper_sub_multisets(w({0}, 1));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == ValuationVector{{0}});

  const auto ab = proper_sub_multisets(w({0, 1}, 2));
  REQUIRE(ab.size() == 3);
  CHECK(ab[0] == ValuationVector{{0, 0}});
  // The two singletons follow in some order within the grade.
  CHECK(ab[1].total() == 1);
  CHECK(ab[2].total() == 1);
}
