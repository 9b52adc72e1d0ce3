#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "shirshov/morphism.hpp"

using namespace shirshov;

namespace {
const Alphabet ab("ab");
const Alphabet abc("abc");

std::string str(const Alphabet& a, const Word& w) { return a.format(w); }
}  // namespace

TEST_CASE("apply_morphism") {
  const Morphism t = Morphism::thue_binary();
  CHECK(str(ab, apply_morphism(t, ab.parse("a"))) == "ab");
  CHECK(str(ab, apply_morphism(t, ab.parse("ab"))) == "abba");
  CHECK(apply_morphism(t, Word{}).empty());
  CHECK_THROWS_AS(apply_morphism(t, Word{2}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism(ab, ab, {Word{0}, Word{}}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism(ab, ab, {Word{0}}), std::invalid_argument);
  CHECK(Morphism::named("thue-ternary").max_image_length() == 7);
  CHECK_THROWS_AS(Morphism::named("nope"), std::invalid_argument);
}

TEST_CASE("find_power") {
  auto occ = find_power(ab.parse("abab"), 2);
  REQUIRE(occ);
  CHECK(*occ == PowerOccurrence{0, 2, 2});
  CHECK_FALSE(find_power(abc.parse("abc"), 2));
  const Word tm = iterate_fixed_point(Morphism::thue_binary(), 0, 64);
  CHECK(tm.size() == 64);
  CHECK(is_power_free(tm, 3));
  CHECK_FALSE(is_power_free(tm, 2));
  occ = find_power(ab.parse("abaaa"), 2);
  REQUIRE(occ);
  CHECK(*occ == PowerOccurrence{2, 1, 2});
  CHECK_THROWS_AS(find_power(tm, 1), std::invalid_argument);

  SUBCASE("agrees with quadratic factor scan") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t len = rng() % 201;
      const std::size_t k = 2 + rng() % 2;
      const std::size_t letters = 2 + rng() % 2;
      Word w;
      for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>(rng() % letters));
      const std::string s = abc.format(w);
      const auto got = find_power(w, k);
      CHECK(got.has_value() == oracle::has_power(s, k));
      if (got) {
        const auto [start, period] = oracle::first_power(s, k);
        CHECK(got->start == start);
        CHECK(got->period == period);
        CHECK(got->exponent == k);
      }
    }
  }
}

TEST_CASE("power_free_words") {
  const std::vector<std::size_t> ternary_sf{1, 3, 6, 12, 18, 30, 42, 60, 78};
  const auto sf = power_free_words(3, 2, 8);
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t count = 0;
    for (const auto& w : sf) count += w.size() == n;
    CHECK(count == ternary_sf[n]);
  }
  const auto cf = power_free_words(2, 3, 10);
  std::size_t brute = 0;
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& w : all_words(2, n)) brute += !oracle::has_power(ab.format(w), 3);
  }
  CHECK(cf.size() == brute);
}

TEST_CASE("iterate_fixed_point") {
  const Morphism t = Morphism::thue_binary();
  CHECK(str(ab, iterate_fixed_point(t, 0, 8)) == "abbabaab");
  CHECK(str(ab, iterate_fixed_point(t, 0, 1)) == "a");
  CHECK(str(abc, iterate_fixed_point(Morphism::thue_ternary(), 0, 5)) == "abcab");
  CHECK_THROWS_AS(iterate_fixed_point(Morphism(ab, ab, {ab.parse("ba"), ab.parse("b")}), 0, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(iterate_fixed_point(Morphism::identity(ab), 0, 4), std::invalid_argument);
  const Word long_word = iterate_fixed_point(Morphism::thue_ternary(), 0, 1000);
  CHECK(long_word.size() >= 1000);
  CHECK(is_power_free(long_word, 2));
}

TEST_CASE("Thue theorems at desk scale") {
  const Morphism t1 = Morphism::thue_binary();
  for (const auto& w : power_free_words(2, 3, 12)) {
    CHECK(is_power_free(apply_morphism(t1, w), 3));
  }
  const Morphism t2 = Morphism::thue_ternary();
  for (const auto& w : power_free_words(3, 2, 8)) {
    CHECK(is_power_free(apply_morphism(t2, w), 2));
  }
}

TEST_CASE("check_thue3_conditions") {
  Thue3Report r = check_thue3_conditions(Morphism::thue_ternary());
  CHECK(r.images_of_short_words_square_free);
  CHECK(r.images_not_nested);
  r = check_thue3_conditions(Morphism::identity(abc));
  CHECK(r.images_of_short_words_square_free);
  CHECK(r.images_not_nested);
  r = check_thue3_conditions(Morphism(ab, ab, {ab.parse("aa"), ab.parse("b")}));
  CHECK_FALSE(r.images_of_short_words_square_free);
  r = check_thue3_conditions(Morphism(ab, abc, {abc.parse("abc"), abc.parse("b")}));
  CHECK_FALSE(r.images_not_nested);
}

TEST_CASE("crochemore_test") {
  CrochemoreResult c = crochemore_test(Morphism::thue_ternary());
  CHECK(c.k == 3);
  CHECK(c.square_free);
  c = crochemore_test(Morphism::identity(abc));
  CHECK(c.k == 3);
  CHECK(c.square_free);
  const Alphabet unary("a");
  c = crochemore_test(Morphism(unary, unary, {unary.parse("aa")}));
  CHECK_FALSE(c.square_free);
  REQUIRE(c.counterexample);
  CHECK(str(unary, *c.counterexample) == "a");
  // M = 9, m = 1 gives k = 1 + 6 = 7.
  c = crochemore_test(Morphism(abc, abc, {abc.parse("abcabcbac"), abc.parse("b"), abc.parse("c")}));
  CHECK(c.k == 7);

  SUBCASE("verdict matches exhaustive check on a corpus") {
    std::vector<Morphism> corpus{Morphism::thue_ternary(), Morphism::identity(abc),
                                 Morphism(abc, abc, {abc.parse("ab"), abc.parse("ca"), abc.parse("cb")}),
                                 Morphism(abc, abc, {abc.parse("abc"), abc.parse("acb"), abc.parse("b")})};
    std::mt19937 rng(29);
    while (corpus.size() < 60) {
      std::vector<Word> images;
      for (int i = 0; i < 3; ++i) {
        Word w;
        const std::size_t len = 1 + rng() % 5;
        for (std::size_t j = 0; j < len; ++j) w.push_back(static_cast<Letter>(rng() % 3));
        images.push_back(w);
      }
      corpus.emplace_back(abc, abc, images);
    }
    std::size_t square_free = 0;
    for (const auto& phi : corpus) {
      const CrochemoreResult r = crochemore_test(phi);
      const bool exhaustive = !square_free_counterexample(phi, 12).has_value();
      CHECK(r.square_free == exhaustive);
      square_free += exhaustive;
      if (r.counterexample) {
        CHECK(is_power_free(*r.counterexample, 2));
        CHECK_FALSE(is_power_free(apply_morphism(phi, *r.counterexample), 2));
      }
    }
    CHECK(square_free >= 2);
  }
}

TEST_CASE("parse_morphism") {
  std::istringstream in("a -> abcab\nb -> acabcb\nc -> acbcacb\n");
  const Morphism m = parse_morphism(in);
  CHECK(m.images() == Morphism::thue_ternary().images());
  CHECK(m.is_endomorphism());
  std::istringstream bad("a -> \n");
  CHECK_THROWS(parse_morphism(bad));
}
