#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "shirshov/errors.hpp"
#include "shirshov/lyndon.hpp"

using namespace shirshov;

namespace {
const Alphabet ab("ab");
Word w(const char* s) { return ab.parse(s); }
}  // namespace

TEST_CASE("lex_compare") {
  CHECK(lex_compare(w("ab"), w("ba")) == LexOrder::Less);
  CHECK(lex_compare(w("ab"), w("ab")) == LexOrder::Equal);
  CHECK(lex_compare(w("a"), w("ab")) == LexOrder::PrefixOf);
  CHECK(lex_compare(w("ab"), w("a")) == LexOrder::ExtendedBy);
  CHECK(lex_compare(w("b"), w("ab")) == LexOrder::Greater);
  CHECK_THROWS_AS(lex_compare(ab, w("a"), Word{5}), std::invalid_argument);
}

TEST_CASE("alphabet validation and parsing") {
  CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aa"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("a1"), std::invalid_argument);
  CHECK(ab.parse("1").empty());
  CHECK(ab.format(w("bab")) == "bab");
  try {
    ab.parse("abz");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.column() == 3);
  }
  CHECK(Alphabet::infer({"yx - xy", "2*x"}).symbols() == "xy");
}

TEST_CASE("is_assoc_regular") {
  CHECK(is_assoc_regular(w("ba")));
  CHECK_FALSE(is_assoc_regular(w("abab")));
  CHECK(is_assoc_regular(w("a")));
  CHECK_FALSE(is_assoc_regular(w("ab")));
  CHECK_THROWS_AS(is_assoc_regular(Word{}), std::invalid_argument);
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const auto& s : oracle::words("ab", len)) {
      CHECK(is_assoc_regular(ab.parse(s)) == oracle::regular(s));
    }
  }
}

TEST_CASE("generate_regular") {
  auto fmt = [](const std::vector<Word>& ws, const Alphabet& a) {
    std::vector<std::string> out;
    for (const auto& x : ws) out.push_back(a.format(x));
    return out;
  };
  CHECK(fmt(generate_regular(ab, 2), ab) == std::vector<std::string>{"a", "b", "ba"});
  CHECK(fmt(generate_regular(ab, 3), ab) ==
        std::vector<std::string>{"a", "b", "ba", "baa", "bba"});
  CHECK(fmt(generate_regular(Alphabet("a"), 3), Alphabet("a")) ==
        std::vector<std::string>{"a"});
  CHECK_THROWS_AS(generate_regular(ab, 0), std::invalid_argument);

  SUBCASE("counts match the necklace formula and brute force") {
    for (const std::string alpha : {"ab", "abc"}) {
      const Alphabet a(alpha);
      const std::size_t max_len = alpha.size() == 2 ? 10 : 6;
      std::map<std::size_t, long long> per_length;
      for (const auto& x : generate_regular(a, max_len)) ++per_length[x.size()];
      for (std::size_t n = 1; n <= max_len; ++n) {
        long long brute = 0;
        for (const auto& s : oracle::words(alpha, n)) brute += oracle::regular(s);
        CHECK(per_length[n] == brute);
        CHECK(per_length[n] == oracle::witt(static_cast<long long>(alpha.size()),
                                            static_cast<long long>(n)));
      }
    }
  }
}

TEST_CASE("cfl_factorize") {
  auto fmt = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& x : ws) out.push_back(ab.format(x));
    return out;
  };
  CHECK(fmt(cfl_factorize(w("ba"))) == std::vector<std::string>{"ba"});
  CHECK(fmt(cfl_factorize(w("ab"))) == std::vector<std::string>{"a", "b"});
  CHECK(fmt(cfl_factorize(w("bab"))) == std::vector<std::string>{"ba", "b"});
  CHECK_THROWS_AS(cfl_factorize(Word{}), std::invalid_argument);

  SUBCASE("unique monotone factorization, brute force up to length 8") {
    for (std::size_t len = 1; len <= 8; ++len) {
      for (const auto& s : oracle::words("ab", len)) {
        const auto all = oracle::monotone_factorizations(s);
        REQUIRE(all.size() == 1);
        CHECK(fmt(cfl_factorize(ab.parse(s))) == all.front());
      }
    }
  }
}

TEST_CASE("is_semiregular") {
  CHECK(is_semiregular(w("ba")));
  CHECK_FALSE(is_semiregular(w("aba")));
  CHECK(is_semiregular(w("aa")));
  CHECK_THROWS_AS(is_semiregular(Word{}), std::invalid_argument);
  for (std::size_t len = 1; len <= 9; ++len) {
    for (const auto& s : oracle::words("ab", len)) {
      CHECK(is_semiregular(ab.parse(s)) == oracle::semiregular(s));
    }
  }
}

TEST_CASE("find_fgf") {
  auto occ = find_fgf(w("aa"));
  REQUIRE(occ);
  CHECK(ab.format(occ->f) == "a");
  CHECK(occ->g.empty());
  CHECK(occ->position == 0);
  CHECK_FALSE(find_fgf(w("ab")));
  CHECK_FALSE(find_fgf(Word{}));

  // abbab: f = "b", g = empty at position 1 is the longest-then-earliest.
  occ = find_fgf(w("abbab"));
  REQUIRE(occ);
  CHECK(ab.format(occ->f + occ->g + occ->f) ==
        ab.format(w("abbab").subword(occ->position, 2 * occ->f.size() + occ->g.size())));
  CHECK(is_semiregular(occ->f));
  CHECK((occ->g.empty() || is_assoc_regular(occ->g)));

  SUBCASE("agrees with the exhaustive scan") {
    for (std::size_t len = 0; len <= 9; ++len) {
      for (const auto& s : oracle::words("abc", len)) {
        CHECK(find_fgf(Alphabet("abc").parse(s)).has_value() == oracle::contains_fgf(s));
      }
    }
  }
}

TEST_CASE("fgf unavoidable length") {
  // Brute force: every binary word of length 3 contains fgf, "ab" does not.
  CHECK(fgf_unavoidable_length(2, 10) == std::optional<std::size_t>(3));
  CHECK(fgf_unavoidable_length(1, 10) == std::optional<std::size_t>(2));
}
