#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shirshov/errors.hpp"
#include "shirshov/lyndon.hpp"
#include "shirshov/poly.hpp"

using namespace shirshov;

namespace {
const Alphabet xy("xy");
NcPoly P(const char* s) { return parse_poly(xy, s); }
}  // namespace

TEST_CASE("parse and format") {
  CHECK(format_poly(P("2*x*y*x - 3*y^2")) == "2*x*y*x - 3*y^2");
  CHECK(P("yx - xy") == P("y*x - x*y"));
  CHECK(P("x^2") == P("xx"));
  CHECK(P("1/2*x + 1/2*x") == P("x"));
  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
  CHECK(format_poly(P("3")) == "3");
  CHECK(format_poly(P("-x + 1")) == "-x + 1");
  CHECK(P("2x") == P("2*x"));

  for (const char* bad : {"", "x +", "x ++ y", "2*", "x*", "z", "x^", "1/0*x", "x y -"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(P(bad), ParseError);
  }
  try {
    P("x + z");
  } catch (const ParseError& e) {
    CHECK(e.column() == 5);
  }
}

TEST_CASE("format/parse roundtrip on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    NcPoly p(xy);
    const int terms = static_cast<int>(rng() % 5);
    for (int i = 0; i < terms; ++i) {
      Word w;
      const auto len = rng() % 6;
      for (unsigned j = 0; j < len; ++j) w.push_back(static_cast<Letter>(rng() % 2));
      p.add_term(w, Rational(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4)));
    }
    CHECK(parse_poly(xy, format_poly(p)) == p);
  }
}

TEST_CASE("poly_arith") {
  CHECK(poly_arith(P("x"), P("y"), Mul{}) == P("xy"));
  CHECK(poly_arith(P("x + y"), P("x - y"), Mul{}) == P("xx - xy + yx - yy"));
  CHECK(poly_arith(P("x + y"), NcPoly(xy), Add{}) == P("x + y"));
  CHECK(poly_arith(P("x"), P("y"), Sub{}) == P("x - y"));
  CHECK(poly_arith(P("x + y"), NcPoly(xy), ScalarMul{Rational(3, 2)}) == P("3/2*x + 3/2*y"));
  CHECK_THROWS_AS(poly_arith(P("x"), parse_poly(Alphabet("ab"), "a"), Add{}),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  auto random_poly = [&] {
    NcPoly p(xy);
    for (int i = 0; i < 3; ++i) {
      Word w;
      for (unsigned j = 0; j < rng() % 4; ++j) w.push_back(static_cast<Letter>(rng() % 2));
      p.add_term(w, Rational(static_cast<int>(rng() % 7) - 3));
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const NcPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("leading_monomial") {
  auto lm = leading_monomial(P("yx - xy"));
  CHECK(lm.monomial == xy.parse("yx"));
  CHECK(lm.coefficient == 1);
  lm = leading_monomial(P("x + yy"));
  CHECK(lm.monomial == xy.parse("yy"));
  lm = leading_monomial(P("5*x"));
  CHECK(lm.monomial == xy.parse("x"));
  CHECK(lm.coefficient == 5);
  CHECK_THROWS_AS(leading_monomial(NcPoly(xy)), std::invalid_argument);
}

TEST_CASE("expand_bracket") {
  CHECK(expand_bracket(xy, parse_bracketing(xy, "x")) == P("x"));
  CHECK(expand_bracket(xy, parse_bracketing(xy, "[y,x]")) == P("yx - xy"));
  CHECK(expand_bracket(xy, parse_bracketing(xy, "[y,[y,x]]")) == P("yyx - 2*yxy + xyy"));
}

TEST_CASE("lie_basis") {
  const Alphabet ab("ab");
  auto fmt = [&](const std::vector<NonAssocWord>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(format(ab, t));
    return out;
  };
  CHECK(fmt(lie_basis(ab, 2)) == std::vector<std::string>{"a", "b", "[b,a]"});
  CHECK(fmt(lie_basis(ab, 3)) ==
        std::vector<std::string>{"a", "b", "[b,a]", "[[b,a],a]", "[b,[b,a]]"});
  CHECK(lie_basis(Alphabet("a"), 2).size() == 1);

  SUBCASE("leading monomial of each basis element is its word") {
    for (const Word& w : generate_regular(ab, 8)) {
      const Term lm = leading_monomial(expand_bracket(ab, shirshov_bracketing(w)));
      CHECK(lm.monomial == w);
      CHECK(abs(lm.coefficient) == 1);
    }
  }
  SUBCASE("basis images are linearly independent per degree") {
    const auto basis = lie_basis(ab, 5);
    for (std::size_t d = 1; d <= 5; ++d) {
      std::vector<NcPoly> images;
      for (const auto& t : basis) {
        if (t.length() == d) images.push_back(expand_bracket(ab, t));
      }
      CHECK(oracle::rank(images) == images.size());
    }
  }
}
