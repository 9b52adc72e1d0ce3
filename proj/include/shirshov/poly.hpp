#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shirshov/bracket.hpp"
#include "shirshov/word.hpp"

namespace shirshov {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Degree first, then lexicographic with the alphabet order.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Admissible monomial order. Only deglex is provided: it is total,
// multiplicative on both sides and well-founded.
class MonomialOrder {
 public:
  static MonomialOrder deglex() { return MonomialOrder(); }
  bool less(const Word& a, const Word& b) const { return DegLexLess{}(a, b); }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder() = default;
};

// Element of the free associative algebra Q<X>. Terms are kept sorted by
// deglex; zero coefficients are never stored.
class NcPoly {
 public:
  using Terms = std::map<Word, Rational, DegLexLess>;

  explicit NcPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  static NcPoly monomial(Alphabet alphabet, Word w, Rational coeff = 1);
  static NcPoly constant(Alphabet alphabet, Rational c);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  std::size_t degree() const;
  Rational coefficient(const Word& w) const;

  // Adds c·w, dropping the term if it cancels.
  void add_term(const Word& w, const Rational& c);

  NcPoly& operator+=(const NcPoly& rhs);
  NcPoly& operator-=(const NcPoly& rhs);
  NcPoly& operator*=(const Rational& c);

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
  friend NcPoly operator*(NcPoly a, const Rational& c) { return a *= c; }
  friend NcPoly operator*(const Rational& c, NcPoly a) { return a *= c; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

 private:
  void require_same_alphabet(const NcPoly& other) const;

  Alphabet alphabet_;
  Terms terms_;
};

// left · p · right.
NcPoly sandwich(const Word& left, const NcPoly& p, const Word& right);

struct Add {};
struct Sub {};
struct Mul {};
struct ScalarMul {
  Rational factor;
};
using ArithOp = std::variant<Add, Sub, Mul, ScalarMul>;

// Exact arithmetic; ScalarMul ignores q. Throws std::invalid_argument when
// the alphabets differ.
NcPoly poly_arith(const NcPoly& p, const NcPoly& q, const ArithOp& op);

struct Term {
  Word monomial;
  Rational coefficient;
};

// Greatest monomial of p. Throws std::invalid_argument for p = 0.
Term leading_monomial(const NcPoly& p,
                      const MonomialOrder& order = MonomialOrder::deglex());

// p / lc(p). Throws std::invalid_argument for p = 0.
NcPoly make_monic(const NcPoly& p);

// Associative image of a Lie monomial: [u v] -> uv - vu.
NcPoly expand_bracket(const Alphabet& alphabet, const NonAssocWord& t);

// Lyndon–Shirshov basis of the free Lie algebra up to degree max_deg.
std::vector<NonAssocWord> lie_basis(const Alphabet& alphabet,
                                    std::size_t max_deg);

// Text format: terms joined by + and -, optional rational coefficient
// followed by '*', monomials as letters (juxtaposed or '*'-joined) with
// optional ^k powers, e.g. "2*x*y*x - 3*y^2", "yx - xy", "1/2*x".
NcPoly parse_poly(const Alphabet& alphabet, std::string_view text);
std::string format_poly(const NcPoly& p);
std::string format_rational(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace shirshov
