#include "shirshov/poly.hpp"

#include <cctype>
#include <stdexcept>

#include "shirshov/errors.hpp"
#include "shirshov/lyndon.hpp"

namespace shirshov {

NcPoly NcPoly::monomial(Alphabet alphabet, Word w, Rational coeff) {
  if (!alphabet.valid(w)) {
    throw std::invalid_argument("NcPoly::monomial: word not over alphabet");
  }
  NcPoly p(std::move(alphabet));
  p.add_term(w, coeff);
  return p;
}

NcPoly NcPoly::constant(Alphabet alphabet, Rational c) {
  return monomial(std::move(alphabet), Word{}, std::move(c));
}

std::size_t NcPoly::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Rational NcPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void NcPoly::require_same_alphabet(const NcPoly& other) const {
  if (!(alphabet_ == other.alphabet_)) {
    throw std::invalid_argument("polynomials over different alphabets: \"" +
                                alphabet_.symbols() + "\" vs \"" +
                                other.alphabet_.symbols() + "\"");
  }
}

NcPoly& NcPoly::operator+=(const NcPoly& rhs) {
  require_same_alphabet(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& rhs) {
  require_same_alphabet(rhs);
  for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.require_same_alphabet(b);
  NcPoly out(a.alphabet_);
  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) out.add_term(u + v, cu * cv);
  }
  return out;
}

NcPoly sandwich(const Word& left, const NcPoly& p, const Word& right) {
  NcPoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) out.add_term(left + w + right, c);
  return out;
}

NcPoly poly_arith(const NcPoly& p, const NcPoly& q, const ArithOp& op) {
  if (!(p.alphabet() == q.alphabet())) {
    throw std::invalid_argument("poly_arith: alphabet mismatch");
  }
  struct Visitor {
    const NcPoly& p;
    const NcPoly& q;
    NcPoly operator()(Add) const { return p + q; }
    NcPoly operator()(Sub) const { return p - q; }
    NcPoly operator()(Mul) const { return p * q; }
    NcPoly operator()(const ScalarMul& s) const { return p * s.factor; }
  };
  return std::visit(Visitor{p, q}, op);
}

Term leading_monomial(const NcPoly& p, const MonomialOrder&) {
  if (p.is_zero()) {
    throw std::invalid_argument("leading_monomial: zero polynomial");
  }
  const auto& [w, c] = *p.terms().rbegin();
  return Term{w, c};
}

NcPoly make_monic(const NcPoly& p) {
  const Rational lc = leading_monomial(p).coefficient;
  return p * (Rational(1) / lc);
}

NcPoly expand_bracket(const Alphabet& alphabet, const NonAssocWord& t) {
  if (t.is_leaf()) return NcPoly::monomial(alphabet, Word{t.letter()});
  const NcPoly u = expand_bracket(alphabet, t.left());
  const NcPoly v = expand_bracket(alphabet, t.right());
  return u * v - v * u;
}

std::vector<NonAssocWord> lie_basis(const Alphabet& alphabet,
                                    std::size_t max_deg) {
  std::vector<NonAssocWord> out;
  for (const Word& w : generate_regular(alphabet, max_deg)) {
    out.push_back(shirshov_bracketing(w));
  }
  return out;
}

std::string format_rational(const Rational& r) {
  return r.str();
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  auto digits_only = [](std::string_view s) {
    std::size_t start = (!s.empty() && s.front() == '-') ? 1 : 0;
    if (s.size() == start) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  if (slash == std::string_view::npos) {
    if (!digits_only(text)) throw std::invalid_argument("bad rational");
    return Rational(Integer(std::string(text)));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den)) {
    throw std::invalid_argument("bad rational");
  }
  Integer d(std::string{den});
  if (d == 0) throw std::invalid_argument("zero denominator");
  return Rational(Integer(std::string(num)), d);
}

namespace {

class PolyParser {
 public:
  PolyParser(const Alphabet& alphabet, std::string_view text)
      : alphabet_(alphabet), text_(text), out_(alphabet) {}

  NcPoly parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_space();
      Rational sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      term(sign);
      skip_space();
      if (at_end()) break;
    }
    return std::move(out_);
  }

 private:
  void term(const Rational& sign) {
    if (at_end()) fail("expected a term");
    Rational coeff = 1;
    bool need_monomial = false;
    const bool had_coeff = std::isdigit(static_cast<unsigned char>(peek())) != 0;
    if (had_coeff) {
      coeff = number();
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected denominator");
        }
        const std::size_t at = pos_;
        Rational den = number();
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        coeff /= den;
        skip_space();
      }
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        need_monomial = true;
      }
    }
    Word w;
    bool any = false;
    while (!at_end()) {
      const char c = peek();
      auto r = alphabet_.rank(c);
      if (!r) {
        if (Alphabet::is_reserved(c)) break;
        fail(std::string("symbol '") + c + "' is not in alphabet \"" +
             alphabet_.symbols() + "\"");
      }
      ++pos_;
      any = true;
      std::size_t exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("expected exponent after '^'");
        }
        const Integer e = number();
        if (e > 4096) fail("exponent too large");
        exponent = e.convert_to<std::size_t>();
        skip_space();
      }
      for (std::size_t i = 0; i < exponent; ++i) w.push_back(*r);
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_space();
        if (at_end() || !alphabet_.rank(peek())) fail("expected a letter after '*'");
      }
    }
    if (need_monomial && !any) fail("expected a monomial after '*'");
    if (!any && !had_coeff) fail("expected a coefficient or monomial");
    out_.add_term(w, sign * coeff);
  }

  Integer number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 4000) fail("number too long");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 0, pos_ + 1);
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
  NcPoly out_;
};

std::string format_monomial(const Alphabet& alphabet, const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += alphabet.symbol(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

NcPoly parse_poly(const Alphabet& alphabet, std::string_view text) {
  return PolyParser(alphabet, text).parse();
}

std::string format_poly(const NcPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [w, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += format_rational(mag);
    } else {
      if (mag != 1) out += format_rational(mag) + "*";
      out += format_monomial(p.alphabet(), w);
    }
  }
  return out;
}

}  // namespace shirshov
