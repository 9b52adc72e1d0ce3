#include "shirshov/bracket.hpp"

#include <stdexcept>

#include "shirshov/errors.hpp"
#include "shirshov/lyndon.hpp"

namespace shirshov {

NonAssocWord NonAssocWord::leaf(Letter letter) {
  auto node = std::make_shared<Node>();
  node->letter = letter;
  return NonAssocWord(std::move(node));
}

NonAssocWord NonAssocWord::join(NonAssocWord left, NonAssocWord right) {
  auto node = std::make_shared<Node>();
  node->length = left.length() + right.length();
  node->left = std::move(left.node_);
  node->right = std::move(right.node_);
  return NonAssocWord(std::move(node));
}

Word NonAssocWord::flatten() const {
  Word out;
  flatten_into(out);
  return out;
}

void NonAssocWord::flatten_into(Word& out) const {
  if (is_leaf()) {
    out.push_back(letter());
    return;
  }
  left().flatten_into(out);
  right().flatten_into(out);
}

bool operator==(const NonAssocWord& a, const NonAssocWord& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf() || a.length() != b.length()) return false;
  if (a.is_leaf()) return a.letter() == b.letter();
  return a.left() == b.left() && a.right() == b.right();
}

NonAssocWord shirshov_bracketing(const Word& w) {
  if (w.empty() || !is_assoc_regular(w)) {
    throw std::invalid_argument("shirshov_bracketing: word is not regular");
  }
  if (w.size() == 1) return NonAssocWord::leaf(w[0]);
  for (std::size_t split = 1; split < w.size(); ++split) {
    Word right = w.suffix_from(split);
    if (is_assoc_regular(right)) {
      return NonAssocWord::join(shirshov_bracketing(w.prefix(split)),
                                shirshov_bracketing(right));
    }
  }
  // The last letter is always a regular suffix.
  throw std::logic_error("shirshov_bracketing: no regular suffix");
}

namespace {

bool nonassoc_conditions(const NonAssocWord& t) {
  if (t.is_leaf()) return true;
  const NonAssocWord v = t.left();
  const NonAssocWord w = t.right();
  const Word fw = w.flatten();
  if (!is_nonassoc_regular(v) || !is_nonassoc_regular(w)) return false;
  if (regular_order(v.flatten(), fw) <= 0) return false;
  if (!v.is_leaf() && regular_order(v.right().flatten(), fw) > 0) return false;
  return true;
}

}  // namespace

bool is_nonassoc_regular(const NonAssocWord& t) {
  return is_assoc_regular(t.flatten()) && nonassoc_conditions(t);
}

bool is_omega_regular(const NonAssocWord& t, OmegaKind kind) {
  if (t.is_leaf()) return true;
  const NonAssocWord u = t.left();
  const NonAssocWord v = t.right();
  if (!is_omega_regular(u, kind) || !is_omega_regular(v, kind)) return false;
  const Word fv = v.flatten();
  const auto cmp = regular_order(u.flatten(), fv);
  if (kind == OmegaKind::K ? cmp < 0 : cmp <= 0) return false;
  if (kind == OmegaKind::Lie && !u.is_leaf() &&
      regular_order(u.right().flatten(), fv) > 0) {
    return false;
  }
  return true;
}

std::vector<NonAssocWord> all_bracketings(const Word& w) {
  if (w.empty()) return {};
  if (w.size() == 1) return {NonAssocWord::leaf(w[0])};
  std::vector<NonAssocWord> out;
  for (std::size_t split = 1; split < w.size(); ++split) {
    const auto lefts = all_bracketings(w.prefix(split));
    const auto rights = all_bracketings(w.suffix_from(split));
    for (const auto& l : lefts) {
      for (const auto& r : rights) out.push_back(NonAssocWord::join(l, r));
    }
  }
  return out;
}

std::string format(const Alphabet& alphabet, const NonAssocWord& t) {
  if (t.is_leaf()) return std::string(1, alphabet.symbol(t.letter()));
  return "[" + format(alphabet, t.left()) + "," + format(alphabet, t.right()) +
         "]";
}

namespace {

class BracketParser {
 public:
  BracketParser(const Alphabet& alphabet, std::string_view text)
      : alphabet_(alphabet), text_(text) {}

  NonAssocWord parse() {
    NonAssocWord t = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  NonAssocWord term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '[' || c == '(') {
      const char close = c == '[' ? ']' : ')';
      ++pos_;
      NonAssocWord l = term();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') ++pos_;
      NonAssocWord r = term();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != close) {
        fail(std::string("expected '") + close + "'");
      }
      ++pos_;
      return NonAssocWord::join(std::move(l), std::move(r));
    }
    auto r = alphabet_.rank(c);
    if (!r) fail(std::string("symbol '") + c + "' is not in the alphabet");
    ++pos_;
    return NonAssocWord::leaf(*r);
  }

  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, 0, pos_ + 1);
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NonAssocWord parse_bracketing(const Alphabet& alphabet, std::string_view text) {
  return BracketParser(alphabet, text).parse();
}

}  // namespace shirshov
