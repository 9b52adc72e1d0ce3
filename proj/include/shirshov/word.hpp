#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shirshov {

using Letter = std::uint8_t;

// A finite sequence of letters, stored as alphabet ranks. The empty word is
// the unit monomial. Comparison operators are plain lexicographic order in
// which a proper prefix is the smaller word; the orders used by the algebra
// (deglex, the regular-word order) are provided separately.
class Word {
 public:
  using const_iterator = std::vector<Letter>::const_iterator;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  Word(const_iterator first, const_iterator last) : letters_(first, last) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  const_iterator begin() const noexcept { return letters_.begin(); }
  const_iterator end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }

  // Factor of length `len` starting at `pos` (clamped to the end).
  Word subword(std::size_t pos, std::size_t len = npos) const;
  Word prefix(std::size_t len) const { return subword(0, len); }
  Word suffix_from(std::size_t pos) const { return subword(pos); }
  // Cyclic shift moving the first `shift` letters to the end.
  Word rotated(std::size_t shift) const;

  bool starts_with(const Word& p) const;
  bool ends_with(const Word& s) const;
  // Position of the first occurrence of `factor`, if any.
  std::optional<std::size_t> find(const Word& factor,
                                  std::size_t from = 0) const;
  bool contains(const Word& factor) const { return find(factor).has_value(); }

  Word& operator+=(const Word& rhs);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  // k-fold concatenation.
  Word power(std::size_t k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Ordered finite alphabet of single-character symbols. Rank 0 is the
// lex-smallest letter.
class Alphabet {
 public:
  // Throws std::invalid_argument on an empty list, duplicate symbols, or
  // symbols reserved by the text formats (whitespace, digits, operators).
  explicit Alphabet(std::string symbols);

  // Distinct letters of the inputs, sorted by character code.
  static Alphabet infer(const std::vector<std::string_view>& texts);
  // First `k` lowercase letters: a, b, c, ...
  static Alphabet first(std::size_t k);

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Letter l) const { return symbols_.at(l); }
  std::optional<Letter> rank(char symbol) const;
  const std::string& symbols() const noexcept { return symbols_; }
  bool valid(const Word& w) const;
  static bool is_reserved(char c);

  // Juxtaposed symbols, e.g. "bab". Whitespace is ignored. A lone "1" or
  // "ε" denotes the empty word.
  Word parse(std::string_view text) const;
  std::string format(const Word& w) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

enum class LexOrder { Less, Equal, Greater, PrefixOf, ExtendedBy };

// Relation at the first differing position. When one word is a proper
// prefix of the other the result is PrefixOf (u is a prefix of v) or
// ExtendedBy (v is a prefix of u); callers pick the convention.
LexOrder lex_compare(const Word& u, const Word& v);
// Same, after checking both words against `alphabet`
// (std::invalid_argument on a letter outside it).
LexOrder lex_compare(const Alphabet& alphabet, const Word& u, const Word& v);

const char* to_string(LexOrder order);

// Every word over an alphabet of `alphabet_size` letters with length
// exactly `length`, in lexicographic order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length);

// One word per nonblank line; `#` starts a comment. ParseError carries the
// line and column.
std::vector<Word> parse_word_list(const Alphabet& alphabet, std::istream& in);

}  // namespace shirshov
