#include "shirshov/word.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <stdexcept>

#include "shirshov/errors.hpp"

namespace shirshov {

Word Word::subword(std::size_t pos, std::size_t len) const {
  if (pos > letters_.size()) {
    throw std::out_of_range("Word::subword: position past end");
  }
  const std::size_t n = std::min(len, letters_.size() - pos);
  return Word(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
              letters_.begin() + static_cast<std::ptrdiff_t>(pos + n));
}

Word Word::rotated(std::size_t shift) const {
  if (letters_.empty()) return {};
  shift %= letters_.size();
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(shift),
                          letters_.end());
  out.insert(out.end(), letters_.begin(),
             letters_.begin() + static_cast<std::ptrdiff_t>(shift));
  return Word(std::move(out));
}

bool Word::starts_with(const Word& p) const {
  return p.size() <= size() && std::equal(p.begin(), p.end(), begin());
}

bool Word::ends_with(const Word& s) const {
  return s.size() <= size() &&
         std::equal(s.begin(), s.end(),
                    end() - static_cast<std::ptrdiff_t>(s.size()));
}

std::optional<std::size_t> Word::find(const Word& factor,
                                      std::size_t from) const {
  if (from > size()) return std::nullopt;
  auto it = std::search(begin() + static_cast<std::ptrdiff_t>(from), end(),
                        factor.begin(), factor.end());
  if (it == end() && !factor.empty()) return std::nullopt;
  return static_cast<std::size_t>(it - begin());
}

Word& Word::operator+=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word Word::power(std::size_t k) const {
  Word out;
  for (std::size_t i = 0; i < k; ++i) out += *this;
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= static_cast<std::size_t>(l) + 1;
    h *= 1099511628211ull;
  }
  return h ^ w.size();
}

bool Alphabet::is_reserved(char c) {
  static constexpr std::string_view kReserved = "0123456789+-*/^()[],#:>";
  return std::isspace(static_cast<unsigned char>(c)) != 0 ||
         kReserved.find(c) != std::string_view::npos ||
         static_cast<unsigned char>(c) >= 0x80 || c < 0x20;
}

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw std::invalid_argument("alphabet must be nonempty");
  }
  if (symbols_.size() > 64) {
    throw std::invalid_argument("alphabet supports at most 64 letters");
  }
  std::set<char> seen;
  for (char c : symbols_) {
    if (is_reserved(c)) {
      throw std::invalid_argument(std::string("reserved character '") + c +
                                  "' cannot be an alphabet symbol");
    }
    if (!seen.insert(c).second) {
      throw std::invalid_argument(std::string("duplicate alphabet symbol '") +
                                  c + "'");
    }
  }
}

Alphabet Alphabet::infer(const std::vector<std::string_view>& texts) {
  std::set<char> letters;
  for (auto text : texts) {
    for (char c : text) {
      if (!is_reserved(c)) letters.insert(c);
    }
  }
  if (letters.empty()) letters.insert('a');
  return Alphabet(std::string(letters.begin(), letters.end()));
}

Alphabet Alphabet::first(std::size_t k) {
  if (k == 0 || k > 26) {
    throw std::invalid_argument("Alphabet::first expects 1..26 letters");
  }
  std::string s;
  for (std::size_t i = 0; i < k; ++i) s.push_back(static_cast<char>('a' + i));
  return Alphabet(std::move(s));
}

std::optional<Letter> Alphabet::rank(char symbol) const {
  auto pos = symbols_.find(symbol);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

bool Alphabet::valid(const Word& w) const {
  return std::all_of(w.begin(), w.end(),
                     [&](Letter l) { return l < symbols_.size(); });
}

Word Alphabet::parse(std::string_view text) const {
  std::vector<Letter> out;
  std::string_view trimmed = text;
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front()))) {
    trimmed.remove_prefix(1);
  }
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) {
    trimmed.remove_suffix(1);
  }
  if (trimmed == "1" || trimmed == "ε") return {};
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    auto r = rank(c);
    if (!r) {
      throw ParseError(std::string("symbol '") + c + "' is not in alphabet \"" +
                           symbols_ + "\"",
                       0, i + 1);
    }
    out.push_back(*r);
  }
  return Word(std::move(out));
}

std::string Alphabet::format(const Word& w) const {
  std::string out;
  out.reserve(w.size());
  for (Letter l : w) out.push_back(symbol(l));
  return out;
}

LexOrder lex_compare(const Word& u, const Word& v) {
  const std::size_t n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] < v[i]) return LexOrder::Less;
    if (u[i] > v[i]) return LexOrder::Greater;
  }
  if (u.size() == v.size()) return LexOrder::Equal;
  return u.size() < v.size() ? LexOrder::PrefixOf : LexOrder::ExtendedBy;
}

LexOrder lex_compare(const Alphabet& alphabet, const Word& u, const Word& v) {
  if (!alphabet.valid(u) || !alphabet.valid(v)) {
    throw std::invalid_argument("lex_compare: word not over alphabet \"" +
                                alphabet.symbols() + "\"");
  }
  return lex_compare(u, v);
}

const char* to_string(LexOrder order) {
  switch (order) {
    case LexOrder::Less: return "less";
    case LexOrder::Equal: return "equal";
    case LexOrder::Greater: return "greater";
    case LexOrder::PrefixOf: return "prefix-of";
    case LexOrder::ExtendedBy: return "extended-by";
  }
  return "?";
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t length) {
  std::vector<Word> out;
  std::vector<Letter> cur(length, 0);
  while (true) {
    out.emplace_back(cur);
    // Odometer increment from the right.
    std::size_t i = length;
    while (i > 0 && cur[i - 1] + 1u == alphabet_size) cur[--i] = 0;
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

std::vector<Word> parse_word_list(const Alphabet& alphabet, std::istream& in) {
  std::vector<Word> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(alphabet.parse(line));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), lineno, e.column());
    }
  }
  return out;
}

}  // namespace shirshov
