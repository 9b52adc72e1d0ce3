#pragma once

// Regular (Lyndon–Shirshov) words in the "greatest rotation" convention:
// a word is regular when it is strictly greater than each of its proper
// cyclic shifts. This mirrors the classical Lyndon convention; a word is
// regular here exactly when it is Lyndon for the reversed alphabet.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "shirshov/word.hpp"

namespace shirshov {

// Throws std::invalid_argument on the empty word.
bool is_assoc_regular(const Word& w);

// All regular words of length 1..max_len, sorted by (length, lex).
std::vector<Word> generate_regular(const Alphabet& alphabet,
                                   std::size_t max_len);

// Unique factorization w = f1 f2 ... fk into regular words. The sequence is
// nonincreasing in the lexicographic order of the reversed alphabet (the
// classical Chen–Fox–Lyndon order, prefixes smaller).
std::vector<Word> cfl_factorize(const Word& w);

// Order on regular words used by the bracketing conditions: lexicographic at
// the first differing letter, and a proper prefix ranks ABOVE its
// extensions ("b" > "ba"). Restricted to regular words this is the mirror
// image of the standard Lyndon order.
std::strong_ordering regular_order(const Word& u, const Word& v);

// Every proper suffix either is a prefix of w or is smaller than w at the
// first differing letter. Throws std::invalid_argument on the empty word.
bool is_semiregular(const Word& w);

struct FgfOccurrence {
  Word f;
  Word g;  // empty, or regular
  std::size_t position = 0;
};

// A factor f·g·f with f nonempty semiregular and g empty or regular.
// Canonical choice: longest f, then earliest position, then shortest g.
std::optional<FgfOccurrence> find_fgf(const Word& w);

// Least N such that every word of length N over `alphabet_size` letters
// contains an fgf factor, searched up to `max_len` (absent if some word of
// length max_len still avoids the pattern).
std::optional<std::size_t> fgf_unavoidable_length(std::size_t alphabet_size,
                                                  std::size_t max_len);

}  // namespace shirshov
