#pragma once

// n-divisibility and height. A word is n-divisible when, after some
// prefix, it splits into n nonempty consecutive parts that strictly
// decrease lexicographically. Parts are compared at their first
// difference, so a part that is a prefix of its neighbour is never smaller
// or greater than it. Height over a set S is the least number
// of blocks s^k (s in S) whose concatenation is the word.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "shirshov/word.hpp"

namespace shirshov {

struct DivisibilityWitness {
  Word prefix;
  std::vector<Word> parts;
};

// earlier > later in the part order described above.
bool part_greater(const Word& earlier, const Word& later);

// Throws std::invalid_argument for n = 0.
std::optional<DivisibilityWitness> is_n_divisible(const Word& w, std::size_t n);

// Checks prefix·parts == w, parts nonempty and strictly decreasing.
bool is_valid_witness(const Word& w, const DivisibilityWitness& witness);

struct HeightBlock {
  Word base;
  std::size_t exponent = 1;
  friend bool operator==(const HeightBlock&, const HeightBlock&) = default;
};

struct HeightDecomposition {
  std::vector<HeightBlock> blocks;
  std::size_t height() const noexcept { return blocks.size(); }
};

// Minimum-block decomposition over S, absent if w is not a product of
// S-words. Throws std::invalid_argument if S is empty or has an empty word.
std::optional<HeightDecomposition> height_over(const Word& w,
                                               const std::vector<Word>& bases);

struct SurveyRow {
  std::size_t length = 0;
  std::uint64_t words = 0;
  std::uint64_t divisible = 0;
  std::size_t max_height = 0;  // over the non-divisible words of this length
  Word witness;                // first word (lex) attaining max_height
};

struct HeightSurvey {
  std::size_t n = 0;
  std::vector<SurveyRow> rows;  // lengths 0..max_len
  std::size_t max_height = 0;
  Word witness;
};

// For every word of length <= max_len that is not n-divisible, the height
// over all words of length 1..n-1. Throws std::invalid_argument for n < 2
// and ResourceLimitError when more than `word_budget` words would be
// enumerated.
HeightSurvey height_survey(const Alphabet& alphabet, std::size_t n,
                           std::size_t max_len,
                           std::uint64_t word_budget = std::uint64_t{1} << 24);

}  // namespace shirshov
