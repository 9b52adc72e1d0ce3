#include "shirshov/height.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "shirshov/errors.hpp"

namespace shirshov {

bool part_greater(const Word& earlier, const Word& later) {
  return lex_compare(earlier, later) == LexOrder::Greater;
}

namespace {

// Can w[pos..) be cut into `remaining` parts, each smaller than the one
// before, given the previous part w[prev_begin..pos)? Memoized on
// (prev_begin, pos, remaining); records the chosen cut.
class DivisibilitySearch {
 public:
  explicit DivisibilitySearch(const Word& w) : w_(w) {}

  bool run(std::size_t prev_begin, std::size_t pos, std::size_t remaining) {
    if (remaining == 0) return pos == w_.size();
    if (w_.size() - pos < remaining) return false;
    const auto key = std::make_tuple(prev_begin, pos, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second != 0;
    std::size_t found = 0;
    const Word prev = w_.subword(prev_begin, pos - prev_begin);
    for (std::size_t end = pos + 1; end + remaining - 1 <= w_.size(); ++end) {
      const Word part = w_.subword(pos, end - pos);
      if (prev_begin != pos && !part_greater(prev, part)) continue;
      if (run(pos, end, remaining - 1)) {
        found = end;
        break;
      }
    }
    memo_[key] = found;
    return found != 0;
  }

  std::size_t cut(std::size_t prev_begin, std::size_t pos,
                  std::size_t remaining) const {
    return memo_.at(std::make_tuple(prev_begin, pos, remaining));
  }

 private:
  const Word& w_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> memo_;
};

}  // namespace

std::optional<DivisibilityWitness> is_n_divisible(const Word& w, std::size_t n) {
  if (n == 0) throw std::invalid_argument("is_n_divisible: n must be >= 1");
  if (w.size() < n) return std::nullopt;
  DivisibilitySearch search(w);
  for (std::size_t start = 0; start + n <= w.size(); ++start) {
    // prev_begin == pos marks "no previous part".
    if (!search.run(start, start, n)) continue;
    DivisibilityWitness witness{w.prefix(start), {}};
    std::size_t prev = start;
    std::size_t pos = start;
    for (std::size_t r = n; r > 0; --r) {
      const std::size_t end = search.cut(prev, pos, r);
      witness.parts.push_back(w.subword(pos, end - pos));
      prev = pos;
      pos = end;
    }
    return witness;
  }
  return std::nullopt;
}

bool is_valid_witness(const Word& w, const DivisibilityWitness& witness) {
  Word joined = witness.prefix;
  for (std::size_t i = 0; i < witness.parts.size(); ++i) {
    if (witness.parts[i].empty()) return false;
    if (i > 0 && !part_greater(witness.parts[i - 1], witness.parts[i])) {
      return false;
    }
    joined += witness.parts[i];
  }
  return joined == w;
}

std::optional<HeightDecomposition> height_over(const Word& w,
                                               const std::vector<Word>& bases) {
  if (bases.empty()) throw std::invalid_argument("height_over: empty base set");
  for (const Word& b : bases) {
    if (b.empty()) throw std::invalid_argument("height_over: empty base word");
  }
  const std::size_t n = w.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // best[i]: fewest blocks covering w[0..i); from[i] = (start, base, k).
  std::vector<std::size_t> best(n + 1, kNone);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> from(n + 1);
  best[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (best[i] == kNone) continue;
    for (std::size_t b = 0; b < bases.size(); ++b) {
      const Word& base = bases[b];
      std::size_t end = i;
      for (std::size_t k = 1;; ++k) {
        if (end + base.size() > n ||
            !std::equal(base.begin(), base.end(),
                        w.begin() + static_cast<std::ptrdiff_t>(end))) {
          break;
        }
        end += base.size();
        if (best[i] + 1 < best[end]) {
          best[end] = best[i] + 1;
          from[end] = {i, b, k};
        }
      }
    }
  }
  if (best[n] == kNone) return std::nullopt;
  HeightDecomposition d;
  for (std::size_t pos = n; pos > 0;) {
    const auto [start, b, k] = from[pos];
    d.blocks.push_back(HeightBlock{bases[b], k});
    pos = start;
  }
  std::reverse(d.blocks.begin(), d.blocks.end());
  return d;
}

HeightSurvey height_survey(const Alphabet& alphabet, std::size_t n,
                           std::size_t max_len, std::uint64_t word_budget) {
  if (n < 2) throw std::invalid_argument("height_survey: n must be >= 2");
  const std::size_t k = alphabet.size();
  std::uint64_t total = 0;
  std::uint64_t level = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    total += level;
    if (total > word_budget) {
      throw ResourceLimitError("height_survey: more than " +
                               std::to_string(word_budget) +
                               " words to enumerate");
    }
    if (len < max_len) level *= k;
  }
  std::vector<Word> bases;
  for (std::size_t len = 1; len < n; ++len) {
    auto ws = all_words(k, len);
    bases.insert(bases.end(), ws.begin(), ws.end());
  }
  HeightSurvey survey;
  survey.n = n;
  for (std::size_t len = 0; len <= max_len; ++len) {
    SurveyRow row;
    row.length = len;
    bool have_witness = false;
    for (const Word& w : all_words(k, len)) {
      ++row.words;
      if (is_n_divisible(w, n)) {
        ++row.divisible;
        continue;
      }
      const std::size_t h = height_over(w, bases)->height();
      if (!have_witness || h > row.max_height) {
        row.max_height = h;
        row.witness = w;
        have_witness = true;
      }
    }
    if (survey.rows.empty() || row.max_height > survey.max_height) {
      survey.max_height = row.max_height;
      survey.witness = row.witness;
    }
    survey.rows.push_back(std::move(row));
  }
  return survey;
}

}  // namespace shirshov
