#include "shirshov/lyndon.hpp"

#include <algorithm>
#include <stdexcept>

namespace shirshov {

namespace {

void require_nonempty(const Word& w, const char* op) {
  if (w.empty()) {
    throw std::invalid_argument(std::string(op) + ": empty word");
  }
}

bool is_regular_or_empty(const Word& w) {
  return w.empty() || is_assoc_regular(w);
}

// Occurrence of f·g·f at `pos` with |f| = flen, |g| = glen, if it satisfies
// the predicates.
std::optional<FgfOccurrence> fgf_at(const Word& w, std::size_t pos,
                                    std::size_t flen, std::size_t glen) {
  const std::size_t second = pos + flen + glen;
  for (std::size_t i = 0; i < flen; ++i) {
    if (w[pos + i] != w[second + i]) return std::nullopt;
  }
  Word f = w.subword(pos, flen);
  if (!is_semiregular(f)) return std::nullopt;
  Word g = w.subword(pos + flen, glen);
  if (!is_regular_or_empty(g)) return std::nullopt;
  return FgfOccurrence{std::move(f), std::move(g), pos};
}

// Does some fgf factor end exactly at the end of w?
bool has_fgf_suffix(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t flen = 1; 2 * flen <= n; ++flen) {
    for (std::size_t glen = 0; 2 * flen + glen <= n; ++glen) {
      if (fgf_at(w, n - 2 * flen - glen, flen, glen)) return true;
    }
  }
  return false;
}

}  // namespace

bool is_assoc_regular(const Word& w) {
  require_nonempty(w, "is_assoc_regular");
  const std::size_t n = w.size();
  for (std::size_t s = 1; s < n; ++s) {
    bool greater = false;
    for (std::size_t i = 0; i < n; ++i) {
      const Letter a = w[i];
      const Letter b = w[(i + s) % n];
      if (a > b) {
        greater = true;
        break;
      }
      if (a < b) return false;
    }
    if (!greater) return false;
  }
  return true;
}

std::vector<Word> generate_regular(const Alphabet& alphabet,
                                   std::size_t max_len) {
  if (max_len == 0) {
    throw std::invalid_argument("generate_regular: max_len must be >= 1");
  }
  const auto k = static_cast<Letter>(alphabet.size());
  // Duval's generator of Lyndon words over ranks 0..k-1, then mapped through
  // r -> k-1-r so that minimal rotations become maximal ones.
  std::vector<Word> out;
  std::vector<Letter> w{0};
  while (!w.empty()) {
    std::vector<Letter> mirrored(w.size());
    std::transform(w.begin(), w.end(), mirrored.begin(),
                   [k](Letter r) { return static_cast<Letter>(k - 1 - r); });
    out.emplace_back(std::move(mirrored));
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Word> cfl_factorize(const Word& w) {
  require_nonempty(w, "cfl_factorize");
  // Duval's factorization with the letter comparison reversed.
  std::vector<Word> factors;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] >= w[j]) {
      k = (w[k] > w[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      factors.push_back(w.subword(i, j - k));
      i += j - k;
    }
  }
  return factors;
}

std::strong_ordering regular_order(const Word& u, const Word& v) {
  switch (lex_compare(u, v)) {
    case LexOrder::Less: return std::strong_ordering::less;
    case LexOrder::Greater: return std::strong_ordering::greater;
    case LexOrder::Equal: return std::strong_ordering::equal;
    case LexOrder::PrefixOf: return std::strong_ordering::greater;
    case LexOrder::ExtendedBy: return std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

bool is_semiregular(const Word& w) {
  require_nonempty(w, "is_semiregular");
  const std::size_t n = w.size();
  for (std::size_t start = 1; start < n; ++start) {
    for (std::size_t i = 0; start + i < n; ++i) {
      const Letter s = w[start + i];
      if (s < w[i]) break;
      if (s > w[i]) return false;
      // Running off the end means the suffix is a prefix of w.
    }
  }
  return true;
}

std::optional<FgfOccurrence> find_fgf(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t flen = n / 2; flen >= 1; --flen) {
    for (std::size_t pos = 0; pos + 2 * flen <= n; ++pos) {
      for (std::size_t glen = 0; pos + 2 * flen + glen <= n; ++glen) {
        if (auto occ = fgf_at(w, pos, flen, glen)) return occ;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> fgf_unavoidable_length(std::size_t alphabet_size,
                                                  std::size_t max_len) {
  if (alphabet_size == 0) {
    throw std::invalid_argument("fgf_unavoidable_length: empty alphabet");
  }
  // Avoiders are closed under prefixes, so extend level by level and only
  // test occurrences ending at the new last letter.
  std::vector<Word> level{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (std::size_t l = 0; l < alphabet_size; ++l) {
        Word ext = w;
        ext.push_back(static_cast<Letter>(l));
        if (!has_fgf_suffix(ext)) next.push_back(std::move(ext));
      }
    }
    if (next.empty()) return len;
    level = std::move(next);
  }
  return std::nullopt;
}

}  // namespace shirshov
