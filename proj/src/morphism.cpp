#include "shirshov/morphism.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>

#include "shirshov/errors.hpp"

namespace shirshov {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.size()) {
    throw std::invalid_argument("Morphism: need one image per source letter");
  }
  for (const Word& w : images_) {
    if (w.empty()) throw std::invalid_argument("Morphism: empty image");
    if (!target_.valid(w)) {
      throw std::invalid_argument("Morphism: image not over target alphabet");
    }
  }
}

Morphism Morphism::thue_binary() {
  Alphabet ab("ab");
  return Morphism(ab, ab, {ab.parse("ab"), ab.parse("ba")});
}

Morphism Morphism::thue_ternary() {
  Alphabet abc("abc");
  return Morphism(abc, abc,
                  {abc.parse("abcab"), abc.parse("acabcb"), abc.parse("acbcacb")});
}

Morphism Morphism::identity(const Alphabet& alphabet) {
  std::vector<Word> images;
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    images.push_back(Word{static_cast<Letter>(l)});
  }
  return Morphism(alphabet, alphabet, std::move(images));
}

Morphism Morphism::named(const std::string& name) {
  if (name == "thue-binary") return thue_binary();
  if (name == "thue-ternary") return thue_ternary();
  throw std::invalid_argument("unknown morphism '" + name + "'");
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const Word& w : images_) m = std::max(m, w.size());
  return m;
}

std::size_t Morphism::min_image_length() const {
  std::size_t m = images_.front().size();
  for (const Word& w : images_) m = std::min(m, w.size());
  return m;
}

Word apply_morphism(const Morphism& phi, const Word& w) {
  Word out;
  for (Letter l : w) {
    if (l >= phi.source().size()) {
      throw std::invalid_argument("apply_morphism: letter outside source alphabet");
    }
    out += phi.image(l);
  }
  return out;
}

std::optional<PowerOccurrence> find_power(const Word& w, std::size_t k) {
  if (k < 2) throw std::invalid_argument("find_power: exponent must be >= 2");
  const std::size_t n = w.size();
  std::optional<PowerOccurrence> best;
  // For period p, u^k starts at i iff w[j] == w[j+p] for the (k-1)p
  // consecutive positions j = i .. i+(k-1)p-1.
  for (std::size_t p = 1; k * p <= n; ++p) {
    const std::size_t need = (k - 1) * p;
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      run = (w[j] == w[j + p]) ? run + 1 : 0;
      if (run >= need) {
        const std::size_t start = j + 1 - need;
        if (!best || start < best->start) best = PowerOccurrence{start, p, k};
        break;
      }
      if (best && j + 1 - run > best->start) break;
    }
  }
  return best;
}

std::vector<Word> power_free_words(std::size_t alphabet_size, std::size_t k,
                                   std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::size_t l = 0; l < alphabet_size; ++l) {
        Word ext = out[i];
        ext.push_back(static_cast<Letter>(l));
        // Only powers ending at the new letter can be new.
        bool ok = true;
        for (std::size_t p = 1; k * p <= ext.size() && ok; ++p) {
          const std::size_t start = ext.size() - k * p;
          bool power = true;
          for (std::size_t j = start; j + p < ext.size(); ++j) {
            if (ext[j] != ext[j + p]) {
              power = false;
              break;
            }
          }
          ok = !power;
        }
        if (ok) out.push_back(std::move(ext));
      }
    }
    level_begin = level_end;
  }
  return out;
}

Word iterate_fixed_point(const Morphism& phi, Letter seed, std::size_t min_len) {
  if (!phi.is_endomorphism()) {
    throw std::invalid_argument("iterate_fixed_point: morphism is not an endomorphism");
  }
  if (seed >= phi.source().size()) {
    throw std::invalid_argument("iterate_fixed_point: seed outside alphabet");
  }
  const Word& img = phi.image(seed);
  if (img.front() != seed || img.size() < 2) {
    throw std::invalid_argument("iterate_fixed_point: seed is not prolongable");
  }
  Word w{seed};
  while (w.size() < min_len) w = apply_morphism(phi, w);
  return w;
}

Thue3Report check_thue3_conditions(const Morphism& phi) {
  Thue3Report r;
  r.images_of_short_words_square_free = true;
  for (const Word& w : power_free_words(phi.source().size(), 2, 3)) {
    if (!is_power_free(apply_morphism(phi, w), 2)) {
      r.images_of_short_words_square_free = false;
      break;
    }
  }
  r.images_not_nested = true;
  for (std::size_t a = 0; a < phi.images().size(); ++a) {
    for (std::size_t b = 0; b < phi.images().size(); ++b) {
      if (a != b && phi.image(static_cast<Letter>(b)).contains(phi.image(static_cast<Letter>(a)))) {
        r.images_not_nested = false;
      }
    }
  }
  return r;
}

std::optional<Word> square_free_counterexample(const Morphism& phi,
                                               std::size_t max_len) {
  for (const Word& w : power_free_words(phi.source().size(), 2, max_len)) {
    if (!is_power_free(apply_morphism(phi, w), 2)) return w;
  }
  return std::nullopt;
}

CrochemoreResult crochemore_test(const Morphism& phi) {
  const auto big = static_cast<long long>(phi.max_image_length());
  const auto small = static_cast<long long>(phi.min_image_length());
  const long long diff = big - 3;
  // Floor division; the bracket in the bound is the integer part.
  long long quotient = diff / small;
  if (diff % small != 0 && diff < 0) --quotient;
  const long long k = std::max(3LL, 1 + quotient);
  CrochemoreResult r;
  r.k = static_cast<std::size_t>(k);
  r.counterexample = square_free_counterexample(phi, r.k);
  r.square_free = !r.counterexample.has_value();
  return r;
}

Morphism parse_morphism(std::istream& in) {
  struct Rule {
    char letter;
    std::string image;
    std::size_t line;
    std::size_t column;
  };
  std::vector<Rule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("expected `letter -> image`", lineno, first + 1);
    }
    std::string lhs;
    for (std::size_t i = 0; i < arrow; ++i) {
      if (line[i] != ' ' && line[i] != '\t') lhs.push_back(line[i]);
    }
    if (lhs.size() != 1 || Alphabet::is_reserved(lhs[0])) {
      throw ParseError("left side must be a single letter", lineno, first + 1);
    }
    std::string image;
    std::size_t image_col = 0;
    for (std::size_t i = arrow + 2; i < line.size(); ++i) {
      const char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') continue;
      if (Alphabet::is_reserved(c)) {
        throw ParseError(std::string("invalid image symbol '") + c + "'", lineno, i + 1);
      }
      if (image.empty()) image_col = i + 1;
      image.push_back(c);
    }
    if (image.empty()) throw ParseError("empty image", lineno, arrow + 3);
    for (const Rule& r : rules) {
      if (r.letter == lhs[0]) {
        throw ParseError(std::string("letter '") + lhs + "' defined twice", lineno,
                         first + 1);
      }
    }
    rules.push_back(Rule{lhs[0], image, lineno, image_col});
  }
  if (rules.empty()) throw ParseError("no rules found", lineno + 1, 1);
  std::string source;
  for (const Rule& r : rules) source.push_back(r.letter);
  std::set<char> extra;
  for (const Rule& r : rules) {
    for (char c : r.image) {
      if (source.find(c) == std::string::npos) extra.insert(c);
    }
  }
  std::string target = source + std::string(extra.begin(), extra.end());
  Alphabet src(source);
  Alphabet tgt(target);
  std::vector<Word> images;
  for (const Rule& r : rules) images.push_back(tgt.parse(r.image));
  return Morphism(src, tgt, std::move(images));
}

}  // namespace shirshov
