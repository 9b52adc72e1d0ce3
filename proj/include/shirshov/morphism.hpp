#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shirshov/word.hpp"

namespace shirshov {

// Letter-to-word substitution M -> N*. Images are nonempty.
class Morphism {
 public:
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  // a -> ab, b -> ba
  static Morphism thue_binary();
  // a -> abcab, b -> acabcb, c -> acbcacb
  static Morphism thue_ternary();
  static Morphism identity(const Alphabet& alphabet);
  // "thue-binary" or "thue-ternary"; std::invalid_argument otherwise.
  static Morphism named(const std::string& name);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(Letter l) const { return images_.at(l); }
  const std::vector<Word>& images() const noexcept { return images_; }
  std::size_t max_image_length() const;
  std::size_t min_image_length() const;
  // Source and target coincide, so the morphism can be iterated.
  bool is_endomorphism() const { return source_ == target_; }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// Throws std::invalid_argument on a letter outside the source alphabet.
Word apply_morphism(const Morphism& phi, const Word& w);

struct PowerOccurrence {
  std::size_t start = 0;
  std::size_t period = 0;  // |u|
  std::size_t exponent = 0;
  friend bool operator==(const PowerOccurrence&, const PowerOccurrence&) = default;
};

// Earliest factor u^k (u nonempty), shortest u among those. Absent iff w
// is k-power-free. O(|w|^2). Throws std::invalid_argument for k < 2.
std::optional<PowerOccurrence> find_power(const Word& w, std::size_t k);
inline bool is_power_free(const Word& w, std::size_t k) {
  return !find_power(w, k).has_value();
}

// All k-power-free words of length 0..max_len over `alphabet_size`
// letters, in (length, lex) order.
std::vector<Word> power_free_words(std::size_t alphabet_size, std::size_t k,
                                   std::size_t max_len);

// Shortest φ^j(seed), j >= 0, of length >= min_len. Throws
// std::invalid_argument unless φ is an endomorphism whose image of seed
// starts with seed and is longer than one letter.
Word iterate_fixed_point(const Morphism& phi, Letter seed, std::size_t min_len);

struct Thue3Report {
  bool images_of_short_words_square_free = false;  // |w| <= 3
  bool images_not_nested = false;  // φ(a) factor of φ(b) implies a = b
};

Thue3Report check_thue3_conditions(const Morphism& phi);

struct CrochemoreResult {
  std::size_t k = 0;
  bool square_free = false;
  std::optional<Word> counterexample;  // square-free source word with a square image
};

// k = max(3, 1 + floor((M - 3) / m)); tests every square-free source word
// of length <= k.
CrochemoreResult crochemore_test(const Morphism& phi);

// Square-free check by brute force over source words up to `max_len`.
std::optional<Word> square_free_counterexample(const Morphism& phi,
                                               std::size_t max_len);

// Lines `a -> image`; source letters in line order. Target alphabet is the
// source letters followed by any other image symbols in sorted order.
Morphism parse_morphism(std::istream& in);

}  // namespace shirshov
