#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace shirshov {

// Colors of the integers 1..N, stored 0-based: at(i) is the color of i+1.
class Coloring {
 public:
  // Throws std::invalid_argument if colors == 0 or a value is out of range.
  Coloring(std::size_t colors, std::vector<std::uint8_t> values);

  std::size_t colors() const noexcept { return colors_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::uint8_t at(std::size_t i) const { return values_.at(i); }
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }
  // Digit string, e.g. "00110011".
  std::string digits() const;
  static Coloring from_digits(std::size_t colors, const std::string& digits);

 private:
  std::size_t colors_;
  std::vector<std::uint8_t> values_;
};

struct Progression {
  std::size_t start = 0;  // 1-based
  std::size_t step = 0;
  std::uint8_t color = 0;
  friend bool operator==(const Progression&, const Progression&) = default;
};

// Earliest (by start, then step) monochromatic progression of length n.
// Throws std::invalid_argument for n < 2.
std::optional<Progression> find_mono_ap(const Coloring& c, std::size_t n);

struct VdwFound {
  std::size_t number;        // least N forcing a monochromatic n-AP
  Coloring witness;          // length number-1, free of monochromatic n-APs
  std::uint64_t nodes = 0;   // search nodes visited
};
struct VdwNotFound {
  std::size_t bound;
  Coloring witness;          // length bound, free of monochromatic n-APs
  std::uint64_t nodes = 0;
};
using VdwResult = std::variant<VdwFound, VdwNotFound>;

// Backtracking over colorings extended one position at a time, pruning any
// completed monochromatic n-AP; colors are introduced in order (a new
// color is at most one more than the largest used so far). Throws
// std::invalid_argument for n < 2 or k == 0.
VdwResult vdw_number(std::size_t n, std::size_t k, std::size_t max_n);

}  // namespace shirshov
