#include "shirshov/vdw.hpp"

#include <algorithm>
#include <stdexcept>

namespace shirshov {

Coloring::Coloring(std::size_t colors, std::vector<std::uint8_t> values)
    : colors_(colors), values_(std::move(values)) {
  if (colors_ == 0) throw std::invalid_argument("Coloring: need at least one color");
  for (auto v : values_) {
    if (v >= colors_) throw std::invalid_argument("Coloring: color out of range");
  }
}

std::string Coloring::digits() const {
  std::string out;
  for (auto v : values_) {
    out.push_back(v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10));
  }
  return out;
}

Coloring Coloring::from_digits(std::size_t colors, const std::string& digits) {
  std::vector<std::uint8_t> values;
  for (char c : digits) {
    if (c >= '0' && c <= '9') {
      values.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (c >= 'a' && c <= 'z') {
      values.push_back(static_cast<std::uint8_t>(c - 'a' + 10));
    } else {
      throw std::invalid_argument("Coloring: bad digit");
    }
  }
  return Coloring(colors, std::move(values));
}

std::optional<Progression> find_mono_ap(const Coloring& c, std::size_t n) {
  if (n < 2) throw std::invalid_argument("find_mono_ap: n must be >= 2");
  const std::size_t len = c.size();
  for (std::size_t start = 0; start < len; ++start) {
    for (std::size_t step = 1; start + (n - 1) * step < len; ++step) {
      const auto color = c.at(start);
      bool mono = true;
      for (std::size_t t = 1; t < n && mono; ++t) mono = c.at(start + t * step) == color;
      if (mono) return Progression{start + 1, step, color};
    }
  }
  return std::nullopt;
}

namespace {

class Search {
 public:
  Search(std::size_t n, std::size_t k, std::size_t max_n)
      : n_(n), k_(k), max_n_(max_n), colors_(max_n, 0) {}

  void run() { extend(0, 0); }

  std::size_t best_length() const { return best_.size(); }
  const std::vector<std::uint8_t>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // True once a full-length coloring is found.
  bool extend(std::size_t pos, std::size_t used) {
    ++nodes_;
    if (pos > best_.size()) best_.assign(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(pos));
    if (pos == max_n_) return true;
    const std::size_t limit = std::min(k_, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      colors_[pos] = static_cast<std::uint8_t>(c);
      if (closes_progression(pos)) continue;
      if (extend(pos + 1, std::max(used, c + 1))) return true;
    }
    return false;
  }

  // Does position pos complete a monochromatic n-AP ending there?
  bool closes_progression(std::size_t pos) const {
    const auto color = colors_[pos];
    for (std::size_t step = 1; (n_ - 1) * step <= pos; ++step) {
      bool mono = true;
      for (std::size_t t = 1; t < n_ && mono; ++t) mono = colors_[pos - t * step] == color;
      if (mono) return true;
    }
    return false;
  }

  std::size_t n_;
  std::size_t k_;
  std::size_t max_n_;
  std::vector<std::uint8_t> colors_;
  std::vector<std::uint8_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

VdwResult vdw_number(std::size_t n, std::size_t k, std::size_t max_n) {
  if (n < 2) throw std::invalid_argument("vdw_number: n must be >= 2");
  if (k == 0) throw std::invalid_argument("vdw_number: k must be >= 1");
  if (k > 36) throw std::invalid_argument("vdw_number: at most 36 colors");
  Search search(n, k, max_n);
  search.run();
  Coloring witness(k, search.best());
  if (search.best_length() >= max_n) {
    return VdwNotFound{max_n, std::move(witness), search.nodes()};
  }
  return VdwFound{search.best_length() + 1, std::move(witness), search.nodes()};
}

}  // namespace shirshov
