#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace shirshov {

// Finite Newman graph: an edge a -> b means a simplifies to b in one step.
// Acyclicity (every descending chain is finite) is enforced on
// construction.
class SimplificationScheme {
 public:
  // Throws std::invalid_argument on an out-of-range endpoint or a cycle.
  SimplificationScheme(std::size_t node_count,
                       std::vector<std::pair<std::size_t, std::size_t>> edges,
                       std::vector<std::string> names = {});

  std::size_t node_count() const noexcept { return succ_.size(); }
  const std::vector<std::size_t>& successors(std::size_t v) const {
    return succ_[v];
  }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  const std::string& name(std::size_t v) const { return names_[v]; }

 private:
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::string> names_;
};

struct DiamondReport {
  bool unique_normal_forms = false;         // (1) canonicity
  bool church_rosser_transitive = false;    // (2)
  bool locally_confluent = false;           // (3) siblings are joinable
  bool one_minimum_per_component = false;   // (4)
  bool connectivity_is_joinability = false; // (5) x ~ y <=> joinable

  bool all_equal() const;
  bool all_true() const;
};

// Evaluates the five conditions by exhaustive reachability.
DiamondReport diamond_report(const SimplificationScheme& scheme);

bool is_acyclic(std::size_t node_count,
                const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// Lines `a -> b` (or `a b`); node names are arbitrary tokens, `#` starts a
// comment. A line with a single token declares an isolated node.
SimplificationScheme parse_scheme(std::istream& in);

}  // namespace shirshov
