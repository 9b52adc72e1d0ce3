#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "shirshov/poly.hpp"
#include "shirshov/word.hpp"

namespace shirshov {

struct GroupLetter {
  Letter generator = 0;
  bool inverse = false;

  GroupLetter inverted() const { return {generator, !inverse}; }
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
  friend auto operator<=>(const GroupLetter&, const GroupLetter&) = default;
};

using GroupWord = std::vector<GroupLetter>;

GroupWord inverse(const GroupWord& w);
// Cancels adjacent x x^-1 pairs.
GroupWord free_reduce(const GroupWord& w);
// Free reduction, then cancellation across the two ends.
GroupWord cyclic_reduce(const GroupWord& w);
bool is_freely_reduced(const GroupWord& w);
bool is_cyclically_reduced(const GroupWord& w);

class Presentation {
 public:
  // Relators must be nonempty and cyclically reduced (std::invalid_argument
  // otherwise).
  Presentation(Alphabet generators, std::vector<GroupWord> relators);

  // <a,b,c,d | [a,b][c,d]>
  static Presentation genus2_surface();

  const Alphabet& generators() const noexcept { return generators_; }
  const std::vector<GroupWord>& relators() const noexcept { return relators_; }

 private:
  Alphabet generators_;
  std::vector<GroupWord> relators_;
};

// Cyclic permutations of every relator and its inverse, deduplicated, in
// generation order.
std::vector<GroupWord> symmetrize(const Presentation& p);

struct MetricCondition {
  bool holds = false;
  std::size_t max_piece = 0;
};

// Pieces are common prefixes of two distinct cyclic positions of relators
// or their inverses. C'(λ) holds iff every piece is shorter than λ times the
// length of each relator it belongs to. λ must lie in (0, 1).
MetricCondition check_metric_condition(const Presentation& p,
                                       const Rational& lambda);

struct DehnStep {
  enum class Kind { FreeReduce, CyclicReduce, Replace };
  Kind kind = Kind::FreeReduce;
  // Replace only: the factor at `position` equals the first `matched`
  // letters of symmetrized relator `relator`, and is replaced by the
  // inverse of the remaining letters.
  std::size_t position = 0;
  std::size_t relator = 0;
  std::size_t matched = 0;
  GroupWord result;
};

struct DehnTrivial {
  std::vector<DehnStep> steps;
};
struct DehnNontrivial {
  GroupWord residue;
  std::vector<DehnStep> steps;
};
struct DehnUnsupported {
  MetricCondition condition;
};
using DehnVerdict = std::variant<DehnTrivial, DehnNontrivial, DehnUnsupported>;

// Word problem for C'(1/6) presentations: repeatedly reduce and replace a
// factor covering more than half of a symmetrized relator r = p·q by q^-1.
DehnVerdict dehn_decide(const GroupWord& w, const Presentation& p);

// Re-executes a step log from w, checking every step; throws
// std::invalid_argument on a step that does not apply. Returns the final
// word.
GroupWord replay_dehn(const GroupWord& w, const std::vector<DehnStep>& steps,
                      const Presentation& p);

// Tokens separated by spaces: `a` or `a-` (inverse). "1" or "" is ε.
GroupWord parse_group_word(const Alphabet& generators, std::string_view text);
std::string format_group_word(const Alphabet& generators, const GroupWord& w);

// `generators: a b c d` followed by `relator: a b a- b- ...` lines.
Presentation parse_presentation(std::istream& in);

}  // namespace shirshov
