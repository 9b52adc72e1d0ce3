#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "shirshov/poly.hpp"

namespace shirshov {

// Monic generators of an ideal, each read as the rewriting rule
// lead(g) -> lead(g) - g.
class RelationSet {
 public:
  // Drops nothing: throws std::invalid_argument on a zero polynomial, an
  // empty list, or mixed alphabets. Each polynomial is made monic.
  explicit RelationSet(std::vector<NcPoly> polys,
                       MonomialOrder order = MonomialOrder::deglex());

  const std::vector<NcPoly>& polys() const noexcept { return polys_; }
  const NcPoly& operator[](std::size_t i) const { return polys_[i]; }
  const Word& leading(std::size_t i) const { return leading_[i]; }
  std::size_t size() const noexcept { return polys_.size(); }
  const Alphabet& alphabet() const { return polys_.front().alphabet(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t max_degree() const;

 private:
  std::vector<NcPoly> polys_;
  std::vector<Word> leading_;
  MonomialOrder order_;
};

// One rewrite: subtract coefficient · left · g_rule · right.
struct ReductionStep {
  std::size_t rule = 0;
  Word left;
  Word right;
  Rational coefficient;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  NcPoly result;
};

// Rewrites the greatest reducible monomial until none remains. The result
// is the normal form of p; input - Σ c·u·g·v = result over the steps.
ReductionTrace reduce(const NcPoly& p, const RelationSet& relations);

// input - Σ coefficient·left·g_rule·right.
NcPoly replay(const NcPoly& input, const std::vector<ReductionStep>& steps,
              const RelationSet& relations);

// True when some leading monomial of `relations` is a factor of w.
bool is_reducible(const Word& w, const RelationSet& relations);

struct Composition {
  enum class Kind { Overlap, Inclusion };
  Kind kind;
  Word ambiguity;  // the word rewritten two ways
  NcPoly value;    // difference of the two one-step rewrites
};

// Compositions of monic f and g: every proper overlap lead(f)·c = a·lead(g)
// with a, c nonempty, and every inclusion lead(f) = a·lead(g)·c (except
// the trivial one of a polynomial with itself). Values may be zero.
std::vector<Composition> compositions(const NcPoly& f, const NcPoly& g,
                                      const MonomialOrder& order =
                                          MonomialOrder::deglex());

enum class CompletionStatus { Complete, BoundExceeded };

struct Completion {
  RelationSet basis;
  CompletionStatus status;
};

// Buchberger-style closure. Pending compositions are processed in
// increasing deglex order of their ambiguity words; the run stops with
// BoundExceeded when the smallest pending one has degree > max_deg. A
// Complete result is interreduced. Throws std::invalid_argument if
// max_deg is below the degree of the input.
Completion complete(const RelationSet& relations, std::size_t max_deg);

// Removes redundant generators and reduces every generator modulo the
// others.
RelationSet interreduce(const RelationSet& relations);

struct InIdeal {
  ReductionTrace trace;  // steps refer to `basis`; trace.result is zero
  RelationSet basis;
};
struct NotInIdealUpTo {
  std::size_t degree;
  NcPoly normal_form;
};
struct MembershipUnknown {
  std::size_t degree;
  NcPoly normal_form;
};
using Membership = std::variant<InIdeal, NotInIdealUpTo, MembershipUnknown>;

Membership is_member(const NcPoly& h, const RelationSet& relations,
                     std::size_t max_deg);

// `rule#, left, right, coeff` per line; ε prints as 1.
std::string format_trace(const ReductionTrace& trace, const Alphabet& alphabet);

// One polynomial per nonblank line, `#` comments.
RelationSet parse_relations(const Alphabet& alphabet, std::istream& in);

}  // namespace shirshov
