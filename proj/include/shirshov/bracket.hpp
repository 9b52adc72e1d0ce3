#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "shirshov/word.hpp"

namespace shirshov {

// Full binary bracketing of a nonempty word. Immutable; copies share
// subtrees.
class NonAssocWord {
 public:
  static NonAssocWord leaf(Letter letter);
  static NonAssocWord join(NonAssocWord left, NonAssocWord right);

  bool is_leaf() const noexcept { return node_->left == nullptr; }
  // Precondition: is_leaf().
  Letter letter() const { return node_->letter; }
  // Precondition: !is_leaf().
  NonAssocWord left() const { return NonAssocWord(node_->left); }
  NonAssocWord right() const { return NonAssocWord(node_->right); }

  std::size_t length() const noexcept { return node_->length; }
  Word flatten() const;

  friend bool operator==(const NonAssocWord& a, const NonAssocWord& b);

 private:
  struct Node {
    Letter letter = 0;
    std::size_t length = 1;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  explicit NonAssocWord(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  void flatten_into(Word& out) const;

  std::shared_ptr<const Node> node_;
};

enum class OmegaKind { K, AK, Lie };

// Unique nonassociative-regular bracketing of a regular word, built from
// the standard factorization w = u·v with v the longest proper regular
// suffix. Throws std::invalid_argument if w is not regular.
NonAssocWord shirshov_bracketing(const Word& w);

// flatten(t) is regular and, at every node [[v][w]], both children are
// nonassociative-regular with v > w, and v = [[v1][v2]] implies v2 <= w.
// Comparisons use regular_order.
bool is_nonassoc_regular(const NonAssocWord& t);

// Recursive Ω-regularity: both children Ω-regular; u >= v for K, u > v for
// AK and Lie; for Lie, u = u1·u2 additionally requires u2 <= v.
bool is_omega_regular(const NonAssocWord& t, OmegaKind kind);

// Every full bracketing of w (Catalan many), in a fixed recursive order.
std::vector<NonAssocWord> all_bracketings(const Word& w);

// "[b,[b,a]]" style; a leaf prints as its symbol.
std::string format(const Alphabet& alphabet, const NonAssocWord& t);
NonAssocWord parse_bracketing(const Alphabet& alphabet, std::string_view text);

}  // namespace shirshov
