#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shirshov/word.hpp"

namespace shirshov {

using State = std::uint32_t;
using Count = boost::multiprecision::cpp_int;

// Finite automaton without ε-edges. Missing transitions go nowhere, so a
// deterministic automaton here is a partial DFA.
class Automaton {
 public:
  Automaton(std::size_t alphabet_size, std::size_t state_count);

  std::size_t alphabet_size() const noexcept { return alphabet_size_; }
  std::size_t state_count() const noexcept { return accepting_.size(); }

  State add_state(bool accepting = false);
  void add_transition(State from, Letter letter, State to);
  void set_initial(State s);
  void set_accepting(State s, bool accepting = true);

  const std::vector<State>& successors(State s, Letter l) const {
    return delta_[s][l];
  }
  const std::vector<State>& initial() const noexcept { return initial_; }
  bool is_accepting(State s) const { return accepting_[s] != 0; }

  // Exactly one initial state and at most one successor per (state, letter).
  bool is_deterministic() const;
  // Successor in a deterministic automaton.
  std::optional<State> next(State s, Letter l) const;
  bool accepts(const Word& w) const;

 private:
  void check_state(State s) const;

  std::size_t alphabet_size_;
  std::vector<std::vector<std::vector<State>>> delta_;
  std::vector<State> initial_;
  std::vector<char> accepting_;
};

struct GrowthClass {
  enum class Kind { Exponential, Polynomial, Finite };
  Kind kind;
  std::size_t gk = 0;  // Gelfand–Kirillov dimension when Polynomial

  friend bool operator==(const GrowthClass&, const GrowthClass&) = default;
};

std::string to_string(const GrowthClass& g);

// Minimal trimmed DFA for the words avoiding every forbidden factor
// (Aho–Corasick goto automaton with the matching states removed). Throws
// std::invalid_argument on an empty forbidden word.
Automaton build_normal_word_automaton(const Alphabet& alphabet,
                                      const std::vector<Word>& forbidden);

// Subset construction. The empty subset is never materialized; an
// automaton with no initial state becomes one non-accepting state.
Automaton determinize(const Automaton& a);

// Keeps states that are reachable and co-reachable. A deterministic input
// with an empty language becomes a single non-accepting initial state.
Automaton trim(const Automaton& a);
bool is_trimmed(const Automaton& a);

// Moore partition refinement on a deterministic automaton; output is
// trimmed and minimal.
Automaton minimize(const Automaton& a);

// V(0..n): V(k) = number of accepted words of length <= k.
std::vector<Count> growth(const Automaton& a, std::size_t n);
// Accepted words of each exact length 0..n.
std::vector<Count> growth_per_length(const Automaton& a, std::size_t n);

// Some state lies on two distinct simple cycles, i.e. some strongly
// connected component is not a single simple cycle.
bool has_doubly_cyclic_state(const Automaton& a);

// Exponential if a state is doubly cyclic; Finite if the graph is acyclic;
// otherwise Polynomial(d) with d the largest number of cycles met along a
// path of the condensation. Requires a deterministic trimmed automaton
// (std::invalid_argument otherwise); minimizes before inspecting the graph.
GrowthClass classify_growth(const Automaton& a);

// ln V(n) / ln n. For polynomial growth of degree d this approaches d from
// below. Throws std::invalid_argument for n < 2.
double gk_estimate(const Automaton& a, std::size_t n);

std::string to_dot(const Automaton& a, const Alphabet& alphabet);

}  // namespace shirshov
