#include "shirshov/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shirshov {

Automaton::Automaton(std::size_t alphabet_size, std::size_t state_count)
    : alphabet_size_(alphabet_size),
      delta_(state_count, std::vector<std::vector<State>>(alphabet_size)),
      accepting_(state_count, 0) {
  if (alphabet_size == 0) throw std::invalid_argument("Automaton: empty alphabet");
}

void Automaton::check_state(State s) const {
  if (s >= state_count()) throw std::out_of_range("Automaton: bad state");
}

State Automaton::add_state(bool accepting) {
  delta_.emplace_back(alphabet_size_);
  accepting_.push_back(accepting ? 1 : 0);
  return static_cast<State>(state_count() - 1);
}

void Automaton::add_transition(State from, Letter letter, State to) {
  check_state(from);
  check_state(to);
  if (letter >= alphabet_size_) throw std::out_of_range("Automaton: bad letter");
  auto& targets = delta_[from][letter];
  auto it = std::lower_bound(targets.begin(), targets.end(), to);
  if (it == targets.end() || *it != to) targets.insert(it, to);
}

void Automaton::set_initial(State s) {
  check_state(s);
  auto it = std::lower_bound(initial_.begin(), initial_.end(), s);
  if (it == initial_.end() || *it != s) initial_.insert(it, s);
}

void Automaton::set_accepting(State s, bool accepting) {
  check_state(s);
  accepting_[s] = accepting ? 1 : 0;
}

bool Automaton::is_deterministic() const {
  if (initial_.size() != 1) return false;
  for (const auto& row : delta_) {
    for (const auto& targets : row) {
      if (targets.size() > 1) return false;
    }
  }
  return true;
}

std::optional<State> Automaton::next(State s, Letter l) const {
  const auto& t = delta_[s][l];
  if (t.empty()) return std::nullopt;
  return t.front();
}

bool Automaton::accepts(const Word& w) const {
  std::vector<State> cur = initial_;
  for (Letter l : w) {
    if (l >= alphabet_size_) return false;
    std::vector<State> nxt;
    for (State s : cur) {
      const auto& t = delta_[s][l];
      nxt.insert(nxt.end(), t.begin(), t.end());
    }
    std::sort(nxt.begin(), nxt.end());
    nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
    cur = std::move(nxt);
    if (cur.empty()) return false;
  }
  return std::any_of(cur.begin(), cur.end(),
                     [&](State s) { return is_accepting(s); });
}

std::string to_string(const GrowthClass& g) {
  switch (g.kind) {
    case GrowthClass::Kind::Exponential: return "exponential";
    case GrowthClass::Kind::Finite: return "finite";
    case GrowthClass::Kind::Polynomial:
      return "polynomial(" + std::to_string(g.gk) + ")";
  }
  return "?";
}

Automaton build_normal_word_automaton(const Alphabet& alphabet,
                                      const std::vector<Word>& forbidden) {
  const std::size_t k = alphabet.size();
  struct Node {
    std::vector<std::int64_t> next;
    std::size_t fail = 0;
    bool matched = false;
  };
  std::vector<Node> trie(1, Node{std::vector<std::int64_t>(k, -1), 0, false});
  for (const Word& w : forbidden) {
    if (w.empty()) {
      throw std::invalid_argument("build_normal_word_automaton: empty forbidden word");
    }
    if (!alphabet.valid(w)) {
      throw std::invalid_argument("build_normal_word_automaton: word not over alphabet");
    }
    std::size_t cur = 0;
    for (Letter l : w) {
      if (trie[cur].next[l] < 0) {
        trie[cur].next[l] = static_cast<std::int64_t>(trie.size());
        trie.push_back(Node{std::vector<std::int64_t>(k, -1), 0, false});
      }
      cur = static_cast<std::size_t>(trie[cur].next[l]);
    }
    trie[cur].matched = true;
  }
  // Breadth-first completion of the goto function.
  std::deque<std::size_t> queue;
  for (std::size_t l = 0; l < k; ++l) {
    if (trie[0].next[l] < 0) {
      trie[0].next[l] = 0;
    } else {
      queue.push_back(static_cast<std::size_t>(trie[0].next[l]));
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    trie[v].matched = trie[v].matched || trie[trie[v].fail].matched;
    for (std::size_t l = 0; l < k; ++l) {
      const std::int64_t child = trie[v].next[l];
      const std::int64_t via_fail = trie[trie[v].fail].next[l];
      if (child < 0) {
        trie[v].next[l] = via_fail;
      } else {
        trie[static_cast<std::size_t>(child)].fail =
            static_cast<std::size_t>(via_fail);
        queue.push_back(static_cast<std::size_t>(child));
      }
    }
  }
  std::vector<std::int64_t> id(trie.size(), -1);
  std::size_t live = 0;
  for (std::size_t v = 0; v < trie.size(); ++v) {
    if (!trie[v].matched) id[v] = static_cast<std::int64_t>(live++);
  }
  Automaton a(k, live);
  for (std::size_t v = 0; v < trie.size(); ++v) {
    if (id[v] < 0) continue;
    const auto s = static_cast<State>(id[v]);
    a.set_accepting(s);
    for (std::size_t l = 0; l < k; ++l) {
      const std::int64_t t = id[static_cast<std::size_t>(trie[v].next[l])];
      if (t >= 0) a.add_transition(s, static_cast<Letter>(l), static_cast<State>(t));
    }
  }
  a.set_initial(0);
  return minimize(a);
}

Automaton determinize(const Automaton& a) {
  const std::size_t k = a.alphabet_size();
  if (a.initial().empty()) {
    Automaton out(k, 1);
    out.set_initial(0);
    return out;
  }
  std::map<std::vector<State>, State> index;
  std::vector<std::vector<State>> subsets;
  Automaton out(k, 0);
  auto intern = [&](std::vector<State> subset) {
    auto [it, inserted] = index.try_emplace(subset, static_cast<State>(subsets.size()));
    if (inserted) {
      const bool acc = std::any_of(subset.begin(), subset.end(),
                                   [&](State s) { return a.is_accepting(s); });
      out.add_state(acc);
      subsets.push_back(std::move(subset));
    }
    return it->second;
  };
  out.set_initial(intern(a.initial()));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      std::vector<State> target;
      for (State s : subsets[i]) {
        const auto& t = a.successors(s, static_cast<Letter>(l));
        target.insert(target.end(), t.begin(), t.end());
      }
      if (target.empty()) continue;
      std::sort(target.begin(), target.end());
      target.erase(std::unique(target.begin(), target.end()), target.end());
      const State to = intern(std::move(target));
      out.add_transition(static_cast<State>(i), static_cast<Letter>(l), to);
    }
  }
  return out;
}

namespace {

std::vector<char> reachable(const Automaton& a) {
  std::vector<char> seen(a.state_count(), 0);
  std::vector<State> stack(a.initial().begin(), a.initial().end());
  for (State s : stack) seen[s] = 1;
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State t : a.successors(s, static_cast<Letter>(l))) {
        if (!seen[t]) {
          seen[t] = 1;
          stack.push_back(t);
        }
      }
    }
  }
  return seen;
}

std::vector<char> coreachable(const Automaton& a) {
  const std::size_t n = a.state_count();
  std::vector<std::vector<State>> pred(n);
  for (State s = 0; s < n; ++s) {
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State t : a.successors(s, static_cast<Letter>(l))) pred[t].push_back(s);
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<State> stack;
  for (State s = 0; s < n; ++s) {
    if (a.is_accepting(s)) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    State s = stack.back();
    stack.pop_back();
    for (State p : pred[s]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

bool is_canonical_empty(const Automaton& a) {
  if (a.state_count() != 1 || a.initial().size() != 1 || a.is_accepting(0)) {
    return false;
  }
  for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
    if (!a.successors(0, static_cast<Letter>(l)).empty()) return false;
  }
  return true;
}

void require_deterministic(const Automaton& a, const char* op) {
  if (!a.is_deterministic()) {
    throw std::invalid_argument(std::string(op) + ": automaton is not deterministic");
  }
}

// Tarjan's strongly connected components; component ids are in reverse
// topological order of the condensation.
std::vector<std::size_t> scc(const Automaton& a, std::size_t& count) {
  const std::size_t n = a.state_count();
  std::vector<std::size_t> comp(n, SIZE_MAX), low(n), order(n, SIZE_MAX);
  std::vector<State> stack;
  std::vector<char> on_stack(n, 0);
  std::size_t counter = 0;
  count = 0;
  std::function<void(State)> visit = [&](State v) {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State w : a.successors(v, static_cast<Letter>(l))) {
        if (order[w] == SIZE_MAX) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], order[w]);
        }
      }
    }
    if (low[v] == order[v]) {
      while (true) {
        State w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp[w] = count;
        if (w == v) break;
      }
      ++count;
    }
  };
  for (State v = 0; v < n; ++v) {
    if (order[v] == SIZE_MAX) visit(v);
  }
  return comp;
}

struct ComponentShape {
  std::vector<std::size_t> comp;
  std::size_t count = 0;
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> internal_edges;
};

ComponentShape component_shape(const Automaton& a) {
  ComponentShape sh;
  sh.comp = scc(a, sh.count);
  sh.vertices.assign(sh.count, 0);
  sh.internal_edges.assign(sh.count, 0);
  for (State v = 0; v < a.state_count(); ++v) {
    ++sh.vertices[sh.comp[v]];
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State w : a.successors(v, static_cast<Letter>(l))) {
        if (sh.comp[w] == sh.comp[v]) ++sh.internal_edges[sh.comp[v]];
      }
    }
  }
  return sh;
}

}  // namespace

Automaton trim(const Automaton& a) {
  const auto fwd = reachable(a);
  const auto bwd = coreachable(a);
  std::vector<std::int64_t> id(a.state_count(), -1);
  std::size_t kept = 0;
  for (State s = 0; s < a.state_count(); ++s) {
    if (fwd[s] && bwd[s]) id[s] = static_cast<std::int64_t>(kept++);
  }
  const bool any_initial = std::any_of(a.initial().begin(), a.initial().end(),
                                       [&](State s) { return id[s] >= 0; });
  if (!any_initial) {
    Automaton out(a.alphabet_size(), 1);
    out.set_initial(0);
    return out;
  }
  Automaton out(a.alphabet_size(), kept);
  for (State s = 0; s < a.state_count(); ++s) {
    if (id[s] < 0) continue;
    const auto ns = static_cast<State>(id[s]);
    out.set_accepting(ns, a.is_accepting(s));
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State t : a.successors(s, static_cast<Letter>(l))) {
        if (id[t] >= 0) {
          out.add_transition(ns, static_cast<Letter>(l), static_cast<State>(id[t]));
        }
      }
    }
  }
  for (State s : a.initial()) {
    if (id[s] >= 0) out.set_initial(static_cast<State>(id[s]));
  }
  return out;
}

bool is_trimmed(const Automaton& a) {
  if (is_canonical_empty(a)) return true;
  const auto fwd = reachable(a);
  const auto bwd = coreachable(a);
  for (State s = 0; s < a.state_count(); ++s) {
    if (!fwd[s] || !bwd[s]) return false;
  }
  return true;
}

Automaton minimize(const Automaton& input) {
  require_deterministic(input, "minimize");
  const Automaton a = trim(input);
  if (is_canonical_empty(a)) return a;
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet_size();
  // Missing transitions lead to an implicit dead class, encoded as SIZE_MAX.
  std::vector<std::size_t> cls(n);
  for (State s = 0; s < n; ++s) cls[s] = a.is_accepting(s) ? 1 : 0;
  std::size_t classes = 0;
  while (true) {
    std::map<std::vector<std::size_t>, std::size_t> signature_ids;
    std::vector<std::size_t> next(n);
    for (State s = 0; s < n; ++s) {
      std::vector<std::size_t> sig{cls[s]};
      for (std::size_t l = 0; l < k; ++l) {
        auto t = a.next(s, static_cast<Letter>(l));
        sig.push_back(t ? cls[*t] : SIZE_MAX);
      }
      auto [it, inserted] = signature_ids.try_emplace(sig, signature_ids.size());
      next[s] = it->second;
    }
    const std::size_t count = signature_ids.size();
    cls = std::move(next);
    if (count == classes) break;
    classes = count;
  }
  // Renumber so the initial state's class is 0 and the rest follow BFS
  // order, making the output canonical.
  std::vector<std::int64_t> id(classes, -1);
  std::vector<State> rep;
  std::deque<State> queue{a.initial().front()};
  id[cls[a.initial().front()]] = 0;
  rep.push_back(a.initial().front());
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < k; ++l) {
      auto t = a.next(s, static_cast<Letter>(l));
      if (t && id[cls[*t]] < 0) {
        id[cls[*t]] = static_cast<std::int64_t>(rep.size());
        rep.push_back(*t);
        queue.push_back(*t);
      }
    }
  }
  Automaton out(k, rep.size());
  for (std::size_t c = 0; c < rep.size(); ++c) {
    const State s = rep[c];
    out.set_accepting(static_cast<State>(c), a.is_accepting(s));
    for (std::size_t l = 0; l < k; ++l) {
      if (auto t = a.next(s, static_cast<Letter>(l))) {
        out.add_transition(static_cast<State>(c), static_cast<Letter>(l),
                           static_cast<State>(id[cls[*t]]));
      }
    }
  }
  out.set_initial(0);
  return out;
}

std::vector<Count> growth_per_length(const Automaton& a, std::size_t n) {
  require_deterministic(a, "growth");
  std::vector<Count> paths(a.state_count(), 0);
  paths[a.initial().front()] = 1;
  std::vector<Count> out;
  out.reserve(n + 1);
  for (std::size_t len = 0;; ++len) {
    Count accepted = 0;
    for (State s = 0; s < a.state_count(); ++s) {
      if (a.is_accepting(s)) accepted += paths[s];
    }
    out.push_back(std::move(accepted));
    if (len == n) break;
    std::vector<Count> next(a.state_count(), 0);
    for (State s = 0; s < a.state_count(); ++s) {
      if (paths[s] == 0) continue;
      for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
        if (auto t = a.next(s, static_cast<Letter>(l))) next[*t] += paths[s];
      }
    }
    paths = std::move(next);
  }
  return out;
}

std::vector<Count> growth(const Automaton& a, std::size_t n) {
  std::vector<Count> out = growth_per_length(a, n);
  for (std::size_t i = 1; i < out.size(); ++i) out[i] += out[i - 1];
  return out;
}

bool has_doubly_cyclic_state(const Automaton& a) {
  const ComponentShape sh = component_shape(a);
  for (std::size_t c = 0; c < sh.count; ++c) {
    // A strongly connected component is one simple cycle exactly when it
    // has as many internal edges as vertices (a lone vertex needs a loop).
    if (sh.internal_edges[c] > sh.vertices[c]) return true;
  }
  return false;
}

GrowthClass classify_growth(const Automaton& input) {
  require_deterministic(input, "classify_growth");
  if (!is_trimmed(input)) {
    throw std::invalid_argument("classify_growth: automaton is not trimmed");
  }
  const Automaton a = minimize(input);
  if (has_doubly_cyclic_state(a)) return {GrowthClass::Kind::Exponential, 0};
  const ComponentShape sh = component_shape(a);
  std::vector<char> cyclic(sh.count, 0);
  for (std::size_t c = 0; c < sh.count; ++c) {
    cyclic[c] = sh.internal_edges[c] > 0;
  }
  // Longest chain of cycles in the condensation. Tarjan numbers sinks
  // first, so successors of component c all have smaller ids.
  std::vector<std::vector<std::size_t>> succ(sh.count);
  for (State v = 0; v < a.state_count(); ++v) {
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State w : a.successors(v, static_cast<Letter>(l))) {
        if (sh.comp[w] != sh.comp[v]) succ[sh.comp[v]].push_back(sh.comp[w]);
      }
    }
  }
  std::vector<std::size_t> best(sh.count, 0);
  std::size_t d = 0;
  for (std::size_t c = 0; c < sh.count; ++c) {
    std::size_t below = 0;
    for (std::size_t s : succ[c]) below = std::max(below, best[s]);
    best[c] = below + (cyclic[c] ? 1 : 0);
    d = std::max(d, best[c]);
  }
  if (d == 0) return {GrowthClass::Kind::Finite, 0};
  return {GrowthClass::Kind::Polynomial, d};
}

namespace {

double log_of(const Count& v) {
  if (v <= 0) return -INFINITY;
  const std::size_t bits = boost::multiprecision::msb(v);
  if (bits < 1000) return std::log(v.convert_to<double>());
  const std::size_t shift = bits - 60;
  const Count top = v >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

}  // namespace

double gk_estimate(const Automaton& a, std::size_t n) {
  if (n < 2) throw std::invalid_argument("gk_estimate: n must be >= 2");
  const std::vector<Count> v = growth(a, n);
  return log_of(v.back()) / std::log(static_cast<double>(n));
}

std::string to_dot(const Automaton& a, const Alphabet& alphabet) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n";
  for (State s = 0; s < a.state_count(); ++s) {
    out << "  q" << s << " [shape=" << (a.is_accepting(s) ? "doublecircle" : "circle")
        << "];\n";
  }
  for (State s : a.initial()) {
    out << "  start" << s << " [shape=point];\n  start" << s << " -> q" << s << ";\n";
  }
  for (State s = 0; s < a.state_count(); ++s) {
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State t : a.successors(s, static_cast<Letter>(l))) {
        out << "  q" << s << " -> q" << t << " [label=\""
            << alphabet.symbol(static_cast<Letter>(l)) << "\"];\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace shirshov
