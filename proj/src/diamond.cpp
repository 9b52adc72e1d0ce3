#include "shirshov/diamond.hpp"

#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shirshov/errors.hpp"

namespace shirshov {

bool is_acyclic(std::size_t node_count,
                const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::size_t> indegree(node_count, 0);
  std::vector<std::vector<std::size_t>> succ(node_count);
  for (auto [a, b] : edges) {
    succ[a].push_back(b);
    ++indegree[b];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < node_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t w : succ[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == node_count;
}

SimplificationScheme::SimplificationScheme(
    std::size_t node_count,
    std::vector<std::pair<std::size_t, std::size_t>> edges,
    std::vector<std::string> names)
    : succ_(node_count), edges_(std::move(edges)), names_(std::move(names)) {
  for (auto [a, b] : edges_) {
    if (a >= node_count || b >= node_count) {
      throw std::invalid_argument("SimplificationScheme: edge endpoint out of range");
    }
    succ_[a].push_back(b);
  }
  if (!is_acyclic(node_count, edges_)) {
    throw std::invalid_argument("SimplificationScheme: graph has a cycle");
  }
  if (names_.empty()) {
    for (std::size_t v = 0; v < node_count; ++v) names_.push_back(std::to_string(v));
  }
  if (names_.size() != node_count) {
    throw std::invalid_argument("SimplificationScheme: wrong number of names");
  }
}

bool DiamondReport::all_equal() const {
  const bool b = unique_normal_forms;
  return church_rosser_transitive == b && locally_confluent == b &&
         one_minimum_per_component == b && connectivity_is_joinability == b;
}

bool DiamondReport::all_true() const {
  return unique_normal_forms && all_equal();
}

DiamondReport diamond_report(const SimplificationScheme& scheme) {
  const std::size_t n = scheme.node_count();
  // reach[v][w]: w is a descendant of v (reflexive).
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> stack{v};
    reach[v][v] = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : scheme.successors(x)) {
        if (!reach[v][y]) {
          reach[v][y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  auto joinable = [&](std::size_t a, std::size_t b) {
    for (std::size_t z = 0; z < n; ++z) {
      if (reach[a][z] && reach[b][z]) return true;
    }
    return false;
  };
  std::vector<char> is_sink(n);
  for (std::size_t v = 0; v < n; ++v) is_sink[v] = scheme.successors(v).empty();

  DiamondReport r;

  r.unique_normal_forms = true;
  for (std::size_t v = 0; v < n && r.unique_normal_forms; ++v) {
    std::size_t forms = 0;
    for (std::size_t z = 0; z < n; ++z) forms += reach[v][z] && is_sink[z];
    r.unique_normal_forms = forms == 1;
  }

  std::vector<std::vector<char>> join(n, std::vector<char>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) join[a][b] = joinable(a, b);
  }

  r.church_rosser_transitive = true;
  for (std::size_t a = 0; a < n && r.church_rosser_transitive; ++a) {
    for (std::size_t b = 0; b < n && r.church_rosser_transitive; ++b) {
      if (!join[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (join[b][c] && !join[a][c]) {
          r.church_rosser_transitive = false;
          break;
        }
      }
    }
  }

  r.locally_confluent = true;
  for (std::size_t v = 0; v < n && r.locally_confluent; ++v) {
    const auto& s = scheme.successors(v);
    for (std::size_t i = 0; i < s.size() && r.locally_confluent; ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!join[s[i]][s[j]]) {
          r.locally_confluent = false;
          break;
        }
      }
    }
  }

  // Weak components via union-find.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : scheme.edges()) parent[find(a)] = find(b);

  std::vector<std::size_t> minima(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (is_sink[v]) ++minima[find(v)];
  }
  r.one_minimum_per_component = true;
  for (std::size_t v = 0; v < n; ++v) {
    if (find(v) == v && minima[v] != 1) r.one_minimum_per_component = false;
  }

  r.connectivity_is_joinability = true;
  for (std::size_t a = 0; a < n && r.connectivity_is_joinability; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if ((find(a) == find(b)) != static_cast<bool>(join[a][b])) {
        r.connectivity_is_joinability = false;
        break;
      }
    }
  }
  return r;
}

SimplificationScheme parse_scheme(std::istream& in) {
  std::map<std::string, std::size_t> index;
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto node = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
      if (line[i] == '-' && line[i + 1] == '>') {
        line[i] = ' ';
        line[i + 1] = ' ';
      }
    }
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string t; tokens >> t;) parts.push_back(t);
    if (parts.empty()) continue;
    if (parts.size() > 2) {
      throw ParseError("expected `a -> b`", lineno,
                       line.find(parts[2]) + 1);
    }
    const std::size_t a = node(parts[0]);
    if (parts.size() == 2) edges.emplace_back(a, node(parts[1]));
  }
  const std::size_t n = names.size();
  return SimplificationScheme(n, std::move(edges), std::move(names));
}

}  // namespace shirshov
