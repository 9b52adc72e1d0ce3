#include "shirshov/group.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "shirshov/errors.hpp"

namespace shirshov {

GroupWord inverse(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverted());
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  for (const GroupLetter& x : w) {
    if (!out.empty() && out.back() == x.inverted()) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return GroupWord(r.begin() + static_cast<std::ptrdiff_t>(lo),
                   r.begin() + static_cast<std::ptrdiff_t>(hi));
}

bool is_freely_reduced(const GroupWord& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] == w[i + 1].inverted()) return false;
  }
  return true;
}

bool is_cyclically_reduced(const GroupWord& w) {
  return is_freely_reduced(w) &&
         (w.size() < 2 || !(w.front() == w.back().inverted()));
}

Presentation::Presentation(Alphabet generators, std::vector<GroupWord> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  for (const GroupWord& r : relators_) {
    if (r.empty()) throw std::invalid_argument("Presentation: empty relator");
    if (!is_cyclically_reduced(r)) {
      throw std::invalid_argument("Presentation: relator not cyclically reduced");
    }
    for (const GroupLetter& x : r) {
      if (x.generator >= generators_.size()) {
        throw std::invalid_argument("Presentation: unknown generator");
      }
    }
  }
}

Presentation Presentation::genus2_surface() {
  Alphabet gens("abcd");
  return Presentation(gens, {parse_group_word(gens, "a b a- b- c d c- d-")});
}

namespace {

struct Position {
  GroupWord word;
  std::size_t relator_length;
};

// Every cyclic position of every relator and inverse, without
// deduplication: coinciding words from different positions are exactly the
// overlaps a proper power or a repeated relator produces.
std::vector<Position> cyclic_positions(const Presentation& p) {
  std::vector<Position> out;
  for (const GroupWord& r : p.relators()) {
    for (const GroupWord& base : {r, inverse(r)}) {
      for (std::size_t s = 0; s < base.size(); ++s) {
        GroupWord rot(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
        rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
        out.push_back(Position{std::move(rot), r.size()});
      }
    }
  }
  return out;
}

}  // namespace

std::vector<GroupWord> symmetrize(const Presentation& p) {
  std::vector<GroupWord> out;
  std::set<GroupWord> seen;
  for (auto& pos : cyclic_positions(p)) {
    if (seen.insert(pos.word).second) out.push_back(std::move(pos.word));
  }
  return out;
}

MetricCondition check_metric_condition(const Presentation& p,
                                       const Rational& lambda) {
  if (lambda <= 0 || lambda >= 1) {
    throw std::invalid_argument("check_metric_condition: lambda must lie in (0,1)");
  }
  const auto positions = cyclic_positions(p);
  MetricCondition mc{true, 0};
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      const GroupWord& a = positions[i].word;
      const GroupWord& b = positions[j].word;
      std::size_t lcp = 0;
      while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
      mc.max_piece = std::max(mc.max_piece, lcp);
      const Rational piece(lcp);
      if (piece >= lambda * positions[i].relator_length ||
          piece >= lambda * positions[j].relator_length) {
        mc.holds = false;
      }
    }
  }
  return mc;
}

namespace {

struct Replacement {
  std::size_t position;
  std::size_t relator;
  std::size_t matched;
};

// Earliest position, then longest match, then lowest relator index.
std::optional<Replacement> find_replacement(const GroupWord& w,
                                            const std::vector<GroupWord>& sym) {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    std::optional<Replacement> best;
    for (std::size_t r = 0; r < sym.size(); ++r) {
      const GroupWord& rel = sym[r];
      std::size_t len = 0;
      while (len < rel.size() && pos + len < w.size() && w[pos + len] == rel[len]) {
        ++len;
      }
      if (2 * len > rel.size() && (!best || len > best->matched)) {
        best = Replacement{pos, r, len};
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

GroupWord apply_replacement(const GroupWord& w, const GroupWord& relator,
                            std::size_t position, std::size_t matched) {
  GroupWord rest(relator.begin() + static_cast<std::ptrdiff_t>(matched), relator.end());
  GroupWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(position));
  const GroupWord inv = inverse(rest);
  out.insert(out.end(), inv.begin(), inv.end());
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(position + matched),
             w.end());
  return out;
}

}  // namespace

DehnVerdict dehn_decide(const GroupWord& w, const Presentation& p) {
  const MetricCondition mc = check_metric_condition(p, Rational(1, 6));
  if (!mc.holds) return DehnUnsupported{mc};
  const std::vector<GroupWord> sym = symmetrize(p);
  std::vector<DehnStep> steps;
  GroupWord cur = w;
  while (true) {
    GroupWord reduced = free_reduce(cur);
    if (reduced != cur) {
      steps.push_back(DehnStep{DehnStep::Kind::FreeReduce, 0, 0, 0, reduced});
      cur = std::move(reduced);
    }
    reduced = cyclic_reduce(cur);
    if (reduced != cur) {
      steps.push_back(DehnStep{DehnStep::Kind::CyclicReduce, 0, 0, 0, reduced});
      cur = std::move(reduced);
    }
    if (cur.empty()) return DehnTrivial{std::move(steps)};
    auto rep = find_replacement(cur, sym);
    if (!rep) return DehnNontrivial{std::move(cur), std::move(steps)};
    cur = apply_replacement(cur, sym[rep->relator], rep->position, rep->matched);
    steps.push_back(DehnStep{DehnStep::Kind::Replace, rep->position, rep->relator,
                             rep->matched, cur});
  }
}

GroupWord replay_dehn(const GroupWord& w, const std::vector<DehnStep>& steps,
                      const Presentation& p) {
  const std::vector<GroupWord> sym = symmetrize(p);
  GroupWord cur = w;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const DehnStep& s = steps[i];
    GroupWord next;
    switch (s.kind) {
      case DehnStep::Kind::FreeReduce:
        next = free_reduce(cur);
        break;
      case DehnStep::Kind::CyclicReduce:
        next = cyclic_reduce(cur);
        break;
      case DehnStep::Kind::Replace: {
        if (s.relator >= sym.size()) {
          throw std::invalid_argument("replay_dehn: relator index out of range");
        }
        const GroupWord& rel = sym[s.relator];
        if (2 * s.matched <= rel.size() || s.position + s.matched > cur.size() ||
            !std::equal(rel.begin(), rel.begin() + static_cast<std::ptrdiff_t>(s.matched),
                        cur.begin() + static_cast<std::ptrdiff_t>(s.position))) {
          throw std::invalid_argument("replay_dehn: step " + std::to_string(i) +
                                      " does not match its relator");
        }
        next = apply_replacement(cur, rel, s.position, s.matched);
        if (next.size() >= cur.size()) {
          throw std::invalid_argument("replay_dehn: replacement does not shorten");
        }
        break;
      }
    }
    if (next != s.result) {
      throw std::invalid_argument("replay_dehn: step " + std::to_string(i) +
                                  " result mismatch");
    }
    cur = std::move(next);
  }
  return cur;
}

GroupWord parse_group_word(const Alphabet& generators, std::string_view text) {
  GroupWord out;
  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '1' && !any) {
      ++i;
      any = true;
      continue;
    }
    auto r = generators.rank(c);
    if (!r) {
      throw ParseError(std::string("unknown generator '") + c + "'", 0, i + 1);
    }
    any = true;
    GroupLetter x{*r, false};
    ++i;
    if (i < text.size() && text[i] == '-') {
      x.inverse = true;
      ++i;
    }
    out.push_back(x);
  }
  return out;
}

std::string format_group_word(const Alphabet& generators, const GroupWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const GroupLetter& x : w) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(generators.symbol(x.generator));
    if (x.inverse) out.push_back('-');
  }
  return out;
}

Presentation parse_presentation(std::istream& in) {
  std::optional<Alphabet> gens;
  std::vector<GroupWord> relators;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected `generators:` or `relator:`", lineno, first + 1);
    }
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const std::string body = line.substr(colon + 1);
    if (key == "generators") {
      if (gens) throw ParseError("generators declared twice", lineno, first + 1);
      std::string symbols;
      for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c == ' ' || c == '\t' || c == '\r') continue;
        if (Alphabet::is_reserved(c) || symbols.find(c) != std::string::npos) {
          throw ParseError(std::string("invalid generator '") + c + "'", lineno,
                           colon + 2 + i);
        }
        symbols.push_back(c);
      }
      if (symbols.empty()) throw ParseError("no generators", lineno, colon + 2);
      gens.emplace(symbols);
    } else if (key == "relator") {
      if (!gens) throw ParseError("relator before generators", lineno, first + 1);
      GroupWord r;
      try {
        r = parse_group_word(*gens, body);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), lineno, colon + 1 + e.column());
      }
      if (r.empty()) throw ParseError("empty relator", lineno, colon + 2);
      if (!is_cyclically_reduced(r)) {
        throw ParseError("relator is not cyclically reduced", lineno, colon + 2);
      }
      relators.push_back(std::move(r));
    } else {
      throw ParseError("unknown key `" + key + "`", lineno, first + 1);
    }
  }
  if (!gens) throw ParseError("missing `generators:` line", lineno + 1, 1);
  return Presentation(std::move(*gens), std::move(relators));
}

}  // namespace shirshov
