#include "shirshov/rewrite.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "shirshov/errors.hpp"

namespace shirshov {

RelationSet::RelationSet(std::vector<NcPoly> polys, MonomialOrder order)
    : order_(order) {
  if (polys.empty()) throw std::invalid_argument("RelationSet: no relations");
  for (auto& p : polys) {
    if (p.is_zero()) throw std::invalid_argument("RelationSet: zero relation");
    if (!(p.alphabet() == polys.front().alphabet())) {
      throw std::invalid_argument("RelationSet: mixed alphabets");
    }
    NcPoly monic = make_monic(p);
    leading_.push_back(leading_monomial(monic, order_).monomial);
    polys_.push_back(std::move(monic));
  }
}

std::size_t RelationSet::max_degree() const {
  std::size_t d = 0;
  for (const auto& p : polys_) d = std::max(d, p.degree());
  return d;
}

namespace {

struct Match {
  std::size_t rule;
  std::size_t position;
};

// Earliest position, then lowest rule index.
std::optional<Match> find_match(const Word& w, const RelationSet& relations) {
  std::optional<Match> best;
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (auto pos = w.find(relations.leading(i))) {
      if (!best || *pos < best->position) best = Match{i, *pos};
    }
  }
  return best;
}

}  // namespace

bool is_reducible(const Word& w, const RelationSet& relations) {
  return find_match(w, relations).has_value();
}

ReductionTrace reduce(const NcPoly& p, const RelationSet& relations) {
  if (!(p.alphabet() == relations.alphabet())) {
    throw std::invalid_argument("reduce: alphabet mismatch");
  }
  ReductionTrace trace{{}, p};
  NcPoly& cur = trace.result;
  // Terms above `bound` are known to be normal.
  std::optional<Word> bound;
  while (true) {
    std::optional<std::pair<Word, Match>> target;
    auto it = bound ? std::make_reverse_iterator(cur.terms().lower_bound(*bound))
                    : cur.terms().rbegin();
    for (; it != cur.terms().rend(); ++it) {
      if (auto m = find_match(it->first, relations)) {
        target.emplace(it->first, *m);
        break;
      }
    }
    if (!target) break;
    const auto& [w, m] = *target;
    const Rational c = cur.coefficient(w);
    const std::size_t lead_len = relations.leading(m.rule).size();
    Word left = w.prefix(m.position);
    Word right = w.suffix_from(m.position + lead_len);
    cur -= sandwich(left, relations[m.rule], right) * c;
    bound = w;
    trace.steps.push_back(ReductionStep{m.rule, std::move(left),
                                        std::move(right), c});
  }
  return trace;
}

NcPoly replay(const NcPoly& input, const std::vector<ReductionStep>& steps,
              const RelationSet& relations) {
  NcPoly out = input;
  for (const auto& s : steps) {
    if (s.rule >= relations.size()) {
      throw std::invalid_argument("replay: rule index out of range");
    }
    out -= sandwich(s.left, relations[s.rule], s.right) * s.coefficient;
  }
  return out;
}

std::vector<Composition> compositions(const NcPoly& f, const NcPoly& g,
                                      const MonomialOrder& order) {
  const Word lf = leading_monomial(f, order).monomial;
  const Word lg = leading_monomial(g, order).monomial;
  std::vector<Composition> out;
  // Overlaps: suffix of lf equals prefix of lg, both proper.
  for (std::size_t k = 1; k < lf.size() && k < lg.size(); ++k) {
    if (!std::equal(lf.end() - static_cast<std::ptrdiff_t>(k), lf.end(),
                    lg.begin())) {
      continue;
    }
    const Word a = lf.prefix(lf.size() - k);
    const Word c = lg.suffix_from(k);
    out.push_back(Composition{Composition::Kind::Overlap, a + lg,
                              sandwich({}, f, c) - sandwich(a, g, {})});
  }
  // Inclusions: lg is a factor of lf.
  if (lg.size() <= lf.size()) {
    for (std::size_t pos = 0; pos + lg.size() <= lf.size(); ++pos) {
      if (!std::equal(lg.begin(), lg.end(),
                      lf.begin() + static_cast<std::ptrdiff_t>(pos))) {
        continue;
      }
      if (lg.size() == lf.size() && f == g) continue;
      const Word a = lf.prefix(pos);
      const Word c = lf.suffix_from(pos + lg.size());
      out.push_back(Composition{Composition::Kind::Inclusion, lf,
                                f - sandwich(a, g, c)});
    }
  }
  return out;
}

RelationSet interreduce(const RelationSet& relations) {
  std::vector<NcPoly> rules = relations.polys();
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(rules.begin(), rules.end(),
              [](const NcPoly& a, const NcPoly& b) {
                return DegLexLess{}(leading_monomial(a).monomial,
                                    leading_monomial(b).monomial);
              });
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::vector<NcPoly> others;
      for (std::size_t j = 0; j < rules.size(); ++j) {
        if (j != i) others.push_back(rules[j]);
      }
      NcPoly r = others.empty()
                     ? rules[i]
                     : reduce(rules[i], RelationSet(others, relations.order()))
                           .result;
      if (r.is_zero()) {
        rules.erase(rules.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = make_monic(r);
      if (!(r == rules[i])) {
        rules[i] = std::move(r);
        changed = true;
        break;
      }
    }
  }
  return RelationSet(std::move(rules), relations.order());
}

namespace {

struct PendingKey {
  Word ambiguity;
  std::size_t serial;
  bool operator<(const PendingKey& o) const {
    if (ambiguity.size() != o.ambiguity.size()) {
      return ambiguity.size() < o.ambiguity.size();
    }
    return std::tie(ambiguity, serial) < std::tie(o.ambiguity, o.serial);
  }
};

}  // namespace

Completion complete(const RelationSet& relations, std::size_t max_deg) {
  if (max_deg < relations.max_degree()) {
    throw std::invalid_argument(
        "complete: degree bound below the degree of the relations");
  }
  const MonomialOrder order = relations.order();
  RelationSet basis = interreduce(relations);
  std::vector<NcPoly> rules = basis.polys();
  std::map<PendingKey, NcPoly> pending;
  std::size_t serial = 0;
  auto enqueue = [&](const NcPoly& f, const NcPoly& g) {
    for (auto& comp : compositions(f, g, order)) {
      if (comp.value.is_zero()) continue;
      pending.emplace(PendingKey{std::move(comp.ambiguity), serial++},
                      std::move(comp.value));
    }
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = 0; j < rules.size(); ++j) enqueue(rules[i], rules[j]);
  }

  CompletionStatus status = CompletionStatus::Complete;
  while (!pending.empty()) {
    auto it = pending.begin();
    if (it->first.ambiguity.size() > max_deg) {
      status = CompletionStatus::BoundExceeded;
      break;
    }
    NcPoly value = std::move(it->second);
    pending.erase(it);
    NcPoly r = reduce(value, RelationSet(rules, order)).result;
    if (r.is_zero()) continue;
    rules.push_back(make_monic(r));
    const NcPoly& added = rules.back();
    for (std::size_t i = 0; i + 1 < rules.size(); ++i) {
      enqueue(rules[i], added);
      enqueue(added, rules[i]);
    }
    enqueue(added, added);
  }

  RelationSet result(std::move(rules), order);
  if (status == CompletionStatus::Complete) result = interreduce(result);
  return Completion{std::move(result), status};
}

Membership is_member(const NcPoly& h, const RelationSet& relations,
                     std::size_t max_deg) {
  Completion c = complete(relations, std::max(max_deg, relations.max_degree()));
  ReductionTrace trace = reduce(h, c.basis);
  if (trace.result.is_zero()) return InIdeal{std::move(trace), std::move(c.basis)};
  if (c.status == CompletionStatus::Complete) {
    return NotInIdealUpTo{max_deg, std::move(trace.result)};
  }
  return MembershipUnknown{max_deg, std::move(trace.result)};
}

std::string format_trace(const ReductionTrace& trace,
                         const Alphabet& alphabet) {
  std::ostringstream out;
  auto word = [&](const Word& w) {
    return w.empty() ? std::string("1") : alphabet.format(w);
  };
  for (const auto& s : trace.steps) {
    out << s.rule << ", " << word(s.left) << ", " << word(s.right) << ", "
        << format_rational(s.coefficient) << "\n";
  }
  return out.str();
}

RelationSet parse_relations(const Alphabet& alphabet, std::istream& in) {
  std::vector<NcPoly> polys;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      NcPoly p = parse_poly(alphabet, line);
      if (p.is_zero()) throw ParseError("relation is zero", 0, 1);
      polys.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), lineno, e.column());
    }
  }
  if (polys.empty()) throw ParseError("no relations found", lineno + 1, 1);
  return RelationSet(std::move(polys));
}

}  // namespace shirshov
