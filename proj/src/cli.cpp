#include "shirshov/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "shirshov/automaton.hpp"
#include "shirshov/bracket.hpp"
#include "shirshov/diamond.hpp"
#include "shirshov/errors.hpp"
#include "shirshov/group.hpp"
#include "shirshov/height.hpp"
#include "shirshov/lyndon.hpp"
#include "shirshov/morphism.hpp"
#include "shirshov/poly.hpp"
#include "shirshov/rewrite.hpp"
#include "shirshov/vdw.hpp"

namespace shirshov::cli {
namespace {

using json = nlohmann::ordered_json;

// Everything a subcommand produces: human text, the JSON envelope parts
// and the exit status.
struct Outcome {
  int status = kSuccess;
  std::string text;
  json result = json::object();
  json certificate;  // null when absent
};

struct Invocation {
  std::string command;
  json inputs = json::object();
  std::function<Outcome()> action;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json count_json(const Count& c) {
  if (c <= Count(std::numeric_limits<std::uint64_t>::max())) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

Alphabet word_alphabet(const std::string& given, std::vector<std::string_view> texts) {
  return given.empty() ? Alphabet::infer(texts) : Alphabet(given);
}

json steps_json(const std::vector<ReductionStep>& steps, const Alphabet& a) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"rule", s.rule},
                   {"left", a.format(s.left)},
                   {"right", a.format(s.right)},
                   {"coefficient", format_rational(s.coefficient)}});
  }
  return out;
}

json basis_json(const RelationSet& basis) {
  json out = json::array();
  for (const auto& g : basis.polys()) out.push_back(format_poly(g));
  return out;
}

std::string basis_text(const RelationSet& basis) {
  std::string text;
  for (const auto& g : basis.polys()) text += format_poly(g) + "\n";
  return text;
}

// Relation files and polynomial arguments share one alphabet.
struct PolyInput {
  Alphabet alphabet;
  RelationSet relations;
};

PolyInput load_relations(const std::string& path, const std::string& given,
                         const std::string& extra) {
  const std::string text = read_file(path);
  const Alphabet a = word_alphabet(given, {text, extra});
  std::istringstream in(text);
  return {a, parse_relations(a, in)};
}

Morphism load_morphism(const std::string& name) {
  if (name == "thue-binary" || name == "thue-ternary") return Morphism::named(name);
  std::istringstream in(read_file(name));
  return parse_morphism(in);
}

Automaton forbidden_automaton(const std::string& given,
                              const std::vector<std::string>& forbid,
                              Alphabet& alphabet) {
  if (given.empty()) {
    std::vector<std::string_view> texts{"xy"};
    for (const auto& f : forbid) texts.emplace_back(f);
    alphabet = Alphabet::infer(texts);
  } else {
    alphabet = Alphabet(given);
  }
  std::vector<Word> words;
  for (const auto& f : forbid) words.push_back(alphabet.parse(f));
  return build_normal_word_automaton(alphabet, words);
}

std::string group_step_kind(DehnStep::Kind k) {
  switch (k) {
    case DehnStep::Kind::FreeReduce:
      return "free-reduce";
    case DehnStep::Kind::CyclicReduce:
      return "cyclic-reduce";
    case DehnStep::Kind::Replace:
      return "replace";
  }
  return "";
}

json dehn_steps_json(const std::vector<DehnStep>& steps, const Alphabet& g) {
  json out = json::array();
  for (const auto& s : steps) {
    json step = {{"kind", group_step_kind(s.kind)}, {"result", format_group_word(g, s.result)}};
    if (s.kind == DehnStep::Kind::Replace) {
      step["position"] = s.position;
      step["relator"] = s.relator;
      step["matched"] = s.matched;
    }
    out.push_back(step);
  }
  return out;
}

std::string dehn_steps_text(const std::vector<DehnStep>& steps, const Alphabet& g) {
  std::string text;
  for (const auto& s : steps) {
    text += "  " + group_step_kind(s.kind);
    if (s.kind == DehnStep::Kind::Replace) {
      text += " at " + std::to_string(s.position) + " relator " + std::to_string(s.relator) +
              " matched " + std::to_string(s.matched);
    }
    text += ": " + format_group_word(g, s.result) + "\n";
  }
  return text;
}

class Cli {
 public:
  Invocation inv;

  void add_all(CLI::App& app) {
    add_lyndon(app);
    add_fgf(app);
    add_poly(app);
    add_diamond(app);
    add_auto(app);
    add_height(app);
    add_morph(app);
    add_group(app);
    add_vdw(app);
  }

 private:
  std::string word, alphabet, relations, text, path, morphism, generators;
  std::string presentation = "genus2";
  std::vector<std::string> forbid;
  std::size_t max_len = 8, max_deg = 8, growth_n = 10, gk_n = 0, parts = 2;
  std::size_t times = 1, k = 2, ap_len = 3, colors = 2, max_n = 40;
  std::uint64_t budget = std::uint64_t{1} << 24;
  bool dot = false, cyclic = false;

  void add_lyndon(CLI::App& app) {
    auto* lyndon = app.add_subcommand("lyndon", "Regular (Lyndon-Shirshov) words");
    lyndon->require_subcommand(1);

    auto* check = lyndon->add_subcommand("check", "Is the word regular?");
    check->add_option("word", word, "word")->required();
    check->add_option("--alphabet", alphabet, "ordered letters");
    check->callback([&] {
      inv.command = "lyndon check";
      inv.inputs = {{"word", word}};
      inv.action = [&] {
        const Alphabet a = word_alphabet(alphabet, {word});
        const bool r = !word.empty() && is_assoc_regular(a.parse(word));
        return Outcome{r ? kSuccess : kNegative, r ? "regular" : "not regular",
                       {{"regular", r}}, nullptr};
      };
    });

    auto* gen = lyndon->add_subcommand("gen", "All regular words up to a length");
    gen->add_option("--alphabet", alphabet, "ordered letters")->required();
    gen->add_option("--max-len", max_len, "largest length")->required();
    gen->callback([&] {
      inv.command = "lyndon gen";
      inv.inputs = {{"alphabet", alphabet}, {"max_len", max_len}};
      inv.action = [&] {
        const Alphabet a(alphabet);
        Outcome o;
        json words = json::array();
        for (const auto& w : generate_regular(a, max_len)) {
          o.text += a.format(w) + "\n";
          words.push_back(a.format(w));
        }
        if (!o.text.empty()) o.text.pop_back();
        o.result = {{"count", words.size()}, {"words", words}};
        return o;
      };
    });

    auto* factor =
        lyndon->add_subcommand("factor", "Factorization into nonincreasing regular words");
    factor->add_option("word", word, "word")->required();
    factor->add_option("--alphabet", alphabet, "ordered letters");
    factor->callback([&] {
      inv.command = "lyndon factor";
      inv.inputs = {{"word", word}};
      inv.action = [&] {
        const Alphabet a = word_alphabet(alphabet, {word});
        Outcome o;
        json pieces = json::array();
        for (const auto& f : cfl_factorize(a.parse(word))) {
          o.text += (o.text.empty() ? "" : " ") + a.format(f);
          pieces.push_back(a.format(f));
        }
        o.result = {{"factors", pieces}};
        return o;
      };
    });

    auto* bracket = lyndon->add_subcommand("bracket", "Standard bracketing of a regular word");
    bracket->add_option("word", word, "word")->required();
    bracket->add_option("--alphabet", alphabet, "ordered letters");
    bracket->callback([&] {
      inv.command = "lyndon bracket";
      inv.inputs = {{"word", word}};
      inv.action = [&] {
        const Alphabet a = word_alphabet(alphabet, {word});
        const Word w = a.parse(word);
        if (w.empty() || !is_assoc_regular(w)) {
          return Outcome{kNegative, "not regular", {{"regular", false}}, nullptr};
        }
        const std::string b = format(a, shirshov_bracketing(w));
        return Outcome{kSuccess, b, {{"regular", true}, {"bracketing", b}}, nullptr};
      };
    });
  }

  void add_fgf(CLI::App& app) {
    auto* fgf =
        app.add_subcommand("fgf", "Find a factor f g f (f semiregular, g regular or empty)");
    fgf->add_option("word", word, "word")->required();
    fgf->add_option("--alphabet", alphabet, "ordered letters");
    fgf->callback([&] {
      inv.command = "fgf";
      inv.inputs = {{"word", word}};
      inv.action = [&] {
        const Alphabet a = word_alphabet(alphabet, {word});
        const auto occ = find_fgf(a.parse(word));
        if (!occ) return Outcome{kNegative, "none", {{"found", false}}, nullptr};
        const std::string f = a.format(occ->f), g = a.format(occ->g);
        return Outcome{kSuccess,
                       "f = " + f + ", g = " + (g.empty() ? "1" : g) + ", position " + std::to_string(occ->position),
                       {{"found", true}},
                       {{"f", f}, {"g", g}, {"position", occ->position}}};
      };
    });
  }

  void add_poly(CLI::App& app) {
    auto* poly = app.add_subcommand("poly", "Polynomials modulo relations");
    poly->require_subcommand(1);

    auto* reduce_cmd = poly->add_subcommand("reduce", "Normal form modulo the relations");
    reduce_cmd->add_option("poly", text, "polynomial")->required();
    reduce_cmd->add_option("--relations", relations, "relation file")->required();
    reduce_cmd->add_option("--alphabet", alphabet, "ordered letters");
    reduce_cmd->callback([&] {
      inv.command = "poly reduce";
      inv.inputs = {{"poly", text}, {"relations", relations}};
      inv.action = [&] {
        const PolyInput in = load_relations(relations, alphabet, text);
        const NcPoly p = parse_poly(in.alphabet, text);
        const ReductionTrace t = reduce(p, in.relations);
        return Outcome{kSuccess, format_poly(t.result) + "\n" + format_trace(t, in.alphabet),
                       {{"normal_form", format_poly(t.result)}},
                       {{"steps", steps_json(t.steps, in.alphabet)}}};
      };
    });

    auto* complete_cmd = poly->add_subcommand("complete", "Groebner-Shirshov completion");
    complete_cmd->add_option("--relations", relations, "relation file")->required();
    complete_cmd->add_option("--alphabet", alphabet, "ordered letters");
    complete_cmd->add_option("--max-deg", max_deg, "degree bound");
    complete_cmd->callback([&] {
      inv.command = "poly complete";
      inv.inputs = {{"relations", relations}, {"max_deg", max_deg}};
      inv.action = [&] {
        const PolyInput in = load_relations(relations, alphabet, "");
        const Completion c = complete(in.relations, max_deg);
        const bool done = c.status == CompletionStatus::Complete;
        return Outcome{done ? kSuccess : kBound,
                       std::string(done ? "complete" : "bound exceeded") + "\n" +
                           basis_text(c.basis),
                       {{"status", done ? "complete" : "bound_exceeded"},
                        {"basis", basis_json(c.basis)}},
                       nullptr};
      };
    });

    auto* member = poly->add_subcommand("member", "Ideal membership up to a degree bound");
    member->add_option("poly", text, "polynomial")->required();
    member->add_option("--relations", relations, "relation file")->required();
    member->add_option("--alphabet", alphabet, "ordered letters");
    member->add_option("--max-deg", max_deg, "degree bound");
    member->callback([&] {
      inv.command = "poly member";
      inv.inputs = {{"poly", text}, {"relations", relations}, {"max_deg", max_deg}};
      inv.action = [&] {
        const PolyInput in = load_relations(relations, alphabet, text);
        const Membership m = is_member(parse_poly(in.alphabet, text), in.relations, max_deg);
        if (const auto* yes = std::get_if<InIdeal>(&m)) {
          return Outcome{kSuccess,
                         "in ideal\n" + basis_text(yes->basis) + "trace:\n" +
                             format_trace(yes->trace, in.alphabet),
                         {{"verdict", "in_ideal"}},
                         {{"basis", basis_json(yes->basis)},
                          {"steps", steps_json(yes->trace.steps, in.alphabet)}}};
        }
        if (const auto* no = std::get_if<NotInIdealUpTo>(&m)) {
          return Outcome{kNegative,
                         "not in ideal (degree " + std::to_string(no->degree) +
                             "), normal form " + format_poly(no->normal_form),
                         {{"verdict", "not_in_ideal"},
                          {"degree", no->degree},
                          {"normal_form", format_poly(no->normal_form)}},
                         nullptr};
        }
        const auto& unk = std::get<MembershipUnknown>(m);
        return Outcome{kBound,
                       "unknown (completion bound " + std::to_string(unk.degree) +
                           " reached), normal form " + format_poly(unk.normal_form),
                       {{"verdict", "unknown"},
                        {"degree", unk.degree},
                        {"normal_form", format_poly(unk.normal_form)}},
                       nullptr};
      };
    });
  }

  void add_diamond(CLI::App& app) {
    auto* diamond = app.add_subcommand("diamond", "Diamond lemma conditions on a finite graph");
    diamond->add_option("file", path, "edge list `a -> b`")->required();
    diamond->callback([&] {
      inv.command = "diamond";
      inv.inputs = {{"file", path}};
      inv.action = [&] {
        std::istringstream in(read_file(path));
        const DiamondReport r = diamond_report(parse_scheme(in));
        const std::vector<std::pair<const char*, bool>> rows{
            {"unique_normal_forms", r.unique_normal_forms},
            {"church_rosser_transitive", r.church_rosser_transitive},
            {"locally_confluent", r.locally_confluent},
            {"one_minimum_per_component", r.one_minimum_per_component},
            {"connectivity_is_joinability", r.connectivity_is_joinability}};
        Outcome o;
        for (const auto& [name, value] : rows) {
          o.text += std::string(name) + ": " + (value ? "true" : "false") + "\n";
          o.result[name] = value;
        }
        o.text.pop_back();
        o.result["all_equal"] = r.all_equal();
        o.status = r.all_true() ? kSuccess : kNegative;
        return o;
      };
    });
  }

  void add_auto(CLI::App& app) {
    auto* autom = app.add_subcommand("auto", "Monomial algebras as automata");
    autom->require_subcommand(1);

    auto common = [&](CLI::App* sub) {
      sub->add_option("--forbid", forbid, "forbidden factor (repeatable)")->required();
      sub->add_option("--alphabet", alphabet,
                      "ordered letters (default: x, y and the letters used)");
    };
    auto inputs = [this] {
      return json{{"forbid", forbid}, {"alphabet", alphabet}};
    };

    auto* build = autom->add_subcommand("build", "Minimal automaton of the normal words");
    common(build);
    build->add_flag("--dot", dot, "print Graphviz");
    build->callback([&, inputs] {
      inv.command = "auto build";
      inv.inputs = inputs();
      inv.action = [&] {
        Alphabet a("x");
        const Automaton m = forbidden_automaton(alphabet, forbid, a);
        Outcome o;
        json edges = json::array(), accepting = json::array();
        std::string text = std::to_string(m.state_count()) + " states, initial q0\n";
        for (State s = 0; s < m.state_count(); ++s) {
          if (m.is_accepting(s)) accepting.push_back(s);
          for (std::size_t l = 0; l < m.alphabet_size(); ++l) {
            for (State t : m.successors(s, static_cast<Letter>(l))) {
              edges.push_back({s, std::string(1, a.symbol(static_cast<Letter>(l))), t});
              text += "q" + std::to_string(s) + " -" + a.symbol(static_cast<Letter>(l)) + "-> q" +
                      std::to_string(t) + "\n";
            }
          }
        }
        text.pop_back();
        o.text = dot ? to_dot(m, a) : text;
        if (dot && !o.text.empty()) o.text.pop_back();
        o.result = {{"alphabet", a.symbols()},
                    {"states", m.state_count()},
                    {"initial", 0},
                    {"accepting", accepting},
                    {"transitions", edges}};
        return o;
      };
    });

    auto* growth_cmd = autom->add_subcommand("growth", "Growth function V(0..n)");
    common(growth_cmd);
    growth_cmd->add_option("--n", growth_n, "largest length");
    growth_cmd->callback([&, inputs] {
      inv.command = "auto growth";
      inv.inputs = inputs();
      inv.inputs["n"] = growth_n;
      inv.action = [&] {
        Alphabet a("x");
        const Automaton m = forbidden_automaton(alphabet, forbid, a);
        const auto cumulative = growth(m, growth_n);
        const auto per = growth_per_length(m, growth_n);
        Outcome o;
        o.text = "n words V(n)";
        json cj = json::array(), pj = json::array();
        for (std::size_t k = 0; k <= growth_n; ++k) {
          o.text += "\n" + std::to_string(k) + " " + per[k].str() + " " + cumulative[k].str();
          cj.push_back(count_json(cumulative[k]));
          pj.push_back(count_json(per[k]));
        }
        o.result = {{"cumulative", cj}, {"per_length", pj}};
        return o;
      };
    });

    auto* classify = autom->add_subcommand("classify", "Exponential, polynomial(d) or finite");
    common(classify);
    classify->add_option("--gk-n", gk_n, "also print ln V(n) / ln n");
    classify->callback([&, inputs] {
      inv.command = "auto classify";
      inv.inputs = inputs();
      inv.action = [&] {
        Alphabet a("x");
        const Automaton m = forbidden_automaton(alphabet, forbid, a);
        const GrowthClass g = classify_growth(m);
        Outcome o;
        o.text = to_string(g);
        o.result = {{"class", g.kind == GrowthClass::Kind::Exponential   ? "exponential"
                              : g.kind == GrowthClass::Kind::Polynomial ? "polynomial"
                                                                        : "finite"}};
        if (g.kind == GrowthClass::Kind::Polynomial) o.result["gk"] = g.gk;
        if (gk_n != 0) {
          const double est = gk_estimate(m, gk_n);
          std::ostringstream s;
          s << est;
          o.text += "\ngk_estimate(" + std::to_string(gk_n) + ") = " + s.str();
          o.result["gk_estimate"] = est;
        }
        return o;
      };
    });
  }

  void add_height(CLI::App& app) {
    auto* height = app.add_subcommand("height", "n-divisibility and height");
    height->require_subcommand(1);

    auto* check = height->add_subcommand("check", "Is the word n-divisible? Otherwise its height");
    check->add_option("word", word, "word")->required();
    check->add_option("--n", parts, "number of parts")->required();
    check->add_option("--alphabet", alphabet, "ordered letters");
    check->callback([&] {
      inv.command = "height check";
      inv.inputs = {{"word", word}, {"n", parts}};
      inv.action = [&] {
        const Alphabet a = word_alphabet(alphabet, {word});
        const Word w = a.parse(word);
        if (const auto wit = is_n_divisible(w, parts)) {
          json pieces = json::array();
          std::string text = "divisible: " + a.format(wit->prefix) + " |";
          for (const auto& p : wit->parts) {
            text += " " + a.format(p);
            pieces.push_back(a.format(p));
          }
          return Outcome{kSuccess, text, {{"divisible", true}},
                         {{"prefix", a.format(wit->prefix)}, {"parts", pieces}}};
        }
        std::vector<Word> bases;
        for (std::size_t len = 1; len < parts; ++len) {
          for (const auto& b : all_words(a.size(), len)) bases.push_back(b);
        }
        Outcome o{kNegative, "not " + std::to_string(parts) + "-divisible", {{"divisible", false}},
                  nullptr};
        if (!bases.empty()) {
          const auto d = height_over(w, bases);
          json blocks = json::array();
          std::string text;
          for (const auto& b : d->blocks) {
            text += " (" + a.format(b.base) + ")^" + std::to_string(b.exponent);
            blocks.push_back({{"base", a.format(b.base)}, {"exponent", b.exponent}});
          }
          o.text += "\nheight " + std::to_string(d->height()) + ":" + text;
          o.result["height"] = d->height();
          o.certificate = {{"blocks", blocks}};
        }
        return o;
      };
    });

    auto* survey = height->add_subcommand("survey", "Maximum height of non-n-divisible words");
    survey->add_option("--alphabet", alphabet, "ordered letters")->required();
    survey->add_option("--n", parts, "number of parts")->required();
    survey->add_option("--max-len", max_len, "largest length")->required();
    survey->add_option("--budget", budget, "largest number of words to enumerate");
    survey->callback([&] {
      inv.command = "height survey";
      inv.inputs = {{"alphabet", alphabet}, {"n", parts}, {"max_len", max_len}};
      inv.action = [&] {
        const Alphabet a(alphabet);
        const HeightSurvey s = height_survey(a, parts, max_len, budget);
        Outcome o;
        o.text = "length words divisible max_height witness";
        json rows = json::array();
        for (const auto& r : s.rows) {
          o.text += "\n" + std::to_string(r.length) + " " + std::to_string(r.words) + " " +
                    std::to_string(r.divisible) + " " + std::to_string(r.max_height) + " " +
                    (r.witness.empty() ? "1" : a.format(r.witness));
          rows.push_back({{"length", r.length},
                          {"words", r.words},
                          {"divisible", r.divisible},
                          {"max_height", r.max_height},
                          {"witness", a.format(r.witness)}});
        }
        o.text += "\nmax height " + std::to_string(s.max_height) + " at " +
                  (s.witness.empty() ? "1" : a.format(s.witness));
        o.result = {{"rows", rows}, {"max_height", s.max_height}, {"witness", a.format(s.witness)}};
        return o;
      };
    });
  }

  void add_morph(CLI::App& app) {
    auto* morph = app.add_subcommand("morph", "Morphisms and power-free words");
    morph->require_subcommand(1);

    auto* apply = morph->add_subcommand("apply", "Image of a word");
    apply->add_option("word", word, "word")->required();
    apply->add_option("-m,--morphism", morphism, "thue-binary, thue-ternary or a file")->required();
    apply->add_option("--times", times, "number of applications");
    apply->callback([&] {
      inv.command = "morph apply";
      inv.inputs = {{"word", word}, {"morphism", morphism}, {"times", times}};
      inv.action = [&] {
        const Morphism phi = load_morphism(morphism);
        if (times > 1 && !phi.is_endomorphism()) {
          throw std::invalid_argument("--times > 1 needs an endomorphism");
        }
        Word w = phi.source().parse(word);
        for (std::size_t i = 0; i < times; ++i) w = apply_morphism(phi, w);
        const std::string image = phi.target().format(w);
        return Outcome{kSuccess, image, {{"image", image}}, nullptr};
      };
    });

    auto* powerfree = morph->add_subcommand("powerfree", "Is the word free of k-th powers?");
    powerfree->add_option("word", word, "word")->required();
    powerfree->add_option("--k", k, "exponent (2 = squares, 3 = cubes)");
    powerfree->add_option("--alphabet", alphabet, "ordered letters");
    powerfree->callback([&] {
      inv.command = "morph powerfree";
      inv.inputs = {{"word", word}, {"k", k}};
      inv.action = [&] {
        const Alphabet a = word_alphabet(alphabet, {word});
        const Word w = a.parse(word);
        const auto occ = find_power(w, k);
        if (!occ) {
          return Outcome{kSuccess, std::to_string(k) + "-power-free", {{"power_free", true}},
                         nullptr};
        }
        const std::string base = a.format(w.subword(occ->start, occ->period));
        return Outcome{kNegative,
                       "(" + base + ")^" + std::to_string(k) + " at " + std::to_string(occ->start),
                       {{"power_free", false}},
                       {{"start", occ->start}, {"period", occ->period}, {"base", base}}};
      };
    });

    auto* croch = morph->add_subcommand("crochemore", "Finite square-freeness test");
    croch->add_option("-m,--morphism", morphism, "thue-binary, thue-ternary or a file")->required();
    croch->callback([&] {
      inv.command = "morph crochemore";
      inv.inputs = {{"morphism", morphism}};
      inv.action = [&] {
        const Morphism phi = load_morphism(morphism);
        const CrochemoreResult r = crochemore_test(phi);
        Outcome o;
        o.status = r.square_free ? kSuccess : kNegative;
        o.text = "k = " + std::to_string(r.k) + ", " +
                 (r.square_free ? "square-free" : "not square-free");
        o.result = {{"k", r.k}, {"square_free", r.square_free}};
        if (r.counterexample) {
          const std::string c = phi.source().format(*r.counterexample);
          o.text += ": image of " + c + " has a square";
          o.certificate = {{"counterexample", c}};
        }
        return o;
      };
    });

    auto* thue = morph->add_subcommand("thue-verify", "Hypotheses of Thue's third theorem");
    thue->add_option("-m,--morphism", morphism, "thue-binary, thue-ternary or a file")->required();
    thue->callback([&] {
      inv.command = "morph thue-verify";
      inv.inputs = {{"morphism", morphism}};
      inv.action = [&] {
        const Thue3Report r = check_thue3_conditions(load_morphism(morphism));
        const bool both = r.images_of_short_words_square_free && r.images_not_nested;
        return Outcome{
            both ? kSuccess : kNegative,
            std::string("images of square-free words of length <= 3 square-free: ") +
                (r.images_of_short_words_square_free ? "true" : "false") +
                "\nno image is a factor of another: " + (r.images_not_nested ? "true" : "false"),
            {{"images_of_short_words_square_free", r.images_of_short_words_square_free},
             {"images_not_nested", r.images_not_nested}},
            nullptr};
      };
    });
  }

  void add_group(CLI::App& app) {
    auto* group = app.add_subcommand("group", "Group words and Dehn's algorithm");
    group->require_subcommand(1);

    auto* cancel = group->add_subcommand("cancel", "Free (or cyclic) reduction");
    cancel->add_option("word", word, "word such as `a b- a-`")->required();
    cancel->add_option("--generators", generators, "ordered generators");
    cancel->add_flag("--cyclic", cyclic, "also cancel across the ends");
    cancel->callback([&] {
      inv.command = "group cancel";
      inv.inputs = {{"word", word}, {"cyclic", cyclic}};
      inv.action = [&] {
        const Alphabet g = word_alphabet(generators, {word});
        const GroupWord w = parse_group_word(g, word);
        const std::string r = format_group_word(g, cyclic ? cyclic_reduce(w) : free_reduce(w));
        return Outcome{kSuccess, r, {{"reduced", r}}, nullptr};
      };
    });

    auto* dehn = group->add_subcommand("dehn", "Word problem in a C'(1/6) group");
    dehn->add_option("word", word, "word such as `a b- a-`")->required();
    dehn->add_option("-p,--presentation", presentation, "genus2 or a presentation file");
    dehn->callback([&] {
      inv.command = "group dehn";
      inv.inputs = {{"word", word}, {"presentation", presentation}};
      inv.action = [&] {
        Presentation p = Presentation::genus2_surface();
        if (presentation != "genus2") {
          std::istringstream in(read_file(presentation));
          p = parse_presentation(in);
        }
        const Alphabet& g = p.generators();
        const DehnVerdict v = dehn_decide(parse_group_word(g, word), p);
        if (const auto* t = std::get_if<DehnTrivial>(&v)) {
          return Outcome{kSuccess, "trivial\n" + dehn_steps_text(t->steps, g),
                         {{"verdict", "trivial"}}, {{"steps", dehn_steps_json(t->steps, g)}}};
        }
        if (const auto* nt = std::get_if<DehnNontrivial>(&v)) {
          const std::string r = format_group_word(g, nt->residue);
          return Outcome{kNegative,
                         "nontrivial, residue " + r + "\n" + dehn_steps_text(nt->steps, g),
                         {{"verdict", "nontrivial"}, {"residue", r}},
                         {{"steps", dehn_steps_json(nt->steps, g)}}};
        }
        const auto& u = std::get<DehnUnsupported>(v);
        return Outcome{kBound,
                       "unsupported: C'(1/6) fails (max piece " +
                           std::to_string(u.condition.max_piece) + ")",
                       {{"verdict", "unsupported"}, {"max_piece", u.condition.max_piece}},
                       nullptr};
      };
    });
  }

  void add_vdw(CLI::App& app) {
    auto* vdw = app.add_subcommand("vdw", "van der Waerden number W(n,k)");
    vdw->add_option("n", ap_len, "progression length")->required();
    vdw->add_option("k", colors, "number of colors")->required();
    vdw->add_option("--max", max_n, "largest N to search");
    vdw->callback([&] {
      inv.command = "vdw";
      inv.inputs = {{"n", ap_len}, {"k", colors}, {"max", max_n}};
      inv.action = [&] {
        const VdwResult r = vdw_number(ap_len, colors, max_n);
        const std::string name = "W(" + std::to_string(ap_len) + "," + std::to_string(colors) + ")";
        if (const auto* f = std::get_if<VdwFound>(&r)) {
          return Outcome{kSuccess,
                         name + " = " + std::to_string(f->number) + "\nwitness " +
                             f->witness.digits(),
                         {{"found", true}, {"number", f->number}, {"nodes", f->nodes}},
                         {{"witness", f->witness.digits()}}};
        }
        const auto& nf = std::get<VdwNotFound>(r);
        return Outcome{kBound,
                       name + " > " + std::to_string(nf.bound) + "\nwitness " + nf.witness.digits(),
                       {{"found", false}, {"bound", nf.bound}, {"nodes", nf.nodes}},
                       {{"witness", nf.witness.digits()}}};
      };
    });
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of words in ring theory", "shirshov"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "structured output");
  Cli cli;
  cli.add_all(app);
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);
  Invocation& inv = cli.inv;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (!inv.action) {
    err << "error: incomplete command\n";
    return kUsage;
  }

  Outcome o;
  try {
    o = inv.action();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kBound;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (as_json) {
    json envelope = {{"command", inv.command}, {"inputs", inv.inputs}, {"result", o.result}};
    if (!o.certificate.is_null()) envelope["certificate"] = o.certificate;
    out << envelope.dump(2) << "\n";
  } else {
    out << o.text;
    if (o.text.empty() || o.text.back() != '\n') out << "\n";
  }
  return o.status;
}

}  // namespace shirshov::cli
