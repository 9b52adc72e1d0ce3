#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "doctest.h"
#include "shirshov/cli.hpp"
#include "shirshov/group.hpp"
#include "shirshov/rewrite.hpp"
#include "shirshov/vdw.hpp"

using namespace shirshov;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
  std::filesystem::current_path(SHIRSHOV_DATA_DIR);
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenCase {
  const char* name;
  std::vector<std::string> args;
  int status;
};

// Output is compared with tests/golden/<name>.txt. Setting
// SHIRSHOV_UPDATE_GOLDEN rewrites the files instead.
const std::vector<GoldenCase> kGolden = {
    {"lyndon_check", {"lyndon", "check", "ba"}, 0},
    {"lyndon_check_negative", {"lyndon", "check", "aba"}, 1},
    {"lyndon_gen", {"lyndon", "gen", "--alphabet", "ab", "--max-len", "5"}, 0},
    {"lyndon_factor", {"lyndon", "factor", "bab"}, 0},
    {"lyndon_bracket", {"lyndon", "bracket", "bba"}, 0},
    {"lyndon_bracket_json", {"lyndon", "bracket", "bbaba", "--json"}, 0},
    {"fgf", {"fgf", "abbab"}, 0},
    {"fgf_none", {"fgf", "ab", "--json"}, 1},
    {"poly_reduce", {"poly", "reduce", "yyx - xyy", "--relations", "commutator.txt"}, 0},
    {"poly_complete", {"poly", "complete", "--relations", "commutator.txt"}, 0},
    {"poly_complete_bound", {"poly", "complete", "--relations", "braid.txt", "--max-deg", "6"}, 3},
    {"poly_member", {"poly", "member", "yyx - xyy", "--relations", "commutator.txt", "--json"}, 0},
    {"poly_member_negative", {"poly", "member", "x", "--relations", "commutator.txt"}, 1},
    {"poly_member_unknown",
     {"poly", "member", "x", "--relations", "braid.txt", "--max-deg", "6"}, 3},
    {"diamond", {"diamond", "diamond.txt"}, 0},
    {"diamond_peak", {"diamond", "peak.txt", "--json"}, 1},
    {"auto_build", {"auto", "build", "--forbid", "yy"}, 0},
    {"auto_build_dot", {"auto", "build", "--forbid", "yx", "--dot"}, 0},
    {"auto_growth", {"auto", "growth", "--forbid", "yy", "--n", "6"}, 0},
    {"auto_classify", {"auto", "classify", "--forbid", "yy"}, 0},
    {"auto_classify_json", {"auto", "classify", "--forbid", "yx", "--json"}, 0},
    {"height_check", {"height", "check", "aba", "--n", "2"}, 0},
    {"height_check_negative", {"height", "check", "aabb", "--n", "3", "--json"}, 1},
    {"height_survey", {"height", "survey", "--alphabet", "ab", "--n", "2", "--max-len", "6"}, 0},
    {"morph_apply", {"morph", "apply", "ab", "-m", "thue-binary", "--times", "2"}, 0},
    {"morph_powerfree", {"morph", "powerfree", "abcacb", "--k", "2"}, 0},
    {"morph_powerfree_negative", {"morph", "powerfree", "abab", "--json"}, 1},
    {"morph_crochemore", {"morph", "crochemore", "-m", "thue-ternary"}, 0},
    {"morph_crochemore_negative", {"morph", "crochemore", "-m", "square.morph", "--json"}, 1},
    {"morph_thue_verify", {"morph", "thue-verify", "-m", "thue-ternary"}, 0},
    {"morph_thue_verify_negative", {"morph", "thue-verify", "-m", "nested.morph"}, 1},
    {"group_cancel", {"group", "cancel", "b a b-", "--cyclic"}, 0},
    {"group_dehn", {"group", "dehn", "c a b a- b- c d c- d- c-"}, 0},
    {"group_dehn_json", {"group", "dehn", "a b a- b- c", "-p", "genus2.txt", "--json"}, 1},
    {"group_dehn_unsupported", {"group", "dehn", "a", "-p", "abab.txt"}, 3},
    {"vdw", {"vdw", "3", "2", "--max", "20"}, 0},
    {"vdw_json", {"vdw", "3", "2", "--max", "5", "--json"}, 3},
};

}  // namespace

TEST_CASE("golden outputs") {
  const bool update = std::getenv("SHIRSHOV_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : kGolden) {
    CAPTURE(c.name);
    const Run r = run_cli(c.args);
    CHECK(r.status == c.status);
    CHECK(r.err.empty());
    const std::filesystem::path file =
        std::filesystem::path(SHIRSHOV_GOLDEN_DIR) / (std::string(c.name) + ".txt");
    if (update) {
      std::ofstream(file) << r.out;
    } else {
      REQUIRE(std::filesystem::exists(file));
      CHECK(r.out == read(file));
    }
  }
}

TEST_CASE("usage errors exit 2 with a position") {
  Run r = run_cli({"lyndon", "check", "ab1"});
  CHECK(r.status == cli::kUsage);
  CHECK(r.err.find("column 3") != std::string::npos);

  r = run_cli({"poly", "reduce", "x", "--relations", "bad_relations.txt", "--alphabet", "xy"});
  CHECK(r.status == cli::kUsage);
  CHECK(r.err.find("line 2, column 6") != std::string::npos);

  r = run_cli({"group", "dehn", "a", "-p", "bad_presentation.txt"});
  CHECK(r.status == cli::kUsage);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = run_cli({"diamond", "cycle.txt"});
  CHECK(r.status == cli::kUsage);

  r = run_cli({"poly", "reduce", "x", "--relations", "missing.txt"});
  CHECK(r.status == cli::kUsage);

  CHECK(run_cli({}).status == cli::kUsage);
  CHECK(run_cli({"bogus"}).status == cli::kUsage);
  CHECK(run_cli({"vdw", "3"}).status == cli::kUsage);
  CHECK(run_cli({"lyndon"}).status == cli::kUsage);
  CHECK(run_cli({"vdw", "1", "2"}).status == cli::kUsage);
  CHECK(run_cli({"--help"}).status == cli::kSuccess);
}

TEST_CASE("resource bounds exit 3") {
  const Run r =
      run_cli({"height", "survey", "--alphabet", "ab", "--n", "3", "--max-len", "20", "--budget",
               "1000"});
  CHECK(r.status == cli::kBound);
}

TEST_CASE("json envelopes roundtrip and carry checkable certificates") {
  for (const auto& c : kGolden) {
    auto args = c.args;
    if (std::find(args.begin(), args.end(), "--json") == args.end()) args.push_back("--json");
    const Run r = run_cli(args);
    CAPTURE(c.name);
    const json j = json::parse(r.out);
    REQUIRE(j.is_object());
    CHECK(j.contains("command"));
    CHECK(j.contains("inputs"));
    CHECK(j.contains("result"));
    CHECK(j["result"].is_object());
    for (const auto& [key, value] : j.items()) {
      CHECK((key == "command" || key == "inputs" || key == "result" || key == "certificate"));
    }
    CHECK(json::parse(j.dump()) == j);
  }

  SUBCASE("membership trace replays to zero") {
    const json j = json::parse(
        run_cli({"poly", "member", "yyx - xyy", "--relations", "commutator.txt", "--json"}).out);
    const Alphabet xy("xy");
    std::vector<NcPoly> basis;
    for (const auto& g : j["certificate"]["basis"]) basis.push_back(parse_poly(xy, g.get<std::string>()));
    const RelationSet rels(basis);
    std::vector<ReductionStep> steps;
    for (const auto& s : j["certificate"]["steps"]) {
      steps.push_back({s["rule"].get<std::size_t>(), xy.parse(s["left"].get<std::string>()),
                       xy.parse(s["right"].get<std::string>()),
                       parse_rational(s["coefficient"].get<std::string>())});
    }
    CHECK(replay(parse_poly(xy, "yyx - xyy"), steps, rels).is_zero());
  }

  SUBCASE("van der Waerden witness avoids progressions") {
    const json j = json::parse(run_cli({"vdw", "3", "2", "--max", "20", "--json"}).out);
    CHECK(j["result"]["number"] == 9);
    const Coloring c = Coloring::from_digits(2, j["certificate"]["witness"].get<std::string>());
    CHECK(c.size() == 8);
    CHECK_FALSE(find_mono_ap(c, 3));
  }

  SUBCASE("dehn step log replays") {
    const std::string word = "c a b a- b- c d c- d- c-";
    const json j = json::parse(run_cli({"group", "dehn", word, "--json"}).out);
    CHECK(j["result"]["verdict"] == "trivial");
    const Presentation p = Presentation::genus2_surface();
    std::vector<DehnStep> steps;
    for (const auto& s : j["certificate"]["steps"]) {
      DehnStep step;
      const std::string kind = s["kind"];
      step.kind = kind == "replace"         ? DehnStep::Kind::Replace
                  : kind == "cyclic-reduce" ? DehnStep::Kind::CyclicReduce
                                            : DehnStep::Kind::FreeReduce;
      if (step.kind == DehnStep::Kind::Replace) {
        step.position = s["position"];
        step.relator = s["relator"];
        step.matched = s["matched"];
      }
      step.result = parse_group_word(p.generators(), s["result"].get<std::string>());
      steps.push_back(step);
    }
    CHECK(replay_dehn(parse_group_word(p.generators(), word), steps, p).empty());
  }
}
