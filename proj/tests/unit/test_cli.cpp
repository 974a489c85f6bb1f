#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "catch_amalgamated.hpp"
#include "json.hpp"
#include "semicomm/cli.hpp"
#include "semicomm/constructors.hpp"

using namespace semicomm;
using json = nlohmann::ordered_json;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  // Flatten a document the way a reader of the human output would see it:
  // dotted keys, scalars printed plainly, arrays as compact JSON.
  void flatten(json const& j, std::string const& prefix,
               std::map<std::string, std::string>& out) {
    if (j.is_object()) {
      for (auto const& [k, v] : j.items()) {
        flatten(v, prefix.empty() ? k : prefix + "." + k, out);
      }
    } else if (j.is_string()) {
      out[prefix] = j.get<std::string>();
    } else if (j.is_null()) {
      out[prefix] = "none";
    } else {
      out[prefix] = j.dump();
    }
  }

  std::map<std::string, std::string> parse_human(std::string const& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string        line;
    while (std::getline(in, line)) {
      auto const pos = line.find(": ");
      REQUIRE(pos != std::string::npos);
      out[line.substr(0, pos)] = line.substr(pos + 2);
    }
    return out;
  }

  std::string with_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    auto const r = run(args);
    REQUIRE(r.code == 0);
    return r.out;
  }
}  // namespace

TEST_CASE("golden values for S2", "[cli]") {
  auto const props = json::parse(with_json({"props", "builtin:paper_S2"}));
  CHECK(props.at("regular") == true);
  CHECK(props.at("orthodox") == false);
  CHECK(props.at("completely_simple") == true);
  CHECK(props.at("orthodoxy_witness").at("product") == "(1,g,2)");

  auto const deg = json::parse(with_json({"degrees", "builtin:paper_S2"}));
  CHECK(deg.at("nilpotent") == 2);
  CHECK(deg.at("solvable") == 2);
  CHECK(deg.at("supernilpotent") == 2);

  auto const con = json::parse(with_json({"congruences", "builtin:paper_S2"}));
  CHECK(con.at("count") == 5);
  CHECK(con.at("linked_triples").size() == 5);

  auto const dot = run({"congruences", "builtin:paper_S2", "--format", "dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph congruences {") == 0);

  auto const com = json::parse(with_json(
      {"commutator", "builtin:paper_S2", "--arity", "3"}));
  CHECK(com.at("is_zero") == true);

  auto const cen = json::parse(with_json(
      {"centralize", "builtin:paper_S2", "--alphas", "{0,1,2,3,4,5,6,7}",
       "--alphas", "{0,1,2,3,4,5,6,7}", "--delta", "{0,2|1,3|4,6|5,7}"}));
  CHECK(cen.at("holds") == true);
}

TEST_CASE("human and json outputs agree", "[cli]") {
  std::vector<std::vector<std::string>> commands{
      {"props", "builtin:paper_S2"},
      {"props", "builtin:adjoin_zero:C2"},
      {"congruences", "builtin:S3"},
      {"commutator", "builtin:S3"},
      {"centralize", "builtin:paper_S2", "--alphas", "{0,1,2,3,4,5,6,7}",
       "--alphas", "{0,1,2,3,4,5,6,7}", "--delta", "{0|1|2|3|4|5|6|7}"},
      {"degrees", "builtin:Q8"},
      {"decompose", "builtin:rect_band:2x2", "--kind", "orthodox"},
      {"decompose", "builtin:paper_S2", "--kind", "warne"},
      {"decompose", "builtin:C4", "--kind", "inverse"},
      {"enumerate", "--order", "2"},
      {"verify-theorems", "--source", "builtin:C2"},
  };
  for (auto const& cmd : commands) {
    CAPTURE(cmd);
    auto const human = run(cmd);
    REQUIRE(human.code == 0);
    std::map<std::string, std::string> flat;
    flatten(json::parse(with_json(cmd)), "", flat);
    CHECK(parse_human(human.out) == flat);
  }
}

TEST_CASE("exit codes", "[cli]") {
  CHECK(run({}).code == EXIT_USAGE);
  CHECK(run({"frobnicate"}).code == EXIT_USAGE);
  CHECK(run({"props", "builtin:nope"}).code == EXIT_USAGE);
  CHECK(run({"props", "/nonexistent/table.txt"}).code == EXIT_USAGE);
  CHECK(run({"decompose", "builtin:C2", "--kind", "sideways"}).code
        == EXIT_USAGE);
  CHECK(run({"commutator", "builtin:paper_S2", "--arity", "3", "--cube-cap",
             "5"})
            .code
        == EXIT_BUDGET);
  CHECK(run({"enumerate", "--order", "5"}).code == EXIT_BUDGET);
  CHECK(run({"degrees", "builtin:paper_S2", "--assert", "nilpotent=2"}).code
        == EXIT_OK);
  CHECK(run({"degrees", "builtin:paper_S2", "--assert", "nilpotent=3"}).code
        == EXIT_FALSE);
  CHECK(run({"degrees", "builtin:paper_S2", "--assert", "colour=red"}).code
        == EXIT_USAGE);
  CHECK(run({"props", "builtin:paper_S2", "--assert",
             "orthodoxy_witness.product=(1,g,2)"})
            .code
        == EXIT_OK);

  auto const err = run({"props", "builtin:nope", "--format", "json"});
  auto const doc = json::parse(err.out);
  CHECK(doc.at("error").at("kind") == "UnknownAlgebra");
}

TEST_CASE("structured output is deterministic", "[cli]") {
  for (auto const& cmd : std::vector<std::vector<std::string>>{
           {"degrees", "builtin:D4"},
           {"verify-theorems", "--source", "generated:1-3"}}) {
    auto a = cmd;
    a.insert(a.end(), {"--workers", "1"});
    auto b = cmd;
    b.insert(b.end(), {"--workers", "4"});
    CHECK(with_json(a) == with_json(b));
    CHECK(with_json(a) == with_json(a));
  }
}

TEST_CASE("file inputs and the installed binary", "[cli]") {
  namespace fs    = std::filesystem;
  auto const dir  = fs::temp_directory_path() / "semicomm_cli_test";
  fs::create_directories(dir);
  auto const table = dir / "s2.txt";
  {
    std::ofstream out(table);
    out << to_cayley_text(paper_s2());
  }
  auto const spec = dir / "s2.json";
  {
    std::ofstream out(spec);
    out << rees_spec_to_json(paper_s2_spec());
  }
  auto const from_file = json::parse(with_json({"degrees", table.string()}));
  auto const from_spec = json::parse(with_json({"degrees", "rees:" + spec.string()}));
  CHECK(from_file.at("nilpotent") == 2);
  CHECK(from_spec.at("supernilpotent") == 2);
  CHECK(json::parse(with_json({"congruences", "rees:" + spec.string()}))
            .at("linked_triples")
            .size()
        == 5);

  auto const manifest = dir / "m.json";
  CHECK(run({"enumerate", "--order", "3", "--filter", "band", "--manifest",
             manifest.string()})
            .code
        == 0);
  auto const report = json::parse(
      with_json({"verify-theorems", "--corpus", manifest.string()}));
  CHECK(report.at("counts").at("fail") == 0);

  std::string const cmd = std::string(SEMICOMM_CLI_PATH)
                          + " degrees builtin:paper_S2 --assert supernilpotent=2"
                          + " > /dev/null";
  CHECK(std::system(cmd.c_str()) == 0);
  std::string const bad = std::string(SEMICOMM_CLI_PATH)
                          + " degrees builtin:paper_S2 --assert supernilpotent=3"
                          + " > /dev/null";
  int const status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(status) == EXIT_FALSE);
}
