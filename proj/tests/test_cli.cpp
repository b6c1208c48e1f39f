#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "ambig/io.hpp"
#include "ambig/oracle.hpp"
#include "cli.hpp"
#include "support.hpp"

using ambig::test::fixture;
using ambig::test::fixture_path;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = ambig::cli::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ambig_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("classify") {
  auto r = run({"classify", fixture_path("fig1a"), "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "uncountable");
  CHECK(j["dpa"].is_null());
  CHECK(j["witness"]["kind"] == "EDA_F");
  CHECK(j["witness"]["v"] == "acabb");

  r = run({"classify", fixture_path("fig1c")});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: NOT_TRIM: ", 0) == 0);

  r = run({"classify", fixture_path("fig1c"), "--trim-first"});
  CHECK(r.status == 0);
  CHECK(r.out == "class: finite\n");

  r = run({"classify", fixture_path("dpa2")});
  CHECK(r.out == "class: limit-countable-polynomial\ndpa: 2\nwitness: IDA (q0, q1, a)\n");
}

TEST_CASE("degree") {
  auto r = run({"degree", fixture_path("fig1d"), "--exact", "--max", "8", "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["exact"] == 2);
  const auto a = fixture("fig1d");
  const auto w = ambig::parse_lasso(a, j["witness"].get<std::string>());
  CHECK(ambig::count_runs(a, w) == ambig::RunCardinality::finite(2));

  r = run({"degree", fixture_path("fig1d"), "--exceeds", "2"});
  CHECK(r.out == "exceeds: false\n");
  r = run({"degree", fixture_path("fig1d"), "--exact", "--max", "1"});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: EXCEEDS_MAX: ", 0) == 0);
  r = run({"degree", fixture_path("fig1a"), "--exceeds", "1"});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: PRECONDITION_VIOLATED: ", 0) == 0);
}

TEST_CASE("conflicting or missing flags are usage errors") {
  CHECK(run({"degree", fixture_path("fig1d"), "--exceeds", "1", "--exact"}).status == 2);
  CHECK(run({"degree", fixture_path("fig1d")}).status == 2);
  CHECK(run({"degree", fixture_path("fig1d"), "--max", "3"}).status == 2);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  // flags are checked before the (missing) file is read
  const auto r = run({"degree", "/nonexistent.nba", "--exceeds", "1", "--exact"});
  CHECK(r.status == 2);
  CHECK(r.err.find("IO_ERROR") == std::string::npos);
}

TEST_CASE("io and parse errors") {
  auto r = run({"classify", "/nonexistent.nba"});
  CHECK(r.status == 2);
  CHECK(r.err.rfind("error: IO_ERROR: ", 0) == 0);
  const auto bad = temp_path("bad.nba");
  std::ofstream(bad) << "nba\nalphabet: a\nstates: q\ninitial: q\naccepting: q\ntrans:\nq a r\n";
  r = run({"classify", bad});
  CHECK(r.status == 2);
  CHECK(r.err == "error: PARSE_ERROR: line 7: undeclared state 'r'\n");
  r = run({"count", fixture_path("fig1a"), "--lasso", "ab:"});
  CHECK(r.status == 2);
}

TEST_CASE("count and member") {
  auto r = run({"count", fixture_path("fig1a"), "--lasso", "a:b", "--json"});
  CHECK(r.out == "{\"cardinality\":\"finite\",\"count\":2}\n");
  r = run({"count", fixture_path("fig1a"), "--lasso", ":acabb"});
  CHECK(r.out == "continuum\n");
  r = run({"member", fixture_path("fig1a"), "--lasso", ":ab"});
  CHECK(r.out == "true\n");
}

TEST_CASE("equiv") {
  const auto c = temp_path("fig1c_trim.nba");
  CHECK(run({"trim", fixture_path("fig1c"), "-o", c}).status == 0);
  auto r = run({"equiv", fixture_path("fig1a"), c, "--max-u", "2", "--max-v", "2", "--json"});
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["difference"] == ":ab");
  CHECK(j["accepted_by"] == "first");
  r = run({"equiv", fixture_path("fig1a"), fixture_path("fig1a"), "--max-u", "2", "--max-v", "2"});
  CHECK(r.out.rfind("no difference", 0) == 0);
}

TEST_CASE("disambiguate and splittree") {
  const auto out = temp_path("fig3a_d.nba");
  auto r = run({"disambiguate", fixture_path("fig3a"), "-o", out, "--stats"});
  CHECK(r.status == 0);
  CHECK(r.out == "# reachable states: 5\n# state cap (3^n): 27\n# accepting states: 1\n");
  const auto d = ambig::parse_automaton(slurp(out));
  CHECK(d.num_states() == 5);
  r = run({"disambiguate", fixture_path("fig3a"), "--trim"});
  CHECK(ambig::parse_automaton(r.out).num_states() == 2);

  r = run({"splittree", fixture_path("fig3a"), "--word", "aa", "--reduced"});
  CHECK(r.out == "{q0}\n{q1} {q0}\n{q1} {q2} {q0}\n");
  r = run({"splittree", fixture_path("fig3a"), "--word", "aaa", "--depth", "2"});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: DEPTH_EXCEEDED: ", 0) == 0);
}

TEST_CASE("gen, trim and hash-omega") {
  auto r1 = run({"gen", "--seed", "9", "--states", "4", "--letters", "2", "--density", "0.4",
                 "--accept-frac", "0.5"});
  auto r2 = run({"gen", "--seed", "9", "--states", "4", "--letters", "2", "--density", "0.4",
                 "--accept-frac", "0.5"});
  CHECK(r1.status == 0);
  CHECK(r1.out == r2.out);
  CHECK(run({"gen", "--seed", "1", "--density", "2"}).status == 2);

  auto r = run({"hash-omega", fixture_path("fig1d")});
  CHECK(r.status == 0);
  const auto h = ambig::parse_automaton(r.out);
  CHECK(h.alphabet().back() == "$");
  CHECK(h.states().back() == "q$");
  const auto clash = temp_path("clash.nba");
  std::ofstream(clash) << "nba\nalphabet: $\nstates: q\ninitial: q\naccepting: q\ntrans:\n";
  r = run({"hash-omega", clash});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: HASH_SYMBOL_CLASH: ", 0) == 0);

  r = run({"trim", fixture_path("fig3a")});
  CHECK(ambig::parse_automaton(r.out).num_states() == 2);
  const auto dead = temp_path("dead.nba");
  std::ofstream(dead) << "nba\nalphabet: a\nstates: q\ninitial: q\naccepting:\ntrans:\nq a q\n";
  r = run({"trim", dead});
  CHECK(r.status == 1);
  CHECK(r.err.rfind("error: EMPTY_LANGUAGE: ", 0) == 0);
}

TEST_CASE("help and version") {
  auto r = run({"--version"});
  CHECK(r.status == 0);
  CHECK(r.out.find(ambig::cli::kVersion) != std::string::npos);
  r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("`trans:` followed by one `src sym dst` triple") != std::string::npos);
  CHECK(r.out.find("hash-omega") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", fixture_path("fig1b"), "--json"},
           {"degree", fixture_path("fig1d"), "--exact", "--max", "4", "--json"},
           {"disambiguate", fixture_path("fig1a")}}) {
    CHECK(run(args).out == run(args).out);
  }
}
