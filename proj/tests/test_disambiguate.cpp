#include <doctest.h>

#include <cmath>
#include <set>

#include "ambig/classify.hpp"
#include "ambig/disambiguate.hpp"
#include "ambig/error.hpp"
#include "ambig/graph.hpp"
#include "ambig/io.hpp"
#include "ambig/oracle.hpp"
#include "ambig/split_tree.hpp"
#include "support.hpp"

using namespace ambig;
using ambig::test::fixture;

namespace {

std::vector<std::string> level_labels(const Nba& a, const SplitTree& t, std::size_t i) {
  std::vector<std::string> out;
  for (const auto& node : t.levels.at(i)) out.push_back(format_state_set(a, node.label));
  return out;
}

std::set<std::string> successor_names(const Nba& a, const PairState& ps) {
  std::set<std::string> out;
  for (const auto& s : pair_successors(a, ps, 0)) out.insert(pair_state_name(a, s));
  return out;
}

}  // namespace

TEST_CASE("full split tree of fig3a on aa") {
  const Nba a = fixture("fig3a");
  const SplitTree t = build_split_tree(a, parse_word(a, "aa"), false);
  CHECK(t.depth() == 2);
  CHECK(level_labels(a, t, 0) == std::vector<std::string>{"{q0}"});
  CHECK(level_labels(a, t, 1) == std::vector<std::string>{"{q1}", "{q0}"});
  CHECK(level_labels(a, t, 2) ==
        std::vector<std::string>{"{q1}", "{q2}", "{q1}", "{q0}"});
  CHECK(t.levels[2][1].address == "01");
  CHECK(render_split_tree(a, t) == "{q0}\n{q1} {q0}\n{q1} {q2} {q1} {q0}\n");
}

TEST_CASE("reduced split tree of fig3a on aa") {
  const Nba a = fixture("fig3a");
  const SplitTree t = build_split_tree(a, parse_word(a, "aa"), true);
  CHECK(t.reduced);
  CHECK(level_labels(a, t, 1) == std::vector<std::string>{"{q1}", "{q0}"});
  CHECK(level_labels(a, t, 2) == std::vector<std::string>{"{q1}", "{q2}", "{q0}"});
  CHECK(t.levels[2][0].address == "00");
  CHECK(t.levels[2][1].address == "01");
  CHECK(t.levels[2][2].address == "11");
}

TEST_CASE("split tree edge cases") {
  const Nba a = fixture("fig1a");
  const SplitTree root = build_split_tree(a, {}, true);
  CHECK(root.depth() == 0);
  CHECK(root.levels[0].size() == 1);
  CHECK(root.levels[0][0].label == a.initial());
  try {
    build_split_tree(a, Word(13, 0), false);
    FAIL("depth cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DepthExceeded);
  }
  CHECK(build_split_tree(a, Word(13, 0), true, 13).depth() == 13);
  // full tree keeps empty labels, so level i has 2^i nodes
  CHECK(build_split_tree(a, Word(5, 1), false).levels[5].size() == 32);
}

TEST_CASE("reduced split tree invariants") {
  for (const auto& entry : ambig::test::trim_corpus()) {
    const Nba& a = entry.automaton;
    for (const auto& w : ambig::test::words_of_length(a.num_symbols(), 4)) {
      const auto full = build_split_tree(a, w, false);
      const auto red = build_split_tree(a, w, true);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        StateSet seen;
        StateSet union_full;
        for (const auto& node : full.levels[i]) union_full = set_union(union_full, node.label);
        for (const auto& node : red.levels[i]) {
          CHECK(!node.label.empty());
          CHECK(set_intersection(seen, node.label).empty());
          seen = set_union(seen, node.label);
          if (i > 0) {
            // parent address present one level up
            const auto parent = node.address.substr(0, node.address.size() - 1);
            bool found = false;
            for (const auto& up : red.levels[i - 1]) found = found || up.address == parent;
            CHECK(found);
          }
        }
        // the reduced level still covers every state reached by some run
        CHECK(seen == union_full);
      }
    }
  }
}

TEST_CASE("pair-state transitions of disambiguated fig3a") {
  const Nba a = fixture("fig3a");
  const StateId q0 = 0, q1 = 1, q2 = 2;
  CHECK(successor_names(a, {{}, {q0}}) ==
        std::set<std::string>{"P{}_S{q1}", "P{q1}_S{q0}"});
  CHECK(successor_names(a, {{q1}, {q0}}) == std::set<std::string>{"P{q1,q2}_S{q0}"});
  CHECK(successor_names(a, {{}, {q1}}) ==
        std::set<std::string>{"P{}_S{q1}", "P{q1}_S{q2}"});
  // the accepting move comes first
  const auto first = pair_successors(a, {{}, {q0}}, 0);
  CHECK(first[0] == PairState{{}, {q1}});
  (void)q2;
}

TEST_CASE("disambiguate fig3a") {
  const Nba a = fixture("fig3a");
  const Nba d = disambiguate(a);
  CHECK(d.num_states() == 5);
  CHECK(d.state_name(0) == "P{}_S{q0}");
  CHECK(d.initial() == StateSet{0});
  CHECK(d.accepting() == StateSet{*d.find_state("P{}_S{q1}")});
  CHECK(reachable_pairs(a).size() == 5);
}

TEST_CASE("one-state deterministic automaton stays deterministic") {
  const Nba a({"q"}, {"a"}, {{0, 0, 0}}, {0}, {0});
  const Nba d = disambiguate(a);
  CHECK(d.num_states() == 1);
  CHECK(d.size() == 1);
  CHECK(count_runs(d, LassoWord{{}, {0}}) == RunCardinality::finite(1));
}

TEST_CASE("empty initial set gives an empty automaton") {
  const Nba a = fixture("fig1a").with_initial({});
  CHECK(disambiguate(a).num_states() == 0);
  CHECK(check_run_tree_correspondence(a, {0, 1}));
}

TEST_CASE("disambiguated fig1a") {
  const Nba a = fixture("fig1a");
  const Nba d = disambiguate(a);
  CHECK(d.num_states() <= 81);
  CHECK(!lasso_equiv_sample(a, d, 4, 4));
  for (const auto& w : lasso_sweep(3, 4, 4)) {
    const auto c = count_runs(d, w);
    CHECK(c.is_finite());
    CHECK(c.count <= 4);
  }
  CHECK(count_runs(a, parse_lasso(a, ":acabb")) == RunCardinality::continuum());
  CHECK(count_runs(d, parse_lasso(d, ":acabb")).is_finite());
}

TEST_CASE("pair state invariants") {
  for (const auto& entry : ambig::test::trim_corpus()) {
    const Nba& a = entry.automaton;
    const auto pairs = reachable_pairs(a);
    CHECK(pairs.size() <= std::pow(3.0, a.num_states()));
    for (const auto& ps : pairs) {
      CHECK(!ps.s.empty());
      CHECK(set_intersection(ps.p, ps.s).empty());
      for (SymbolId sym = 0; sym < a.num_symbols(); ++sym) {
        const auto next = pair_successors(a, ps, sym);
        CHECK(next.size() <= 2);
        for (const auto& n : next) {
          CHECK(!n.s.empty());
          CHECK(set_intersection(n.p, n.s).empty());
        }
      }
    }
  }
}

TEST_CASE("disambiguation keeps the language and bounds runs") {
  for (const auto& entry : ambig::test::trim_corpus()) {
    const Nba& a = entry.automaton;
    const Nba d = disambiguate(a);
    CHECK(!lasso_equiv_sample(a, d, 3, 3));
    for (const auto& w : lasso_sweep(a.num_symbols(), 3, 3)) {
      const auto c = count_runs(d, w);
      CHECK(c.is_finite());
      CHECK(c.count <= a.num_states());
    }
    const Nba t = trim_nba(d);
    CHECK(!find_ida(t, false));
    CHECK(classify(t).tag == AmbiguityTag::Finite);
  }
}

TEST_CASE("run tree correspondence") {
  const Nba a = fixture("fig3a");
  CHECK(check_run_tree_correspondence(a, {}));
  CHECK(check_run_tree_correspondence(a, {0}));
  CHECK(check_run_tree_correspondence(a, {0, 0}));
  for (const auto& entry : ambig::test::trim_corpus()) {
    for (std::size_t len = 0; len <= 3; ++len) {
      for (const auto& w : ambig::test::words_of_length(2, len)) {
        CHECK(check_run_tree_correspondence(entry.automaton, w));
      }
    }
  }
  try {
    check_run_tree_correspondence(a, Word(13, 0));
    FAIL("depth cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DepthExceeded);
  }
}
