#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ambig/nba.hpp"

namespace ambig::test {

/// Parses tests/fixtures/<name>.nba.
Nba fixture(const std::string& name);
std::string fixture_path(const std::string& name);

struct CorpusEntry {
  std::uint64_t seed;  // seed the automaton was generated from
  Nba automaton;
};

/// 200 trimmed random automata for seeds 0..199 with 1 + seed % 6 states and
/// two letters. A seed whose automaton has an empty language is retried with
/// derived seeds until the trimmed automaton is nonempty.
const std::vector<CorpusEntry>& trim_corpus();

/// The first 120 trimmed random automata (at most 5 states, two letters) that
/// classify as finitely ambiguous.
const std::vector<CorpusEntry>& finite_corpus();

/// 60 random automata (at most 5 states, two letters) read as NFAs.
const std::vector<CorpusEntry>& nfa_corpus();

/// Every word over `num_symbols` letters of length exactly `length`, in
/// lexicographic order.
std::vector<Word> words_of_length(std::size_t num_symbols, std::size_t length);

/// Largest oracle run count over the lasso sweep; returns SIZE_MAX if some
/// lasso has infinitely many runs.
std::uint64_t max_lasso_count(const Nba& a, std::size_t max_u, std::size_t max_v);

/// Pattern brute force over explicit paths: labels up to `max_len`.
bool brute_eda(const Nba& a, bool restrict_accepting, std::size_t max_len);
bool brute_ida(const Nba& a, bool restrict_accepting, std::size_t max_len);

}  // namespace ambig::test
