#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ambig/nba.hpp"

namespace ambig {

/// Cardinality of the set of accepting runs on one infinite word.
struct RunCardinality {
  enum class Kind { Finite, CountablyInfinite, Uncountable };

  Kind kind = Kind::Finite;
  std::uint64_t count = 0;  // meaningful iff kind == Finite

  static RunCardinality finite(std::uint64_t k) { return {Kind::Finite, k}; }
  static RunCardinality aleph0() { return {Kind::CountablyInfinite, 0}; }
  static RunCardinality continuum() { return {Kind::Uncountable, 0}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  bool is_zero() const noexcept { return is_finite() && count == 0; }

  friend bool operator==(const RunCardinality&, const RunCardinality&) = default;
};

/// "finite", "aleph0" or "continuum".
std::string cardinality_name(RunCardinality::Kind kind);
/// e.g. "Finite(2)", "aleph0", "continuum".
std::string to_string(const RunCardinality& c);

/// Unrolling of the automaton over u v^omega: vertex (q, i) is state q at a
/// word position congruent to i, where positions |u|+|v| wrap back to |u|.
/// Infinite paths from a source correspond one-to-one to runs.
class LassoGraph {
 public:
  LassoGraph(const Nba& a, const LassoWord& w);

  std::size_t num_vertices() const noexcept { return successors_.size(); }
  std::size_t num_positions() const noexcept { return positions_; }
  std::size_t vertex(StateId q, std::size_t position) const {
    return q * positions_ + position;
  }
  StateId state_of(std::size_t v) const {
    return static_cast<StateId>(v / positions_);
  }
  std::size_t position_of(std::size_t v) const { return v % positions_; }

  const std::vector<std::size_t>& successors(std::size_t v) const {
    return successors_[v];
  }
  const std::vector<std::size_t>& sources() const noexcept { return sources_; }
  bool accepting(std::size_t v) const { return accepting_[v]; }
  /// Reachable from a source and the start of an accepting infinite path.
  bool useful(std::size_t v) const { return useful_[v]; }
  /// Lies on a cycle of the useful subgraph.
  bool on_useful_cycle(std::size_t v) const { return on_cycle_[v]; }
  /// Component of `v` in the useful subgraph (undefined for useless vertices).
  std::size_t useful_component(std::size_t v) const { return component_[v]; }

 private:
  std::size_t positions_ = 0;
  std::vector<std::vector<std::size_t>> successors_;
  std::vector<std::size_t> sources_;
  std::vector<bool> accepting_;
  std::vector<bool> useful_;
  std::vector<bool> on_cycle_;
  std::vector<std::size_t> component_;
};

/// Buchi membership of u v^omega.
bool lasso_member(const Nba& a, const LassoWord& w);

/// Number of accepting runs on u v^omega, decided on the useful lasso graph:
/// uncountable iff an accepting useful SCC is not a simple cycle; countably
/// infinite iff a useful cycle vertex has two useful successors; otherwise a
/// DAG count.
RunCardinality count_runs(const Nba& a, const LassoWord& w);

/// Independent count for words with finitely many runs: enumerates run
/// prefixes of length |u| + (n+1)|v| that extend to an accepting run, pruning
/// dead prefixes with a separate subset-based acceptance check.
std::uint64_t count_runs_by_prefix_expansion(const Nba& a, const LassoWord& w);

/// Accepting runs of the automaton read as an NFA: |P(Q0, w, F)|.
/// Throws `Error(LengthExceeded)` beyond `max_length` symbols.
std::uint64_t count_runs_nfa(const Nba& a, const Word& w,
                             std::size_t max_length = 16);

/// All lassos with |u| <= max_u and 1 <= |v| <= max_v over `num_symbols`
/// letters, ordered by |u|+|v|, then |u|, then u and v lexicographically.
std::vector<LassoWord> lasso_sweep(std::size_t num_symbols, std::size_t max_u,
                                   std::size_t max_v);

/// `a`'s alphabet followed by the symbols of `b` that `a` lacks.
std::vector<std::string> union_alphabet(const Nba& a, const Nba& b);

/// First lasso (in `lasso_sweep` order over `union_alphabet(a, b)`) on which
/// the two automata disagree. Symbols are matched by name; the returned ids
/// index the union alphabet.
std::optional<LassoWord> lasso_equiv_sample(const Nba& a, const Nba& b,
                                            std::size_t max_u,
                                            std::size_t max_v);

/// The automaton with its alphabet extended to `alphabet` (which must list
/// every existing symbol); symbol ids are remapped by name.
Nba over_alphabet(const Nba& a, const std::vector<std::string>& alphabet);

}  // namespace ambig
