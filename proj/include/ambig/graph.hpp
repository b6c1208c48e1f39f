#pragma once

#include <cstddef>
#include <vector>

#include "ambig/nba.hpp"

namespace ambig {

/// SCC decomposition of the transition graph.
struct Scc {
  /// Component index per state. Components are numbered in reverse
  /// topological order (a component only reaches components with smaller or
  /// equal index).
  std::vector<std::size_t> component;
  /// Per component: contains a cycle (two or more states, or a self-loop).
  std::vector<bool> nontrivial;

  std::size_t count() const noexcept { return nontrivial.size(); }
  bool on_cycle(StateId q) const { return nontrivial.at(component.at(q)); }
};

Scc sccs(const Nba& a);

/// States reachable from `from` (including `from`).
std::vector<bool> reachable_from(const Nba& a, const StateSet& from);
/// Reflexive-transitive reachability matrix, `reach[p][q]` iff p ->* q.
std::vector<std::vector<bool>> reachability(const Nba& a);

/// Buchi trimming: removes states that are unreachable or cannot reach an
/// accepting cycle, and unmarks accepting states that lie on no cycle.
/// Iterates to a fixpoint. Throws `Error(EmptyLanguage)` if nothing survives.
Nba trim_nba(const Nba& a);

/// True iff every state is reachable from an initial state, every state can
/// reach a cycle through an accepting state, and every accepting state lies on
/// a cycle.
bool is_trim(const Nba& a);

/// Default cap on the label length accepted by `enumerate_paths`.
inline constexpr std::size_t kDefaultPathLabelCap = 16;

/// P(from, label, to): every path from a state of `from` to a state of `to`
/// reading `label`, sorted. Throws `Error(LengthExceeded)` beyond `max_length`.
std::vector<PathWitness> enumerate_paths(
    const Nba& a, const StateSet& from, const Word& label, const StateSet& to,
    std::size_t max_length = kDefaultPathLabelCap);

}  // namespace ambig
