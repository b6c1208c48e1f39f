#pragma once

#include <compare>
#include <string>
#include <vector>

#include "ambig/nba.hpp"
#include "ambig/split_tree.hpp"

namespace ambig {

/// State of the disambiguated automaton: S is one node label of the reduced
/// split tree and P the union of the labels to its left.
struct PairState {
  StateSet p;
  StateSet s;

  friend auto operator<=>(const PairState&, const PairState&) = default;
};

/// `P{q1}_S{q0}`.
std::string pair_state_name(const Nba& a, const PairState& ps);

/// Successors of `ps` on `sym`, at most two: first the move that keeps the
/// accepting successors of S (when nonempty), then the move that keeps the
/// non-accepting ones (when nonempty).
std::vector<PairState> pair_successors(const Nba& a, const PairState& ps,
                                       SymbolId sym);

/// Pair states reachable from (empty, Q0) in breadth-first discovery order
/// (letters ascending, accepting move first). Empty when Q0 is empty.
std::vector<PairState> reachable_pairs(const Nba& a);

/// Finitely ambiguous automaton with the same language, on the reachable pair
/// states in discovery order; a pair is accepting iff S only holds accepting
/// states. Not trimmed.
Nba disambiguate(const Nba& a);

/// Pair states reachable by reading `w` coincide with the level-|w| nodes of
/// the reduced split tree, each node u giving (union of labels left of u,
/// label of u). Throws `Error(DepthExceeded)` when |w| > depth_cap.
bool check_run_tree_correspondence(const Nba& a, const Word& w,
                                   std::size_t depth_cap = kDefaultSplitDepth);

}  // namespace ambig
