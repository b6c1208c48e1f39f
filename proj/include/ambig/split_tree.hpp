#pragma once

#include <string>
#include <vector>

#include "ambig/nba.hpp"

namespace ambig {

inline constexpr std::size_t kDefaultSplitDepth = 12;

struct SplitTreeNode {
  /// Path from the root: '0' for the accepting (left) child, '1' for the
  /// non-accepting (right) child.
  std::string address;
  StateSet label;

  friend bool operator==(const SplitTreeNode&, const SplitTreeNode&) = default;
};

/// First levels of the tree of runs on a word. Level i lists its nodes left
/// to right; level 0 is the root labelled with the initial states.
struct SplitTree {
  bool reduced = false;
  std::vector<std::vector<SplitTreeNode>> levels;

  std::size_t depth() const noexcept {
    return levels.empty() ? 0 : levels.size() - 1;
  }
};

/// Full tree: a node labelled P at level i has children labelled with the
/// accepting and the non-accepting part of Delta(P, w(i)). The reduced tree
/// keeps each state only in its leftmost label per level and drops empty
/// labels. Throws `Error(DepthExceeded)` when |w| > depth_cap.
SplitTree build_split_tree(const Nba& a, const Word& w, bool reduced,
                           std::size_t depth_cap = kDefaultSplitDepth);

/// One level per line, labels left to right, e.g. `{q1} {q2} {q0}`.
std::string render_split_tree(const Nba& a, const SplitTree& tree);

/// `{q0,q1}`.
std::string format_state_set(const Nba& a, const StateSet& set);

}  // namespace ambig
