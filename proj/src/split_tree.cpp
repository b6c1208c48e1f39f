#include "ambig/split_tree.hpp"

#include "ambig/error.hpp"

namespace ambig {

SplitTree build_split_tree(const Nba& a, const Word& w, bool reduced,
                           std::size_t depth_cap) {
  if (w.size() > depth_cap) {
    throw Error(ErrorCode::DepthExceeded,
                "word of length " + std::to_string(w.size()) +
                    " exceeds the split tree depth cap " +
                    std::to_string(depth_cap));
  }
  for (SymbolId s : w) {
    if (s >= a.num_symbols()) {
      throw Error(ErrorCode::InvalidArgument, "word symbol not in alphabet");
    }
  }
  SplitTree tree;
  tree.levels.push_back({{"", a.initial()}});
  for (SymbolId s : w) {
    std::vector<SplitTreeNode> next;
    for (const auto& node : tree.levels.back()) {
      StateSet left;
      StateSet right;
      for (StateId q : a.successors(node.label, s)) {
        (a.is_accepting(q) ? left : right).push_back(q);
      }
      next.push_back({node.address + '0', std::move(left)});
      next.push_back({node.address + '1', std::move(right)});
    }
    tree.levels.push_back(std::move(next));
  }
  if (!reduced) return tree;

  tree.reduced = true;
  for (auto& level : tree.levels) {
    StateSet seen;
    std::vector<SplitTreeNode> kept;
    for (auto& node : level) {
      StateSet fresh = set_difference(node.label, seen);
      seen = set_union(seen, fresh);
      if (!fresh.empty()) kept.push_back({node.address, std::move(fresh)});
    }
    level = std::move(kept);
  }
  return tree;
}

std::string format_state_set(const Nba& a, const StateSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ',';
    out += a.state_name(set[i]);
  }
  return out + "}";
}

std::string render_split_tree(const Nba& a, const SplitTree& tree) {
  std::string out;
  for (const auto& level : tree.levels) {
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0) out += ' ';
      out += format_state_set(a, level[i].label);
    }
    out += '\n';
  }
  return out;
}

}  // namespace ambig
