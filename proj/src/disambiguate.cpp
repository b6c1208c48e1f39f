#include "ambig/disambiguate.hpp"

#include <map>
#include <set>

#include "ambig/error.hpp"

namespace ambig {

namespace {

// Delta(S, a) split into accepting and non-accepting successors.
std::pair<StateSet, StateSet> split_successors(const Nba& a, const StateSet& s,
                                               SymbolId sym) {
  StateSet accepting;
  StateSet rejecting;
  for (StateId q : a.successors(s, sym)) {
    (a.is_accepting(q) ? accepting : rejecting).push_back(q);
  }
  return {accepting, rejecting};
}

}  // namespace

std::string pair_state_name(const Nba& a, const PairState& ps) {
  return "P" + format_state_set(a, ps.p) + "_S" + format_state_set(a, ps.s);
}

std::vector<PairState> pair_successors(const Nba& a, const PairState& ps,
                                       SymbolId sym) {
  const StateSet p_next = a.successors(ps.p, sym);
  const auto [s_acc, s_rej] = split_successors(a, ps.s, sym);
  std::vector<PairState> out;
  StateSet keep_acc = set_difference(s_acc, p_next);
  if (!keep_acc.empty()) out.push_back({p_next, std::move(keep_acc)});
  StateSet p_wide = set_union(p_next, s_acc);
  StateSet keep_rej = set_difference(s_rej, p_wide);
  if (!keep_rej.empty()) out.push_back({std::move(p_wide), std::move(keep_rej)});
  return out;
}

std::vector<PairState> reachable_pairs(const Nba& a) {
  std::vector<PairState> found;
  if (a.initial().empty()) return found;
  std::set<PairState> seen;
  found.push_back({{}, a.initial()});
  seen.insert(found.front());
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (SymbolId sym = 0; sym < a.num_symbols(); ++sym) {
      for (auto& next : pair_successors(a, found[head], sym)) {
        if (seen.insert(next).second) found.push_back(std::move(next));
      }
    }
  }
  return found;
}

Nba disambiguate(const Nba& a) {
  const auto pairs = reachable_pairs(a);
  std::map<PairState, StateId> id;
  std::vector<std::string> names;
  StateSet accepting;
  for (const auto& ps : pairs) {
    const auto q = static_cast<StateId>(names.size());
    id.emplace(ps, q);
    names.push_back(pair_state_name(a, ps));
    if (set_subset(ps.s, a.accepting())) accepting.push_back(q);
  }
  std::vector<Transition> transitions;
  for (const auto& ps : pairs) {
    for (SymbolId sym = 0; sym < a.num_symbols(); ++sym) {
      for (const auto& next : pair_successors(a, ps, sym)) {
        transitions.push_back({id.at(ps), sym, id.at(next)});
      }
    }
  }
  StateSet initial;
  if (!pairs.empty()) initial.push_back(0);
  return Nba(std::move(names), a.alphabet(), std::move(transitions),
             std::move(initial), std::move(accepting));
}

bool check_run_tree_correspondence(const Nba& a, const Word& w,
                                   std::size_t depth_cap) {
  const SplitTree tree = build_split_tree(a, w, true, depth_cap);

  std::set<PairState> reached;
  if (!a.initial().empty()) reached.insert({{}, a.initial()});
  for (SymbolId sym : w) {
    std::set<PairState> next;
    for (const auto& ps : reached) {
      for (auto& succ : pair_successors(a, ps, sym)) next.insert(std::move(succ));
    }
    reached = std::move(next);
  }

  std::set<PairState> from_tree;
  StateSet left;
  for (const auto& node : tree.levels.back()) {
    if (!from_tree.insert({left, node.label}).second) return false;
    left = set_union(left, node.label);
  }
  return from_tree == reached;
}

}  // namespace ambig
