#include "ambig/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ambig/detail/tarjan.hpp"
#include "ambig/error.hpp"

namespace ambig {

namespace {

std::vector<std::vector<std::size_t>> adjacency(const Nba& a) {
  std::vector<std::vector<std::size_t>> adj(a.num_states());
  for (const auto& t : a.transitions()) adj[t.src].push_back(t.dst);
  return adj;
}

std::vector<bool> search(const std::vector<std::vector<std::size_t>>& adj,
                         const std::vector<std::size_t>& seeds) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::size_t> stack;
  for (auto s : seeds) {
    if (!seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::vector<std::size_t>> reversed(
    const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<std::vector<std::size_t>> rev(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) {
    for (auto w : adj[v]) rev[w].push_back(v);
  }
  return rev;
}

struct Usefulness {
  std::vector<bool> reachable;
  std::vector<bool> reaches_accepting_cycle;
  std::vector<bool> accepting_on_cycle;
};

Usefulness usefulness(const Nba& a) {
  const auto adj = adjacency(a);
  const auto scc = sccs(a);
  Usefulness u;
  u.reachable = search(adj, {a.initial().begin(), a.initial().end()});
  u.accepting_on_cycle.assign(a.num_states(), false);
  std::vector<std::size_t> seeds;
  for (StateId q : a.accepting()) {
    if (scc.on_cycle(q)) {
      u.accepting_on_cycle[q] = true;
      seeds.push_back(q);
    }
  }
  u.reaches_accepting_cycle = search(reversed(adj), seeds);
  return u;
}

}  // namespace

Scc sccs(const Nba& a) {
  auto result = detail::tarjan(adjacency(a));
  return Scc{std::move(result.component), std::move(result.nontrivial)};
}

std::vector<bool> reachable_from(const Nba& a, const StateSet& from) {
  return search(adjacency(a), {from.begin(), from.end()});
}

std::vector<std::vector<bool>> reachability(const Nba& a) {
  const auto adj = adjacency(a);
  std::vector<std::vector<bool>> out;
  out.reserve(a.num_states());
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    out.push_back(search(adj, {q}));
  }
  return out;
}

Nba trim_nba(const Nba& a) {
  Nba current = a;
  while (true) {
    if (current.num_states() == 0) {
      throw Error(ErrorCode::EmptyLanguage, "automaton accepts no word");
    }
    const auto use = usefulness(current);
    std::vector<StateId> keep;
    for (StateId q = 0; q < current.num_states(); ++q) {
      if (use.reachable[q] && use.reaches_accepting_cycle[q]) keep.push_back(q);
    }
    StateSet accepting;
    for (StateId q : current.accepting()) {
      if (use.accepting_on_cycle[q]) accepting.push_back(q);
    }
    if (keep.size() == current.num_states() &&
        accepting == current.accepting()) {
      return current;
    }
    if (keep.empty()) {
      throw Error(ErrorCode::EmptyLanguage, "automaton accepts no word");
    }

    std::vector<StateId> remap(current.num_states(), StateId(-1));
    std::vector<std::string> names;
    for (StateId q : keep) {
      remap[q] = static_cast<StateId>(names.size());
      names.push_back(current.state_name(q));
    }
    auto project = [&](const StateSet& set) {
      StateSet out;
      for (StateId q : set) {
        if (remap[q] != StateId(-1)) out.push_back(remap[q]);
      }
      return out;
    };
    std::vector<Transition> transitions;
    for (const auto& t : current.transitions()) {
      if (remap[t.src] != StateId(-1) && remap[t.dst] != StateId(-1)) {
        transitions.push_back({remap[t.src], t.sym, remap[t.dst]});
      }
    }
    current = Nba(std::move(names), current.alphabet(), std::move(transitions),
                  project(current.initial()), project(accepting));
  }
}

bool is_trim(const Nba& a) {
  if (a.num_states() == 0) return false;
  const auto use = usefulness(a);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!use.reachable[q] || !use.reaches_accepting_cycle[q]) return false;
    if (a.is_accepting(q) && !use.accepting_on_cycle[q]) return false;
  }
  return true;
}

std::vector<PathWitness> enumerate_paths(const Nba& a, const StateSet& from,
                                         const Word& label, const StateSet& to,
                                         std::size_t max_length) {
  if (label.size() > max_length) {
    throw Error(ErrorCode::LengthExceeded,
                "path label of length " + std::to_string(label.size()) +
                    " exceeds the cap of " + std::to_string(max_length));
  }
  for (SymbolId sym : label) {
    if (sym >= a.num_symbols()) {
      throw Error(ErrorCode::InvalidArgument, "label symbol not in alphabet");
    }
  }
  std::vector<PathWitness> out;
  std::vector<StateId> states;
  std::function<void(StateId)> expand = [&](StateId q) {
    states.push_back(q);
    const std::size_t depth = states.size() - 1;
    if (depth == label.size()) {
      if (set_contains(to, q)) out.emplace_back(states, label);
    } else {
      for (StateId next : a.successors(q, label[depth])) expand(next);
    }
    states.pop_back();
  };
  for (StateId q : from) expand(q);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ambig
