#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace ambig::detail {

struct SccResult {
  std::vector<std::size_t> component;  // per vertex, reverse topological order
  std::vector<bool> nontrivial;        // per component
};

/// Iterative Tarjan over an adjacency list. `adj[v]` may contain duplicates.
inline SccResult tarjan(const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
  const std::size_t n = adj.size();
  SccResult out;
  out.component.assign(n, kUnvisited);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < adj[v].size()) {
        const std::size_t w = adj[v][edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
      if (low[done] != index[done]) continue;
      const std::size_t id = out.nontrivial.size();
      std::size_t members = 0;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        out.component[w] = id;
        ++members;
      } while (w != done);
      bool cyclic = members > 1;
      if (!cyclic) {
        cyclic = std::find(adj[done].begin(), adj[done].end(), done) !=
                 adj[done].end();
      }
      out.nontrivial.push_back(cyclic);
    }
  }
  return out;
}

}  // namespace ambig::detail
