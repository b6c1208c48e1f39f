#include "ambig/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ambig/detail/tarjan.hpp"
#include "ambig/error.hpp"

namespace ambig {

namespace {

std::uint64_t checked_add(std::uint64_t lhs, std::uint64_t rhs) {
  std::uint64_t out;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw Error(ErrorCode::InvalidArgument, "run count overflows 64 bits");
  }
  return out;
}

std::vector<bool> forward_closure(
    const std::vector<std::vector<std::size_t>>& adj,
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

void append_words(std::size_t num_symbols, std::size_t length,
                  std::vector<Word>& out) {
  Word current(length, 0);
  while (true) {
    out.push_back(current);
    std::size_t i = length;
    while (i > 0 && current[i - 1] + 1 == num_symbols) {
      current[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
    ++current[i - 1];
  }
}

// Acceptance of u v^omega from a single state using subset simulation over
// the prefix and a reachability closure over "read one period" steps. Shares
// nothing with the lasso graph.
class PeriodAcceptance {
 public:
  PeriodAcceptance(const Nba& a, const Word& period) : a_(a) {
    const std::size_t n = a.num_states();
    closure_.assign(n, std::vector<bool>(n, false));
    for (StateId s = 0; s < n; ++s) {
      closure_[s][s] = true;
      std::map<StateId, bool> frontier{{s, false}};
      for (SymbolId sym : period) {
        std::map<StateId, bool> next;
        for (auto [q, flag] : frontier) {
          for (StateId r : a.successors(q, sym)) {
            next[r] = next[r] || flag || a.is_accepting(r);
          }
        }
        frontier = std::move(next);
      }
      for (auto [r, flag] : frontier) {
        closure_[s][r] = true;
        if (flag) flagged_.emplace_back(s, r);
      }
    }
    for (StateId k = 0; k < n; ++k) {
      for (StateId i = 0; i < n; ++i) {
        if (!closure_[i][k]) continue;
        for (StateId j = 0; j < n; ++j) {
          if (closure_[k][j]) closure_[i][j] = true;
        }
      }
    }
  }

  // True iff from some state of `from`, reading the period forever can pass
  // an accepting state infinitely often.
  bool accepts(const StateSet& from) const {
    for (StateId s : from) {
      for (auto [x, y] : flagged_) {
        if (closure_[s][x] && closure_[y][x]) return true;
      }
    }
    return false;
  }

 private:
  const Nba& a_;
  std::vector<std::vector<bool>> closure_;
  std::vector<std::pair<StateId, StateId>> flagged_;
};

}  // namespace

std::string cardinality_name(RunCardinality::Kind kind) {
  switch (kind) {
    case RunCardinality::Kind::Finite: return "finite";
    case RunCardinality::Kind::CountablyInfinite: return "aleph0";
    case RunCardinality::Kind::Uncountable: return "continuum";
  }
  return "?";
}

std::string to_string(const RunCardinality& c) {
  if (c.is_finite()) return "Finite(" + std::to_string(c.count) + ")";
  return cardinality_name(c.kind);
}

LassoGraph::LassoGraph(const Nba& a, const LassoWord& w)
    : positions_(w.size()) {
  if (w.period.empty()) {
    throw Error(ErrorCode::InvalidArgument, "lasso period must not be empty");
  }
  for (std::size_t i = 0; i < positions_; ++i) {
    if (w.at(i) >= a.num_symbols()) {
      throw Error(ErrorCode::InvalidArgument, "lasso symbol not in alphabet");
    }
  }
  const std::size_t n = a.num_states();
  const std::size_t total = n * positions_;
  successors_.resize(total);
  accepting_.assign(total, false);
  for (StateId q = 0; q < n; ++q) {
    for (std::size_t i = 0; i < positions_; ++i) {
      const std::size_t next = i + 1 < positions_ ? i + 1 : w.prefix.size();
      const std::size_t v = vertex(q, i);
      accepting_[v] = a.is_accepting(q);
      for (StateId r : a.successors(q, w.at(i))) {
        successors_[v].push_back(vertex(r, next));
      }
    }
  }
  for (StateId q : a.initial()) sources_.push_back(vertex(q, 0));

  // Vertices that start an accepting infinite path: backward closure of the
  // nontrivial SCCs containing an accepting vertex.
  const auto scc = detail::tarjan(successors_);
  std::vector<bool> good_component(scc.nontrivial.size(), false);
  for (std::size_t v = 0; v < total; ++v) {
    if (accepting_[v] && scc.nontrivial[scc.component[v]]) {
      good_component[scc.component[v]] = true;
    }
  }
  std::vector<std::vector<std::size_t>> reverse(total);
  for (std::size_t v = 0; v < total; ++v) {
    for (auto s : successors_[v]) reverse[s].push_back(v);
  }
  std::vector<std::size_t> seeds;
  for (std::size_t v = 0; v < total; ++v) {
    if (good_component[scc.component[v]]) seeds.push_back(v);
  }
  const auto live = forward_closure(reverse, seeds);
  const auto reached = forward_closure(successors_, sources_);
  useful_.assign(total, false);
  for (std::size_t v = 0; v < total; ++v) useful_[v] = live[v] && reached[v];

  std::vector<std::vector<std::size_t>> useful_adj(total);
  for (std::size_t v = 0; v < total; ++v) {
    if (!useful_[v]) continue;
    for (auto s : successors_[v]) {
      if (useful_[s]) useful_adj[v].push_back(s);
    }
  }
  auto useful_scc = detail::tarjan(useful_adj);
  component_ = std::move(useful_scc.component);
  on_cycle_.assign(total, false);
  for (std::size_t v = 0; v < total; ++v) {
    on_cycle_[v] = useful_[v] && useful_scc.nontrivial[component_[v]];
  }
}

bool lasso_member(const Nba& a, const LassoWord& w) {
  const LassoGraph g(a, w);
  return std::any_of(g.sources().begin(), g.sources().end(),
                     [&](std::size_t s) { return g.useful(s); });
}

RunCardinality count_runs(const Nba& a, const LassoWord& w) {
  const LassoGraph g(a, w);
  const std::size_t total = g.num_vertices();

  std::vector<std::size_t> useful_out(total, 0);
  std::vector<std::size_t> internal_out(total, 0);
  for (std::size_t v = 0; v < total; ++v) {
    if (!g.useful(v)) continue;
    for (auto s : g.successors(v)) {
      if (!g.useful(s)) continue;
      ++useful_out[v];
      if (g.on_useful_cycle(v) &&
          g.useful_component(s) == g.useful_component(v)) {
        ++internal_out[v];
      }
    }
  }

  // A cyclic component is a simple cycle iff each member has exactly one
  // successor inside it.
  std::map<std::size_t, std::pair<bool, bool>> cyclic;  // accepting, simple
  for (std::size_t v = 0; v < total; ++v) {
    if (!g.on_useful_cycle(v)) continue;
    auto [it, fresh] = cyclic.try_emplace(g.useful_component(v), false, true);
    it->second.first = it->second.first || g.accepting(v);
    it->second.second = it->second.second && internal_out[v] == 1;
  }
  for (const auto& [component, info] : cyclic) {
    if (info.first && !info.second) return RunCardinality::continuum();
  }
  for (std::size_t v = 0; v < total; ++v) {
    if (g.on_useful_cycle(v) && useful_out[v] >= 2) {
      return RunCardinality::aleph0();
    }
  }

  std::vector<std::optional<std::uint64_t>> memo(total);
  std::function<std::uint64_t(std::size_t)> paths = [&](std::size_t v) {
    if (memo[v]) return *memo[v];
    std::uint64_t k = 0;
    if (g.on_useful_cycle(v)) {
      k = 1;
    } else {
      for (auto s : g.successors(v)) {
        if (g.useful(s)) k = checked_add(k, paths(s));
      }
    }
    memo[v] = k;
    return k;
  };
  std::uint64_t k = 0;
  for (auto s : g.sources()) {
    if (g.useful(s)) k = checked_add(k, paths(s));
  }
  return RunCardinality::finite(k);
}

std::uint64_t count_runs_by_prefix_expansion(const Nba& a, const LassoWord& w) {
  const std::size_t n = a.num_states();
  const std::size_t u = w.prefix.size();
  const std::size_t p = w.period.size();
  const std::size_t horizon = u + (n + 1) * p;

  // acceptance of the suffix starting at time t, from state q
  std::vector<PeriodAcceptance> rotations;
  for (std::size_t r = 0; r < p; ++r) {
    Word rotated(w.period.begin() + r, w.period.end());
    rotated.insert(rotated.end(), w.period.begin(), w.period.begin() + r);
    rotations.emplace_back(a, rotated);
  }
  std::map<std::pair<StateId, std::size_t>, bool> cache;
  auto extendable = [&](StateId q, std::size_t t) {
    const std::size_t key_t = t < u ? t : u + (t - u) % p;
    auto [it, fresh] = cache.try_emplace({q, key_t}, false);
    if (!fresh) return it->second;
    StateSet current{q};
    for (std::size_t i = key_t; i < u; ++i) {
      current = a.successors(current, w.prefix[i]);
    }
    const std::size_t rotation = key_t < u ? 0 : key_t - u;
    return it->second = rotations[rotation].accepts(current);
  };

  // Live prefixes are kept one entry per prefix (never merged), so the list
  // length at the horizon is the number of distinct accepting-run prefixes.
  std::vector<StateId> live;
  for (StateId q : a.initial()) {
    if (extendable(q, 0)) live.push_back(q);
  }
  for (std::size_t t = 0; t < horizon; ++t) {
    std::vector<StateId> next;
    for (StateId q : live) {
      for (StateId r : a.successors(q, w.at(t))) {
        if (extendable(r, t + 1)) next.push_back(r);
      }
    }
    live = std::move(next);
  }
  return live.size();
}

std::uint64_t count_runs_nfa(const Nba& a, const Word& w,
                             std::size_t max_length) {
  if (w.size() > max_length) {
    throw Error(ErrorCode::LengthExceeded,
                "word of length " + std::to_string(w.size()) +
                    " exceeds the cap of " + std::to_string(max_length));
  }
  std::vector<std::uint64_t> paths(a.num_states(), 0);
  for (StateId q : a.initial()) paths[q] = 1;
  for (SymbolId sym : w) {
    if (sym >= a.num_symbols()) {
      throw Error(ErrorCode::InvalidArgument, "word symbol not in alphabet");
    }
    std::vector<std::uint64_t> next(a.num_states(), 0);
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (paths[q] == 0) continue;
      for (StateId r : a.successors(q, sym)) {
        next[r] = checked_add(next[r], paths[q]);
      }
    }
    paths = std::move(next);
  }
  std::uint64_t total = 0;
  for (StateId q : a.accepting()) total = checked_add(total, paths[q]);
  return total;
}

std::vector<LassoWord> lasso_sweep(std::size_t num_symbols, std::size_t max_u,
                                   std::size_t max_v) {
  std::vector<LassoWord> out;
  if (num_symbols == 0 || max_v == 0) return out;
  std::vector<std::vector<Word>> words(std::max(max_u, max_v) + 1);
  for (std::size_t len = 0; len < words.size(); ++len) {
    append_words(num_symbols, len, words[len]);
  }
  for (std::size_t total = 1; total <= max_u + max_v; ++total) {
    for (std::size_t ul = 0; ul <= std::min(max_u, total - 1); ++ul) {
      const std::size_t vl = total - ul;
      if (vl > max_v) continue;
      for (const auto& u : words[ul]) {
        for (const auto& v : words[vl]) out.push_back({u, v});
      }
    }
  }
  return out;
}

std::vector<std::string> union_alphabet(const Nba& a, const Nba& b) {
  std::vector<std::string> out = a.alphabet();
  for (const auto& sym : b.alphabet()) {
    if (!a.find_symbol(sym)) out.push_back(sym);
  }
  return out;
}

Nba over_alphabet(const Nba& a, const std::vector<std::string>& alphabet) {
  std::vector<SymbolId> remap(a.num_symbols());
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    auto it = std::find(alphabet.begin(), alphabet.end(), a.symbol_name(s));
    if (it == alphabet.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "symbol '" + a.symbol_name(s) + "' missing from alphabet");
    }
    remap[s] = static_cast<SymbolId>(it - alphabet.begin());
  }
  std::vector<Transition> transitions;
  for (const auto& t : a.transitions()) {
    transitions.push_back({t.src, remap[t.sym], t.dst});
  }
  return Nba(a.states(), alphabet, std::move(transitions), a.initial(),
             a.accepting());
}

std::optional<LassoWord> lasso_equiv_sample(const Nba& a, const Nba& b,
                                            std::size_t max_u,
                                            std::size_t max_v) {
  const auto alphabet = union_alphabet(a, b);
  const Nba lhs = over_alphabet(a, alphabet);
  const Nba rhs = over_alphabet(b, alphabet);
  for (const auto& w : lasso_sweep(alphabet.size(), max_u, max_v)) {
    if (lasso_member(lhs, w) != lasso_member(rhs, w)) return w;
  }
  return std::nullopt;
}

}  // namespace ambig
