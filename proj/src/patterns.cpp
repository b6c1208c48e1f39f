#include "ambig/patterns.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "ambig/error.hpp"
#include "ambig/graph.hpp"
#include "ambig/io.hpp"

namespace ambig {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct ProductPath {
  std::vector<std::size_t> vertices;
  Word label;
};

using ProductSuccessors =
    std::function<void(std::size_t, SymbolId,
                       const std::function<void(std::size_t)>&)>;

// Breadth-first search in a labelled product graph that returns the
// lexicographically least among the shortest paths from `start` to `target`.
// Each BFS layer is kept as a list of groups sharing one label, ordered by
// that label; expanding the groups symbol by symbol discovers every vertex
// along its least label first.
std::optional<ProductPath> lexmin_shortest_path(std::size_t num_vertices,
                                                std::size_t num_symbols,
                                                std::size_t start,
                                                std::size_t target,
                                                const ProductSuccessors& succ) {
  std::vector<std::size_t> parent(num_vertices, kNone);
  std::vector<SymbolId> via(num_vertices, 0);
  std::vector<bool> seen(num_vertices, false);
  seen[start] = true;
  std::vector<std::vector<std::size_t>> groups{{start}};
  bool found = start == target;

  while (!found && !groups.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& group : groups) {
      for (SymbolId sym = 0; sym < num_symbols && !found; ++sym) {
        std::vector<std::size_t> fresh;
        for (std::size_t v : group) {
          succ(v, sym, [&](std::size_t w) {
            if (seen[w]) return;
            seen[w] = true;
            parent[w] = v;
            via[w] = sym;
            fresh.push_back(w);
            if (w == target) found = true;
          });
          if (found) break;
        }
        if (!fresh.empty()) next.push_back(std::move(fresh));
      }
      if (found) break;
    }
    groups = std::move(next);
  }
  if (!found) return std::nullopt;

  ProductPath path;
  for (std::size_t v = target; v != start; v = parent[v]) {
    path.vertices.push_back(v);
    path.label.push_back(via[v]);
  }
  path.vertices.push_back(start);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.label.begin(), path.label.end());
  return path;
}

// Strict ordering on candidate witnesses: shorter label, then lexicographic.
bool better_label(const Word& candidate, const Word& best) {
  if (candidate.size() != best.size()) return candidate.size() < best.size();
  return candidate < best;
}

std::optional<PatternWitness> eda_at(const Nba& a, StateId p) {
  const std::size_t n = a.num_states();
  auto encode = [n](std::size_t x, std::size_t y, bool split) {
    return (x * n + y) * 2 + (split ? 1 : 0);
  };
  auto succ = [&](std::size_t v, SymbolId sym,
                  const std::function<void(std::size_t)>& emit) {
    const bool split = v % 2 == 1;
    const std::size_t xy = v / 2;
    const auto x = static_cast<StateId>(xy / n);
    const auto y = static_cast<StateId>(xy % n);
    for (StateId x2 : a.successors(x, sym)) {
      for (StateId y2 : a.successors(y, sym)) {
        emit(encode(x2, y2, split || x2 != y2));
      }
    }
  };
  auto path = lexmin_shortest_path(2 * n * n, a.num_symbols(),
                                   encode(p, p, false), encode(p, p, true),
                                   succ);
  if (!path) return std::nullopt;

  std::vector<StateId> first, second;
  for (std::size_t v : path->vertices) {
    first.push_back(static_cast<StateId>(v / 2 / n));
    second.push_back(static_cast<StateId>(v / 2 % n));
  }
  PatternWitness w;
  w.kind = PatternKind::Eda;
  w.p = p;
  w.v = path->label;
  w.paths = {PathWitness(std::move(first), path->label),
             PathWitness(std::move(second), path->label)};
  return w;
}

}  // namespace

std::string_view pattern_kind_name(PatternKind kind) noexcept {
  switch (kind) {
    case PatternKind::Ida: return "IDA";
    case PatternKind::Eda: return "EDA";
    case PatternKind::IdaF: return "IDA_F";
    case PatternKind::EdaF: return "EDA_F";
  }
  return "?";
}

std::string describe_witness(const Nba& a, const PatternWitness& w) {
  std::string out(pattern_kind_name(w.kind));
  out += " (" + a.state_name(w.p);
  if (w.q) out += ", " + a.state_name(*w.q);
  out += ", " + format_word(a, w.v) + ")";
  return out;
}

bool validate_witness(const Nba& a, const PatternWitness& w) {
  if (w.v.empty()) return false;
  for (const auto& path : w.paths) {
    if (!path.valid_in(a) || path.label() != w.v) return false;
  }
  if (w.p >= a.num_states()) return false;
  if (w.is_ida()) {
    if (!w.q || *w.q >= a.num_states() || *w.q == w.p) return false;
    if (w.paths.size() != 3) return false;
    const StateId p = w.p, q = *w.q;
    if (w.paths[0].src() != p || w.paths[0].trg() != p) return false;
    if (w.paths[1].src() != p || w.paths[1].trg() != q) return false;
    if (w.paths[2].src() != q || w.paths[2].trg() != q) return false;
    if (w.kind == PatternKind::IdaF && !a.is_accepting(q)) return false;
    return true;
  }
  if (w.q || w.paths.size() != 2) return false;
  for (const auto& path : w.paths) {
    if (path.src() != w.p || path.trg() != w.p) return false;
  }
  if (w.paths[0] == w.paths[1]) return false;
  if (w.kind == PatternKind::EdaF && !a.is_accepting(w.p)) return false;
  return true;
}

std::optional<PatternWitness> find_eda(const Nba& a, bool restrict_accepting) {
  std::optional<PatternWitness> best;
  for (StateId p = 0; p < a.num_states(); ++p) {
    if (restrict_accepting && !a.is_accepting(p)) continue;
    auto w = eda_at(a, p);
    if (w && (!best || better_label(w->v, best->v))) best = std::move(w);
  }
  if (best && restrict_accepting) best->kind = PatternKind::EdaF;
  return best;
}

std::optional<PatternWitness> ida_witness_for(const Nba& a, StateId p,
                                              StateId q) {
  if (p == q) return std::nullopt;
  const std::size_t n = a.num_states();
  auto encode = [n](std::size_t x, std::size_t y, std::size_t z) {
    return (x * n + y) * n + z;
  };
  auto succ = [&](std::size_t v, SymbolId sym,
                  const std::function<void(std::size_t)>& emit) {
    const auto z = static_cast<StateId>(v % n);
    const auto y = static_cast<StateId>(v / n % n);
    const auto x = static_cast<StateId>(v / n / n);
    auto zs = a.successors(z, sym);
    if (zs.empty()) return;
    auto ys = a.successors(y, sym);
    if (ys.empty()) return;
    for (StateId x2 : a.successors(x, sym)) {
      for (StateId y2 : ys) {
        for (StateId z2 : zs) emit(encode(x2, y2, z2));
      }
    }
  };
  auto path = lexmin_shortest_path(n * n * n, a.num_symbols(),
                                   encode(p, p, q), encode(p, q, q), succ);
  if (!path) return std::nullopt;

  std::vector<StateId> first, second, third;
  for (std::size_t v : path->vertices) {
    first.push_back(static_cast<StateId>(v / n / n));
    second.push_back(static_cast<StateId>(v / n % n));
    third.push_back(static_cast<StateId>(v % n));
  }
  PatternWitness w;
  w.kind = a.is_accepting(q) ? PatternKind::IdaF : PatternKind::Ida;
  w.p = p;
  w.q = q;
  w.v = path->label;
  w.paths = {PathWitness(std::move(first), path->label),
             PathWitness(std::move(second), path->label),
             PathWitness(std::move(third), path->label)};
  return w;
}

std::optional<PatternWitness> find_ida(const Nba& a, bool restrict_accepting) {
  const auto scc = sccs(a);
  std::optional<PatternWitness> best;
  for (StateId p = 0; p < a.num_states(); ++p) {
    if (!scc.on_cycle(p)) continue;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (q == p || !scc.on_cycle(q)) continue;
      if (restrict_accepting && !a.is_accepting(q)) continue;
      auto w = ida_witness_for(a, p, q);
      if (w && (!best || better_label(w->v, best->v))) best = std::move(w);
    }
  }
  if (best) {
    best->kind = restrict_accepting ? PatternKind::IdaF : PatternKind::Ida;
  }
  return best;
}

std::vector<std::pair<StateId, StateId>> ida_pairs(const Nba& a) {
  const auto scc = sccs(a);
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId p = 0; p < a.num_states(); ++p) {
    if (!scc.on_cycle(p)) continue;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (q == p || !scc.on_cycle(q)) continue;
      if (ida_witness_for(a, p, q)) out.emplace_back(p, q);
    }
  }
  return out;
}

PatternWitness shift_pattern(const Nba& a, const PatternWitness& w) {
  if (!validate_witness(a, w)) {
    throw Error(ErrorCode::NotShiftable, "input is not a valid witness");
  }
  const std::size_t len = w.v.size();

  if (w.is_ida()) {
    const auto& pi1 = w.paths[0];
    const auto& pi2 = w.paths[1];
    const auto& pi3 = w.paths[2];
    bool visits_accepting = false;
    for (std::size_t k = 0; k <= len; ++k) {
      const StateId q2 = pi3.state_sequence()[k];
      if (!a.is_accepting(q2)) continue;
      visits_accepting = true;
      const StateId p2 = pi1.state_sequence()[k];
      if (p2 == q2) continue;
      const auto pi1_head = pi1.slice(0, k), pi1_tail = pi1.slice(k, len);
      const auto pi3_head = pi3.slice(0, k), pi3_tail = pi3.slice(k, len);
      PatternWitness out;
      out.kind = PatternKind::IdaF;
      out.p = p2;
      out.q = q2;
      out.paths = {pi1_tail.then(pi1).then(pi1_head),
                   pi1_tail.then(pi2).then(pi3_head),
                   pi3_tail.then(pi3).then(pi3_head)};
      out.v = out.paths[0].label();
      return out;
    }
    throw Error(ErrorCode::NotShiftable,
                visits_accepting
                    ? "every accepting visit on the third path meets the first "
                      "path in the same state"
                    : "the third path visits no accepting state");
  }

  for (std::size_t which = 0; which < 2; ++which) {
    const auto& cycle = w.paths[which];
    const auto& other = w.paths[1 - which];
    for (std::size_t k = 0; k <= len; ++k) {
      const StateId p2 = cycle.state_sequence()[k];
      if (!a.is_accepting(p2)) continue;
      const auto head = cycle.slice(0, k), tail = cycle.slice(k, len);
      PatternWitness out;
      out.kind = PatternKind::EdaF;
      out.p = p2;
      out.paths = {tail.then(cycle).then(head), tail.then(other).then(head)};
      out.v = out.paths[0].label();
      return out;
    }
  }
  throw Error(ErrorCode::NotShiftable, "neither cycle visits an accepting state");
}

PatternWitness eda_to_ida(const Nba& a, const PatternWitness& w) {
  if (w.is_ida() || !validate_witness(a, w)) {
    throw Error(ErrorCode::InvalidArgument, "expected a valid EDA witness");
  }
  const auto& pi1 = w.paths[0];
  const auto& pi2 = w.paths[1];
  const std::size_t len = w.v.size();
  std::size_t split = 0;
  while (pi1.state_sequence()[split] == pi2.state_sequence()[split]) ++split;

  const auto pi1_head = pi1.slice(0, split), pi1_tail = pi1.slice(split, len);
  const auto pi2_head = pi2.slice(0, split), pi2_tail = pi2.slice(split, len);
  PatternWitness out;
  out.p = pi1.state_sequence()[split];
  out.q = pi2.state_sequence()[split];
  out.kind = a.is_accepting(*out.q) ? PatternKind::IdaF : PatternKind::Ida;
  out.paths = {pi1_tail.then(pi1).then(pi1_head),
               pi1_tail.then(pi2).then(pi2_head),
               pi2_tail.then(pi2).then(pi2_head)};
  out.v = out.paths[0].label();
  return out;
}

}  // namespace ambig
