#include "ambig/degree.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "ambig/classify.hpp"
#include "ambig/error.hpp"
#include "ambig/graph.hpp"

namespace ambig {

namespace {

using Entry = BoundedMatrix::Entry;

// Breadth-first closure of a deterministic configuration system. Parents are
// dequeued in (length, lexicographic) order of their words and letters are
// tried in ascending order, so the first word found for a configuration is
// its shortest and lexicographically least.
template <typename Config, typename Step>
std::vector<std::pair<Config, Word>> explore(std::vector<std::pair<Config, Word>> seeds,
                                             std::size_t num_symbols, Step step) {
  std::map<Config, std::size_t> index;
  std::vector<std::pair<Config, Word>> found;
  for (auto& seed : seeds) {
    if (index.try_emplace(seed.first, found.size()).second) {
      found.push_back(std::move(seed));
    }
  }
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (SymbolId s = 0; s < num_symbols; ++s) {
      Config next = step(found[head].first, s);
      if (index.try_emplace(next, found.size()).second) {
        Word w = found[head].second;
        w.push_back(s);
        found.emplace_back(std::move(next), std::move(w));
      }
    }
  }
  return found;
}

class DegreeSearch {
 public:
  explicit DegreeSearch(const Nba& input) {
    try {
      a_ = trim_nba(input);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EmptyLanguage) throw;
      return;
    }
    const auto cls = classify(*a_);
    if (cls.tag != AmbiguityTag::Finite) {
      throw Error(ErrorCode::PreconditionViolated,
                  "degree needs a finitely ambiguous automaton, found " +
                      std::string(ambiguity_tag_name(cls.tag)) + " via " +
                      describe_witness(*a_, *cls.witness));
    }
    letters_ = letter_matrices(*a_);
    explore_periods();
  }

  DegreeResult exceeds(unsigned d) const {
    if (!a_) return {};
    const std::size_t n = a_->num_states();
    const Entry cap = d + 1;
    std::vector<Entry> start(n, 0);
    for (StateId q : a_->initial()) start[q] = std::min<Entry>(start[q] + 1, cap);
    const auto rows = explore<std::vector<Entry>>(
        {{start, {}}}, a_->num_symbols(),
        [&](const std::vector<Entry>& row, SymbolId s) {
          return letters_.at(s).transitions.left_multiply(row, cap);
        });

    std::optional<std::tuple<std::size_t, Word, Word>> best;
    for (const auto& [row, x] : rows) {
      for (const auto& [loops, z] : periods_) {
        std::uint64_t total = 0;
        for (StateId i : loops) total += row[i];
        if (total <= d) continue;
        auto key = std::make_tuple(x.size() + z.size(), x, z);
        if (!best || key < *best) best = std::move(key);
      }
    }
    DegreeResult out;
    if (best) {
      out.exceeds = true;
      out.witness_lasso = LassoWord{std::get<1>(*best), std::get<2>(*best)};
    }
    return out;
  }

 private:
  using Pair = std::pair<BoundedMatrix, BoundedMatrix>;

  // Every reachable (Z, Z^) over nonempty z, reduced to the loop set
  // I = {i | Z(i,i) = 1 and Z^(i,i) > 1} with the least z producing it.
  void explore_periods() {
    std::vector<std::pair<Pair, Word>> seeds;
    for (SymbolId s = 0; s < a_->num_symbols(); ++s) {
      const auto& m = letters_.at(s);
      seeds.push_back({{m.transitions.product(BoundedMatrix::identity(
                            a_->num_states(), 2), 2),
                        m.weighted},
                       {s}});
    }
    const auto pairs = explore<Pair>(
        std::move(seeds), a_->num_symbols(), [&](const Pair& zz, SymbolId s) {
          const auto& m = letters_.at(s);
          return Pair{zz.first.product(m.transitions, 2),
                      zz.second.product(m.weighted, 2)};
        });
    std::map<StateSet, Word> by_loops;
    for (const auto& [zz, z] : pairs) {
      StateSet loops;
      for (StateId i = 0; i < a_->num_states(); ++i) {
        if (zz.first.at(i, i) == 1 && zz.second.at(i, i) > 1) loops.push_back(i);
      }
      if (loops.empty()) continue;
      auto [it, fresh] = by_loops.try_emplace(loops, z);
      if (!fresh && std::make_pair(z.size(), z) <
                        std::make_pair(it->second.size(), it->second)) {
        it->second = z;
      }
    }
    periods_.assign(by_loops.begin(), by_loops.end());
  }

  std::optional<Nba> a_;
  std::map<SymbolId, LetterMatrices> letters_;
  std::vector<std::pair<StateSet, Word>> periods_;
};

}  // namespace

std::map<SymbolId, LetterMatrices> letter_matrices(const Nba& a) {
  std::map<SymbolId, LetterMatrices> out;
  const std::size_t n = a.num_states();
  for (SymbolId s = 0; s < a.num_symbols(); ++s) {
    LetterMatrices m{BoundedMatrix(n, 1), BoundedMatrix(n, 2)};
    for (StateId p = 0; p < n; ++p) {
      for (StateId q : a.successors(p, s)) {
        m.transitions.set(p, q, 1);
        m.weighted.set(p, q, a.is_accepting(q) ? 2 : 1);
      }
    }
    out.emplace(s, std::move(m));
  }
  return out;
}

DegreeResult decide_degree_exceeds(const Nba& a, unsigned d) {
  return DegreeSearch(a).exceeds(d);
}

DegreeResult exact_degree(const Nba& a, unsigned max_d) {
  const DegreeSearch search(a);
  std::optional<LassoWord> previous;
  for (unsigned k = 0; k <= max_d; ++k) {
    auto r = search.exceeds(k);
    if (!r.exceeds) {
      DegreeResult out;
      out.exact = k;
      out.witness_lasso = std::move(previous);
      return out;
    }
    previous = std::move(r.witness_lasso);
  }
  throw Error(ErrorCode::ExceedsMax,
              "degree of ambiguity exceeds " + std::to_string(max_d));
}

Nba omega_closure_hash(const Nba& nfa, const std::string& symbol) {
  if (nfa.find_symbol(symbol)) {
    throw Error(ErrorCode::HashSymbolClash,
                "symbol '" + symbol + "' already in the alphabet");
  }
  std::string sink = "q" + symbol;
  while (nfa.find_state(sink)) sink += '\'';

  auto states = nfa.states();
  const auto sink_id = static_cast<StateId>(states.size());
  states.push_back(sink);
  auto alphabet = nfa.alphabet();
  const auto hash = static_cast<SymbolId>(alphabet.size());
  alphabet.push_back(symbol);
  auto transitions = nfa.transitions();
  for (StateId q : nfa.accepting()) transitions.push_back({q, hash, sink_id});
  transitions.push_back({sink_id, hash, sink_id});
  return Nba(std::move(states), std::move(alphabet), std::move(transitions),
             nfa.initial(), {sink_id});
}

}  // namespace ambig
