#include "support.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "ambig/classify.hpp"
#include "ambig/degree.hpp"
#include "ambig/error.hpp"
#include "ambig/graph.hpp"
#include "ambig/io.hpp"
#include "ambig/oracle.hpp"
#include "ambig/random.hpp"

namespace ambig::test {

std::string fixture_path(const std::string& name) {
  return std::string(AMBIG_FIXTURE_DIR) + "/" + name + ".nba";
}

Nba fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_automaton(text.str());
}

namespace {

std::optional<Nba> trimmed(const Nba& a) {
  try {
    return trim_nba(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EmptyLanguage) throw;
    return std::nullopt;
  }
}

}  // namespace

const std::vector<CorpusEntry>& trim_corpus() {
  static const auto corpus = [] {
    std::vector<CorpusEntry> out;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t n = 1 + seed % 6;
      for (std::uint64_t attempt = 0;; ++attempt) {
        const std::uint64_t s = attempt == 0 ? seed : seed * 1000 + attempt;
        if (auto a = trimmed(random_nba(s, n, 2, 0.35, 0.4))) {
          out.push_back({s, std::move(*a)});
          break;
        }
      }
    }
    return out;
  }();
  return corpus;
}

const std::vector<CorpusEntry>& finite_corpus() {
  // Half unambiguous, half of degree >= 2; plain random draws are almost all
  // unambiguous. Bucketing only picks which automata get checked.
  static const auto corpus = [] {
    std::vector<CorpusEntry> one, more;
    for (std::uint64_t seed = 0; one.size() < 60 || more.size() < 60; ++seed) {
      const std::size_t n = 3 + seed % 3;
      auto a = trimmed(random_nba(10000 + seed, n, 2, 0.3, 0.4));
      if (!a || classify(*a).tag != AmbiguityTag::Finite) continue;
      auto& bucket = decide_degree_exceeds(*a, 1).exceeds ? more : one;
      if (bucket.size() < 60) bucket.push_back({10000 + seed, std::move(*a)});
    }
    one.insert(one.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
    return one;
  }();
  return corpus;
}

const std::vector<CorpusEntry>& nfa_corpus() {
  static const auto corpus = [] {
    std::vector<CorpusEntry> out;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      out.push_back({20000 + seed,
                     random_nba(20000 + seed, 1 + seed % 5, 2, 0.35, 0.4)});
    }
    return out;
  }();
  return corpus;
}

std::vector<Word> words_of_length(std::size_t num_symbols, std::size_t length) {
  std::vector<Word> out{{}};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<Word> next;
    for (const auto& w : out) {
      for (SymbolId s = 0; s < num_symbols; ++s) {
        next.push_back(w);
        next.back().push_back(s);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::uint64_t max_lasso_count(const Nba& a, std::size_t max_u,
                              std::size_t max_v) {
  std::uint64_t best = 0;
  for (const auto& w : lasso_sweep(a.num_symbols(), max_u, max_v)) {
    const auto c = count_runs(a, w);
    if (!c.is_finite()) return std::numeric_limits<std::uint64_t>::max();
    best = std::max(best, c.count);
  }
  return best;
}

bool brute_eda(const Nba& a, bool restrict_accepting, std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& v : words_of_length(a.num_symbols(), len)) {
      for (StateId p = 0; p < a.num_states(); ++p) {
        if (restrict_accepting && !a.is_accepting(p)) continue;
        if (enumerate_paths(a, {p}, v, {p}).size() >= 2) return true;
      }
    }
  }
  return false;
}

bool brute_ida(const Nba& a, bool restrict_accepting, std::size_t max_len) {
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& v : words_of_length(a.num_symbols(), len)) {
      for (StateId p = 0; p < a.num_states(); ++p) {
        if (enumerate_paths(a, {p}, v, {p}).empty()) continue;
        for (StateId q = 0; q < a.num_states(); ++q) {
          if (q == p || (restrict_accepting && !a.is_accepting(q))) continue;
          if (!enumerate_paths(a, {q}, v, {q}).empty() &&
              !enumerate_paths(a, {p}, v, {q}).empty()) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

}  // namespace ambig::test
