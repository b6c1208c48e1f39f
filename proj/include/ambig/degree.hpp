#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ambig/bounded_matrix.hpp"
#include "ambig/nba.hpp"

namespace ambig {

/// T_a (path counts, bound 1) and A_a (2 for an accepting target, 1 for any
/// other target, bound 2) for one letter, indexed by state id.
struct LetterMatrices {
  BoundedMatrix transitions;
  BoundedMatrix weighted;
};

std::map<SymbolId, LetterMatrices> letter_matrices(const Nba& a);

struct DegreeResult {
  bool exceeds = false;
  std::optional<unsigned> exact;
  /// For `decide_degree_exceeds`: a lasso with more than d runs. For
  /// `exact_degree`: a lasso with exactly `exact` runs (absent when 0).
  std::optional<LassoWord> witness_lasso;
};

/// Decides whether some word has more than `d` accepting runs. Requires the
/// trimmed automaton to be finitely ambiguous (`Error(PreconditionViolated)`
/// names the blocking pattern otherwise); an empty language has degree 0.
///
/// Searches two-phase lassos x z^omega breadth-first: saturated row vectors
/// over x, then saturated (T_z, A_z) pairs over z. The witness minimizes
/// (|x| + |z|, x, z).
DegreeResult decide_degree_exceeds(const Nba& a, unsigned d);

/// Least k <= max_d with no word having more than k runs, by linear search.
/// Throws `Error(ExceedsMax)` when the degree is larger than `max_d`.
DegreeResult exact_degree(const Nba& a, unsigned max_d);

/// NBA accepting w #^omega for every w accepted by `nfa` read over finite
/// words, with the same number of runs. Adds the fresh symbol and a fresh
/// accepting sink state looping on it. Throws `Error(HashSymbolClash)` if the
/// symbol is already in the alphabet.
Nba omega_closure_hash(const Nba& nfa, const std::string& symbol = "#");

}  // namespace ambig
