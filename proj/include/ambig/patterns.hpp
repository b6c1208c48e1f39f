#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ambig/nba.hpp"

namespace ambig {

enum class PatternKind { Ida, Eda, IdaF, EdaF };

std::string_view pattern_kind_name(PatternKind kind) noexcept;

struct PatternWitness;
/// One-line human description, e.g. `IDA (q0, q1, a)`.
std::string describe_witness(const Nba& a, const PatternWitness& w);

/// Witness for one of the four ambiguity patterns.
///
/// IDA kinds carry three paths over the same label `v`:
///   paths[0] in P(p, v, p), paths[1] in P(p, v, q), paths[2] in P(q, v, q)
/// with p != q (and q accepting for IdaF).
/// EDA kinds carry two distinct cycles paths[0], paths[1] in P(p, v, p)
/// (p accepting for EdaF).
struct PatternWitness {
  PatternKind kind = PatternKind::Ida;
  StateId p = 0;
  std::optional<StateId> q;
  Word v;
  std::vector<PathWitness> paths;

  bool is_ida() const noexcept {
    return kind == PatternKind::Ida || kind == PatternKind::IdaF;
  }

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// Checks every structural constraint of the witness against `a`: path
/// existence, shared label, endpoints, p != q / distinct cycles, and the
/// accepting condition of the F-kinds.
bool validate_witness(const Nba& a, const PatternWitness& w);

/// EDA search in the self-product. Among all states p (accepting only, when
/// `restrict_accepting`), returns the witness with the shortest label, ties
/// broken by the lexicographically least label and then by p.
std::optional<PatternWitness> find_eda(const Nba& a, bool restrict_accepting);

/// IDA search in the triple product: (p, p, q) ->* (p, q, q) with p != q.
/// Same tie-breaking as `find_eda`, with pairs ordered by (p, q).
std::optional<PatternWitness> find_ida(const Nba& a, bool restrict_accepting);

/// All ordered pairs (p, q), p != q, admitting an IDA pattern, sorted.
std::vector<std::pair<StateId, StateId>> ida_pairs(const Nba& a);

/// Shortest lexicographically least IDA witness for a fixed pair, if any.
std::optional<PatternWitness> ida_witness_for(const Nba& a, StateId p,
                                              StateId q);

/// Rotates an IDA (resp. EDA) witness around an accepting state visited on
/// its third path (resp. either cycle), producing an IdaF (resp. EdaF)
/// witness over the doubled rotated label.
///
/// Throws `Error(NotShiftable)` when no accepting state is visited, and for
/// IDA witnesses when every accepting visit on the third path coincides with
/// the first path being in the same state (the rotated pair would collapse to
/// p' == q').
PatternWitness shift_pattern(const Nba& a, const PatternWitness& w);

/// Builds an IDA witness from an EDA witness by splitting both cycles at
/// their first differing state. The third path of the result visits the EDA
/// state p, so an EdaF input yields an IDA witness visiting an accepting
/// state.
PatternWitness eda_to_ida(const Nba& a, const PatternWitness& w);

}  // namespace ambig
