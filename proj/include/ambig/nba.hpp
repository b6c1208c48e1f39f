#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ambig {

/// Index of a state in declaration order.
using StateId = std::uint32_t;
/// Index of a symbol in declaration order.
using SymbolId = std::uint32_t;

/// Finite symbol sequence over an automaton's alphabet.
using Word = std::vector<SymbolId>;

/// Sorted, duplicate-free set of states.
using StateSet = std::vector<StateId>;

struct Transition {
  StateId src;
  SymbolId sym;
  StateId dst;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Ultimately periodic word prefix . period^omega.
struct LassoWord {
  Word prefix;
  Word period;  // never empty

  std::size_t size() const noexcept { return prefix.size() + period.size(); }
  /// Symbol at position i of the infinite word.
  SymbolId at(std::size_t i) const;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
};

/// Finite automaton read either as an NFA (finite words) or as a Buchi
/// automaton (infinite words). Immutable after construction.
///
/// States and symbols are opaque tokens; their declaration order is the
/// canonical order used everywhere (serialization, witness tie-breaking,
/// matrix indexing).
class Nba {
 public:
  Nba() = default;

  /// Validates the invariants and throws `Error(InvalidArgument)` on
  /// duplicate names or out-of-range ids. Duplicate transitions collapse.
  Nba(std::vector<std::string> states, std::vector<std::string> alphabet,
      std::vector<Transition> transitions, StateSet initial,
      StateSet accepting);

  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_symbols() const noexcept { return alphabet_.size(); }
  /// |A| = |Delta|.
  std::size_t size() const noexcept { return transitions_.size(); }

  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& state_name(StateId q) const { return states_.at(q); }
  const std::string& symbol_name(SymbolId a) const { return alphabet_.at(a); }
  std::optional<StateId> find_state(const std::string& name) const;
  std::optional<SymbolId> find_symbol(const std::string& name) const;

  /// Sorted by (src, sym, dst).
  const std::vector<Transition>& transitions() const noexcept {
    return transitions_;
  }
  const StateSet& initial() const noexcept { return initial_; }
  const StateSet& accepting() const noexcept { return accepting_; }

  bool is_initial(StateId q) const { return is_initial_.at(q); }
  bool is_accepting(StateId q) const { return is_accepting_.at(q); }
  bool has_transition(StateId src, SymbolId sym, StateId dst) const;

  /// Delta(q, a), sorted.
  std::span<const StateId> successors(StateId q, SymbolId a) const;
  /// Delta(P, a), sorted.
  StateSet successors(const StateSet& from, SymbolId a) const;

  /// Copy with a different initial set (A[S]).
  Nba with_initial(StateSet initial) const;
  Nba with_accepting(StateSet accepting) const;

  friend bool operator==(const Nba& lhs, const Nba& rhs) {
    return lhs.states_ == rhs.states_ && lhs.alphabet_ == rhs.alphabet_ &&
           lhs.transitions_ == rhs.transitions_ &&
           lhs.initial_ == rhs.initial_ && lhs.accepting_ == rhs.accepting_;
  }

 private:
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::vector<Transition> transitions_;
  StateSet initial_;
  StateSet accepting_;
  std::vector<bool> is_initial_;
  std::vector<bool> is_accepting_;
  // successors of (q, a) are succ_[offset_[q * |Sigma| + a] .. offset_[.. + 1])
  std::vector<std::size_t> offset_;
  std::vector<StateId> succ_;
};

/// A finite path: a chain of transitions starting in `source`.
/// The empty path at q has no steps.
class PathWitness {
 public:
  PathWitness() = default;
  /// Throws `Error(InvalidArgument)` when `states.size() != label.size() + 1`.
  PathWitness(std::vector<StateId> states, Word label);

  static PathWitness empty_at(StateId q) { return PathWitness({q}, {}); }

  StateId src() const { return states_.front(); }
  StateId trg() const { return states_.back(); }
  const Word& label() const noexcept { return label_; }
  /// st(pi): one more entry than the label.
  const std::vector<StateId>& state_sequence() const noexcept { return states_; }
  std::size_t length() const noexcept { return label_.size(); }
  std::vector<Transition> transitions() const;

  /// True iff every step is a transition of `a`.
  bool valid_in(const Nba& a) const;

  /// Concatenation; requires `trg() == rest.src()`.
  PathWitness then(const PathWitness& rest) const;
  /// Sub-path covering steps [from, to).
  PathWitness slice(std::size_t from, std::size_t to) const;

  friend auto operator<=>(const PathWitness&, const PathWitness&) = default;

 private:
  std::vector<StateId> states_;
  Word label_;
};

/// Set helpers on sorted state vectors.
StateSet set_union(const StateSet& lhs, const StateSet& rhs);
StateSet set_intersection(const StateSet& lhs, const StateSet& rhs);
StateSet set_difference(const StateSet& lhs, const StateSet& rhs);
bool set_contains(const StateSet& set, StateId q);
bool set_subset(const StateSet& lhs, const StateSet& rhs);

}  // namespace ambig
