#include "ambig/nba.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_set>

#include "ambig/error.hpp"

namespace ambig {

namespace {

StateSet normalized(StateSet set, std::size_t n, const char* what) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (!set.empty() && set.back() >= n) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " set refers to an unknown state");
  }
  return set;
}

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("empty ") + what + " name");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("duplicate ") + what + " '" + name + "'");
    }
  }
}

}  // namespace

SymbolId LassoWord::at(std::size_t i) const {
  if (i < prefix.size()) return prefix[i];
  return period[(i - prefix.size()) % period.size()];
}

Nba::Nba(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::vector<Transition> transitions, StateSet initial,
         StateSet accepting)
    : states_(std::move(states)), alphabet_(std::move(alphabet)) {
  check_unique(states_, "state");
  check_unique(alphabet_, "symbol");
  const std::size_t n = states_.size();
  const std::size_t k = alphabet_.size();
  for (const auto& t : transitions) {
    if (t.src >= n || t.dst >= n || t.sym >= k) {
      throw Error(ErrorCode::InvalidArgument,
                  "transition refers to an unknown state or symbol");
    }
  }
  std::sort(transitions.begin(), transitions.end());
  transitions.erase(std::unique(transitions.begin(), transitions.end()),
                    transitions.end());
  transitions_ = std::move(transitions);
  initial_ = normalized(std::move(initial), n, "initial");
  accepting_ = normalized(std::move(accepting), n, "accepting");

  is_initial_.assign(n, false);
  is_accepting_.assign(n, false);
  for (StateId q : initial_) is_initial_[q] = true;
  for (StateId q : accepting_) is_accepting_[q] = true;

  // Transitions are sorted by (src, sym, dst), so a single pass fills the
  // CSR layout in order.
  offset_.assign(n * k + 1, 0);
  succ_.reserve(transitions_.size());
  std::size_t cursor = 0;
  for (std::size_t slot = 0; slot < n * k; ++slot) {
    offset_[slot] = succ_.size();
    while (cursor < transitions_.size() &&
           transitions_[cursor].src * k + transitions_[cursor].sym == slot) {
      succ_.push_back(transitions_[cursor].dst);
      ++cursor;
    }
  }
  offset_[n * k] = succ_.size();
}

std::optional<StateId> Nba::find_state(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

std::optional<SymbolId> Nba::find_symbol(const std::string& name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) return std::nullopt;
  return static_cast<SymbolId>(it - alphabet_.begin());
}

bool Nba::has_transition(StateId src, SymbolId sym, StateId dst) const {
  auto succ = successors(src, sym);
  return std::binary_search(succ.begin(), succ.end(), dst);
}

std::span<const StateId> Nba::successors(StateId q, SymbolId a) const {
  if (q >= states_.size() || a >= alphabet_.size()) {
    throw std::out_of_range("state or symbol id out of range");
  }
  const std::size_t slot = q * alphabet_.size() + a;
  return {succ_.data() + offset_.at(slot), succ_.data() + offset_.at(slot + 1)};
}

StateSet Nba::successors(const StateSet& from, SymbolId a) const {
  StateSet out;
  for (StateId q : from) {
    auto succ = successors(q, a);
    out.insert(out.end(), succ.begin(), succ.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Nba Nba::with_initial(StateSet initial) const {
  return Nba(states_, alphabet_, transitions_, std::move(initial), accepting_);
}

Nba Nba::with_accepting(StateSet accepting) const {
  return Nba(states_, alphabet_, transitions_, initial_, std::move(accepting));
}

PathWitness::PathWitness(std::vector<StateId> states, Word label)
    : states_(std::move(states)), label_(std::move(label)) {
  if (states_.size() != label_.size() + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "path state sequence must be one longer than its label");
  }
}

std::vector<Transition> PathWitness::transitions() const {
  std::vector<Transition> out;
  out.reserve(label_.size());
  for (std::size_t i = 0; i < label_.size(); ++i) {
    out.push_back({states_[i], label_[i], states_[i + 1]});
  }
  return out;
}

bool PathWitness::valid_in(const Nba& a) const {
  if (states_.empty()) return false;
  for (StateId q : states_) {
    if (q >= a.num_states()) return false;
  }
  for (std::size_t i = 0; i < label_.size(); ++i) {
    if (label_[i] >= a.num_symbols()) return false;
    if (!a.has_transition(states_[i], label_[i], states_[i + 1])) return false;
  }
  return true;
}

PathWitness PathWitness::then(const PathWitness& rest) const {
  if (trg() != rest.src()) {
    throw Error(ErrorCode::InvalidArgument, "paths do not compose");
  }
  std::vector<StateId> states = states_;
  states.insert(states.end(), rest.states_.begin() + 1, rest.states_.end());
  Word label = label_;
  label.insert(label.end(), rest.label_.begin(), rest.label_.end());
  return PathWitness(std::move(states), std::move(label));
}

PathWitness PathWitness::slice(std::size_t from, std::size_t to) const {
  if (from > to || to > label_.size()) {
    throw Error(ErrorCode::InvalidArgument, "path slice out of range");
  }
  return PathWitness(
      std::vector<StateId>(states_.begin() + from, states_.begin() + to + 1),
      Word(label_.begin() + from, label_.begin() + to));
}

StateSet set_union(const StateSet& lhs, const StateSet& rhs) {
  StateSet out;
  std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                 std::back_inserter(out));
  return out;
}

StateSet set_intersection(const StateSet& lhs, const StateSet& rhs) {
  StateSet out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(out));
  return out;
}

StateSet set_difference(const StateSet& lhs, const StateSet& rhs) {
  StateSet out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const StateSet& set, StateId q) {
  return std::binary_search(set.begin(), set.end(), q);
}

bool set_subset(const StateSet& lhs, const StateSet& rhs) {
  return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

}  // namespace ambig
