#pragma once

#include <optional>
#include <string_view>

#include "ambig/nba.hpp"
#include "ambig/patterns.hpp"

namespace ambig {

/// The five pairwise-disjoint ambiguity classes of a trim Buchi automaton.
/// Limit-countable ambiguity splits into the polynomial and exponential tags.
enum class AmbiguityTag {
  Finite,
  LimitCountablePolynomial,
  LimitCountableExponential,
  StrictCountable,
  Uncountable,
};

std::string_view ambiguity_tag_name(AmbiguityTag tag) noexcept;

struct AmbiguityClass {
  AmbiguityTag tag = AmbiguityTag::Finite;
  /// Degree of polynomial ambiguity, present iff the tag is polynomial.
  std::optional<unsigned> dpa;
  /// Pattern justifying the tag; absent iff the tag is Finite.
  std::optional<PatternWitness> witness;
};

/// Length of the longest chain of IDA pairs (p1,q1) ... (pd,qd) with
/// q_j ->* p_{j+1}. Requires no EDA, no IDA_F and at least one IDA pattern;
/// otherwise throws `Error(PreconditionViolated)` naming the pattern.
unsigned compute_dpa(const Nba& a);

/// Decision cascade EDA_F, IDA_F, EDA, IDA over a trim automaton. Throws
/// `Error(NotTrim)` on non-trim input.
AmbiguityClass classify(const Nba& a);

}  // namespace ambig
