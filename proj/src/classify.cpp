#include "ambig/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ambig/error.hpp"
#include "ambig/graph.hpp"

namespace ambig {

std::string_view ambiguity_tag_name(AmbiguityTag tag) noexcept {
  switch (tag) {
    case AmbiguityTag::Finite: return "finite";
    case AmbiguityTag::LimitCountablePolynomial:
      return "limit-countable-polynomial";
    case AmbiguityTag::LimitCountableExponential:
      return "limit-countable-exponential";
    case AmbiguityTag::StrictCountable: return "strict-countable";
    case AmbiguityTag::Uncountable: return "uncountable";
  }
  return "?";
}

unsigned compute_dpa(const Nba& a) {
  if (auto eda = find_eda(a, false)) {
    throw Error(ErrorCode::PreconditionViolated,
                "dpa is undefined: " + describe_witness(a, *eda));
  }
  if (auto idaf = find_ida(a, true)) {
    throw Error(ErrorCode::PreconditionViolated,
                "dpa is undefined: " + describe_witness(a, *idaf));
  }
  const auto pairs = ida_pairs(a);
  if (pairs.empty()) {
    throw Error(ErrorCode::PreconditionViolated,
                "dpa is undefined: no IDA pattern (finitely ambiguous)");
  }
  const auto reach = reachability(a);

  // Without EDA the chaining relation is acyclic: a cycle would give q ->* p
  // for some IDA pair (p, q), which yields two distinct cycles at p.
  enum class Mark { Fresh, Active, Done };
  std::vector<Mark> mark(pairs.size(), Mark::Fresh);
  std::vector<unsigned> longest(pairs.size(), 0);
  std::function<unsigned(std::size_t)> chain = [&](std::size_t i) -> unsigned {
    if (mark[i] == Mark::Done) return longest[i];
    if (mark[i] == Mark::Active) {
      throw std::logic_error("IDA pair chain is cyclic despite no EDA");
    }
    mark[i] = Mark::Active;
    unsigned best = 0;
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (reach[pairs[i].second][pairs[j].first]) best = std::max(best, chain(j));
    }
    mark[i] = Mark::Done;
    return longest[i] = best + 1;
  };
  unsigned dpa = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) dpa = std::max(dpa, chain(i));
  return dpa;
}

AmbiguityClass classify(const Nba& a) {
  if (!is_trim(a)) {
    throw Error(ErrorCode::NotTrim,
                "classification requires a trim automaton (use trimming first)");
  }
  if (auto w = find_eda(a, true)) {
    return {AmbiguityTag::Uncountable, std::nullopt, std::move(w)};
  }
  if (auto w = find_ida(a, true)) {
    return {AmbiguityTag::StrictCountable, std::nullopt, std::move(w)};
  }
  if (auto w = find_eda(a, false)) {
    return {AmbiguityTag::LimitCountableExponential, std::nullopt, std::move(w)};
  }
  if (auto w = find_ida(a, false)) {
    return {AmbiguityTag::LimitCountablePolynomial, compute_dpa(a),
            std::move(w)};
  }
  return {AmbiguityTag::Finite, std::nullopt, std::nullopt};
}

}  // namespace ambig
