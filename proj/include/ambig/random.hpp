#pragma once

#include <cstdint>

#include "ambig/nba.hpp"

namespace ambig {

/// Reproducible random automaton over states q0..q{n-1} and letters a, b, ...
/// with the single initial state q0.
///
/// Draw order on one mt19937_64 stream: one accepting flag per state, then one
/// inclusion draw per (p, letter, q) in that nesting order. Each draw is the
/// top 53 bits of a 64-bit output scaled to [0, 1), which is identical on
/// every platform. With accept_fraction > 0 the last state is always
/// accepting.
Nba random_nba(std::uint64_t seed, std::size_t num_states,
               std::size_t num_letters, double density,
               double accept_fraction);

}  // namespace ambig
