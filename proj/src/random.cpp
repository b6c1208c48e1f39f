#include "ambig/random.hpp"

#include <random>
#include <string>

#include "ambig/error.hpp"

namespace ambig {

Nba random_nba(std::uint64_t seed, std::size_t num_states,
               std::size_t num_letters, double density,
               double accept_fraction) {
  if (num_states == 0 || num_letters == 0 || num_letters > 26) {
    throw Error(ErrorCode::InvalidArgument,
                "need at least one state and 1..26 letters");
  }
  if (!(density >= 0.0 && density <= 1.0) ||
      !(accept_fraction >= 0.0 && accept_fraction <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument,
                "density and accept fraction must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // std::uniform_real_distribution is implementation-defined; this is not.
  auto draw = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::string> states;
  for (std::size_t i = 0; i < num_states; ++i) {
    states.push_back("q" + std::to_string(i));
  }
  std::vector<std::string> alphabet;
  for (std::size_t i = 0; i < num_letters; ++i) {
    alphabet.push_back(std::string(1, static_cast<char>('a' + i)));
  }
  StateSet accepting;
  for (StateId q = 0; q < num_states; ++q) {
    const bool forced = accept_fraction > 0.0 && q + 1 == num_states;
    if (draw() < accept_fraction || forced) accepting.push_back(q);
  }
  std::vector<Transition> transitions;
  for (StateId p = 0; p < num_states; ++p) {
    for (SymbolId a = 0; a < num_letters; ++a) {
      for (StateId q = 0; q < num_states; ++q) {
        if (draw() < density) transitions.push_back({p, a, q});
      }
    }
  }
  return Nba(std::move(states), std::move(alphabet), std::move(transitions),
             {0}, std::move(accepting));
}

}  // namespace ambig
