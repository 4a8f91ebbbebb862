#pragma once

#include <cstdint>

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

/// SplitMix64 stream, the documented pseudorandom scheme behind the
/// generator: state advances by the golden-ratio increment
/// 0x9E3779B97F4A7C15 and each output is finalized with the
/// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB avalanche constants.  Instance
/// streams are seeded as seed + (index + 1) * 0x9E3779B97F4A7C15, so a
/// (seed, index) pair fully determines an instance.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in 0..bound-1.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }
  /// Uniform in lo..hi inclusive.
  std::uint32_t in_range(std::uint32_t lo, std::uint32_t hi) {
    return lo + below(hi - lo + 1);
  }
  bool chance(double probability) { return next_unit() < probability; }
};

SplitMix64 instance_rng(std::uint64_t seed, std::uint32_t index);

struct GenParams {
  std::uint32_t min_states = 5;
  std::uint32_t max_states = 15;
  std::uint32_t min_pairs = 2;
  std::uint32_t max_pairs = 3;
  std::uint32_t ap_count = 2;
  /// Probability that a slot beyond the spanning structure carries a
  /// transition; 1.0 yields complete automata.
  double density = 0.1;
  /// Probability that a transition joins each prohibited/required set.
  double acc_probability = 0.2;
  std::uint64_t seed = 0;
  std::uint32_t count = 100;
  /// Required sets per generalized Rabin pair are drawn from 1..max_inf_sets.
  std::uint32_t max_inf_sets = 1;
};

/// Throws std::invalid_argument for empty ranges or probabilities outside
/// [0, 1].
void validate(const GenParams& params);

/// Deterministic Rabin automaton, fully reproducible from (seed, index):
/// a random spanning structure makes every state reachable from state 0,
/// remaining slots are filled with probability `density`, and every
/// transition joins each F_i / I_i independently with `acc_probability`.
Automaton random_dra(const GenParams& params, std::uint32_t index);

/// As random_dra but a random cycle through all states is laid down first,
/// making the automaton strongly connected.
Automaton random_strongly_connected_dra(const GenParams& params,
                                        std::uint32_t index);

/// Generalized Rabin variant; pair i receives 1..max_inf_sets required sets.
Automaton random_dgra(const GenParams& params, std::uint32_t index);

}  // namespace dra2dpa
