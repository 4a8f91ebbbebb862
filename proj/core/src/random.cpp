#include "dra2dpa/random.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace dra2dpa {

SplitMix64 instance_rng(std::uint64_t seed, std::uint32_t index) {
  return SplitMix64{seed + (std::uint64_t{index} + 1) * 0x9E3779B97F4A7C15ull};
}

void validate(const GenParams& params) {
  if (params.min_states == 0 || params.min_states > params.max_states)
    throw std::invalid_argument("empty state count range");
  if (params.min_pairs > params.max_pairs)
    throw std::invalid_argument("empty pair count range");
  if (params.ap_count > 8)
    throw std::invalid_argument("too many atomic propositions for generation");
  if (params.density < 0.0 || params.density > 1.0)
    throw std::invalid_argument("density outside [0,1]");
  if (params.acc_probability < 0.0 || params.acc_probability > 1.0)
    throw std::invalid_argument("acceptance probability outside [0,1]");
  if (params.max_inf_sets == 0)
    throw std::invalid_argument("max_inf_sets must be positive");
}

namespace {

Dts random_dts(const GenParams& params, SplitMix64& rng, StateId n,
               bool strongly_connected) {
  Dts dts = make_dts(params.ap_count, n, 0);
  const Letter alpha = dts.alphabet_size();

  if (strongly_connected) {
    // A random cycle through all states keeps the automaton one SCC.
    std::vector<StateId> cycle(n);
    for (StateId i = 0; i < n; ++i) cycle[i] = i;
    for (StateId i = n; i > 1; --i)
      std::swap(cycle[i - 1], cycle[rng.below(i)]);
    for (StateId i = 0; i < n; ++i)
      dts.set_succ(cycle[i], rng.below(alpha), cycle[(i + 1) % n]);
  } else {
    // Spanning structure: each state beyond the first hangs off a free slot
    // of an earlier state, keeping everything reachable from state 0.
    for (StateId s = 1; s < n; ++s) {
      std::vector<TransKey> free_slots;
      for (StateId p = 0; p < s; ++p)
        for (Letter a = 0; a < alpha; ++a)
          if (!dts.has_succ(p, a)) free_slots.push_back(dts.key(p, a));
      const TransKey slot =
          free_slots[rng.below(static_cast<std::uint32_t>(free_slots.size()))];
      dts.delta[slot] = s;
    }
  }

  for (StateId s = 0; s < n; ++s)
    for (Letter a = 0; a < alpha; ++a)
      if (!dts.has_succ(s, a) && rng.chance(params.density))
        dts.set_succ(s, a, rng.below(n));
  return dts;
}

}  // namespace

Automaton random_dra(const GenParams& params, std::uint32_t index) {
  validate(params);
  SplitMix64 rng = instance_rng(params.seed, index);
  const StateId n = rng.in_range(params.min_states, params.max_states);
  const std::uint32_t k = rng.in_range(params.min_pairs, params.max_pairs);
  Dts dts = random_dts(params, rng, n, false);

  RabinAcc acc;
  acc.pairs.resize(k);
  for (TransKey key = 0; key < dts.delta.size(); ++key) {
    if (dts.delta[key] == kNoState) continue;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (rng.chance(params.acc_probability)) acc.pairs[i].fin.insert(key);
      if (rng.chance(params.acc_probability)) acc.pairs[i].inf.insert(key);
    }
  }
  Automaton aut;
  aut.dts = std::move(dts);
  aut.acceptance = std::move(acc);
  validate(aut);
  return aut;
}

Automaton random_strongly_connected_dra(const GenParams& params,
                                        std::uint32_t index) {
  validate(params);
  SplitMix64 rng = instance_rng(params.seed, index);
  const StateId n = rng.in_range(params.min_states, params.max_states);
  const std::uint32_t k = rng.in_range(params.min_pairs, params.max_pairs);
  Dts dts = random_dts(params, rng, n, true);

  RabinAcc acc;
  acc.pairs.resize(k);
  for (TransKey key = 0; key < dts.delta.size(); ++key) {
    if (dts.delta[key] == kNoState) continue;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (rng.chance(params.acc_probability)) acc.pairs[i].fin.insert(key);
      if (rng.chance(params.acc_probability)) acc.pairs[i].inf.insert(key);
    }
  }
  Automaton aut;
  aut.dts = std::move(dts);
  aut.acceptance = std::move(acc);
  validate(aut);
  return aut;
}

Automaton random_dgra(const GenParams& params, std::uint32_t index) {
  validate(params);
  SplitMix64 rng = instance_rng(params.seed, index);
  const StateId n = rng.in_range(params.min_states, params.max_states);
  const std::uint32_t k = rng.in_range(params.min_pairs, params.max_pairs);
  Dts dts = random_dts(params, rng, n, false);

  GeneralizedRabinAcc acc;
  acc.pairs.resize(k);
  for (std::uint32_t i = 0; i < k; ++i)
    acc.pairs[i].infs.resize(rng.in_range(1, params.max_inf_sets));
  for (TransKey key = 0; key < dts.delta.size(); ++key) {
    if (dts.delta[key] == kNoState) continue;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (rng.chance(params.acc_probability)) acc.pairs[i].fin.insert(key);
      for (TransitionSet& inf : acc.pairs[i].infs)
        if (rng.chance(params.acc_probability)) inf.insert(key);
    }
  }
  Automaton aut;
  aut.dts = std::move(dts);
  aut.acceptance = std::move(acc);
  validate(aut);
  return aut;
}

}  // namespace dra2dpa
