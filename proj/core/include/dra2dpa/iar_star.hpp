#pragma once

#include <cstdint>
#include <vector>

#include "dra2dpa/automaton.hpp"
#include "dra2dpa/iar.hpp"

namespace dra2dpa {

/// Output state of the optimized construction.  `tracked` lists the original
/// pair indices in appearance-record order; it is empty for states of
/// transient or otherwise irrelevant SCCs.
struct IarStarState {
  StateId base = 0;
  std::vector<std::uint32_t> tracked;

  auto operator<=>(const IarStarState&) const = default;
};

struct SccContribution {
  std::uint32_t component = 0;      // input SCC index (topological order)
  std::uint32_t input_states = 0;   // |S|
  std::uint32_t tracked_pairs = 0;  // pairs tracked inside this SCC
  std::uint32_t output_states = 0;  // states contributed to the final output
  bool relevant = false;
};

struct IarStarOptions {
  TieBreak tie_break = TieBreak::kStableOrder;
  std::uint32_t prefer_existing_max_block = 6;
  /// Budget per SCC exploration (both the probing run and the final run).
  std::uint64_t state_budget = 10'000'000;
};

struct IarStarResult {
  Automaton automaton;  // deterministic parity, reachable part only
  std::vector<IarStarState> states;
  std::vector<SccContribution> contributions;
};

/// The unique bottom SCC of iar(aut, pi0) for a strongly connected Rabin
/// automaton; it contains every original state among its first components.
/// Throws std::invalid_argument when the input is not strongly connected.
std::vector<IarState> compute_bscc(const Automaton& rabin,
                                   const Permutation& pi0,
                                   std::uint64_t state_budget = 10'000'000);

/// A record placing (entry, record) inside the bottom SCC, so that starting
/// the construction there builds the bottom SCC and nothing else.  Among the
/// candidates the lexicographically least record is returned.
Permutation pick_perm(StateId entry, const Automaton& rabin,
                      std::uint64_t state_budget = 10'000'000);

/// SCC-decomposed translation: every SCC is translated separately with only
/// the pairs whose required set intersects it, using pick_perm for the
/// initial record; transient and never-accepting SCCs collapse to bare
/// states with priority-1 transitions; the pieces are then reconnected and
/// the reachable part returned.
IarStarResult iar_star(const Automaton& rabin, const IarStarOptions& options = {});

}  // namespace dra2dpa
