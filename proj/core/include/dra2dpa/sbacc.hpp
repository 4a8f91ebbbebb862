#pragma once

#include <cstdint>
#include <vector>

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

/// Transition system together with acceptance-set membership recorded on
/// states, as found in state-based HOA input.
struct StateMarkedDts {
  Dts dts;
  std::vector<std::vector<std::uint32_t>> state_sets;  // marks per state
  std::uint32_t num_sets = 0;
};

/// Pushes every state's set memberships onto its outgoing transitions.  A run
/// visits a state infinitely often iff it takes outgoing transitions of that
/// state infinitely often, so the language is preserved for any condition
/// over the resulting sets.
std::vector<TransitionSet> to_transition_based(const StateMarkedDts& marked);

/// State-based parity automaton: every state carries one priority.
struct StateBasedParity {
  Dts dts;
  std::vector<Priority> state_priority;
};

/// Splits states by incoming priority so that acceptance can be read off
/// states.  The initial copy gets the minimum used priority.  At most
/// |Q| * #priorities states; language preserved.
StateBasedParity to_state_based(const Automaton& parity_aut);

/// Reads a state-based parity automaton back as a transition-based one, each
/// state's priority copied onto its outgoing transitions.
Automaton to_automaton(const StateBasedParity& sb);

}  // namespace dra2dpa
