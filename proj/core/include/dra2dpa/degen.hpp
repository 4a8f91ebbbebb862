#pragma once

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

/// De-generalizes a generalized Rabin automaton into a Rabin automaton by
/// composing the transition system with one modulo-l_i round-robin counter
/// per pair: counter i advances past index j exactly when a transition of
/// I_i^j is taken while the counter shows j (strictly one step per
/// transition).  Pair i of the output keeps the lifted F_i and requires the
/// transitions on which counter i wraps around.  At most n * prod(l_i)
/// reachable states; language preserved.
Automaton degeneralize(const Automaton& gen_rabin);

}  // namespace dra2dpa
