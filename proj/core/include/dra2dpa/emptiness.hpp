#pragma once

#include <optional>

#include "dra2dpa/automaton.hpp"
#include "dra2dpa/lasso.hpp"

namespace dra2dpa {

/// Emptiness for Rabin and generalized Rabin automata.  The language is
/// nonempty iff for some pair <F, {I_j}> the graph with the F transitions
/// deleted has a reachable SCC that contains a cycle and whose internal
/// transitions meet every I_j.
bool gen_rabin_empty(const Automaton& aut);

/// As gen_rabin_empty, but produces an accepted lasso word when the language
/// is nonempty: a shortest path into the certifying SCC followed by a cycle
/// that covers one transition of every required set while staying inside it.
std::optional<LassoWord> gen_rabin_witness(const Automaton& aut);

/// Same transition system, every priority incremented by one.  For complete
/// automata this recognizes exactly the complement language.
Automaton complement_parity(const Automaton& parity_aut);

}  // namespace dra2dpa
