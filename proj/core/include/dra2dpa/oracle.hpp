#pragma once

#include <optional>

#include "dra2dpa/automaton.hpp"
#include "dra2dpa/lasso.hpp"

namespace dra2dpa {

/// The automaton's language expressed as a list of generalized Rabin pairs
/// over its own transitions.  Streett conditions expand into up to 2^k pairs
/// and generalized Rabin negations into prod(1 + l_i); both are guarded and
/// throw when the pair count would exceed the oracle limit.
std::vector<GeneralizedRabinPair> to_gen_rabin_pairs(const Automaton& aut);

/// Pairs recognizing the complement language (the automaton must be complete
/// for the complement reading to be sound).
std::vector<GeneralizedRabinPair> negated_gen_rabin_pairs(const Automaton& aut);

/// Product automaton carrying the conjunction of a Rabin condition and a
/// parity condition: the parity side is decomposed into its Rabin chain
/// (per even priority 2m: fin = higher priorities, inf = exactly 2m) and the
/// conjunction is formed pairwise with both required sets kept.
Automaton conjoin_rabin_parity(const Automaton& rabin, const Automaton& parity);

struct EquivalenceResult {
  bool equivalent = false;
  /// A lasso word in the symmetric difference when not equivalent.
  std::optional<LassoWord> witness;
};

/// Exact language equivalence of a Rabin automaton and a parity automaton
/// via two emptiness checks on the product; both sides are completed first.
EquivalenceResult equivalent(const Automaton& rabin, const Automaton& parity);

/// Language equivalence for any two supported automata over the same
/// alphabet.
EquivalenceResult check_equivalent(const Automaton& a, const Automaton& b);

/// First lasso word (prefixes up to `bound`, cycles of length 1..bound, in
/// enumeration order) on which the two automata disagree.
std::optional<LassoWord> find_separating_lasso(const Automaton& a,
                                               const Automaton& b,
                                               std::uint32_t bound);

/// Exhaustively compares acceptance of every lasso word within the bound.
/// Throws when the enumeration would be too large.
bool lasso_equivalence(const Automaton& a, const Automaton& b,
                       std::uint32_t bound);

}  // namespace dra2dpa
