#pragma once

#include <string>
#include <vector>

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

/// Ultimately periodic word prefix . cycle^omega; the cycle is nonempty.
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> cycle;

  bool operator==(const LassoWord&) const = default;
};

/// Runs the automaton on the lasso word and evaluates its acceptance
/// condition on the set of transitions visited infinitely often.  A word
/// without a run (partial transition function) is rejected.
bool accepts_lasso(const Automaton& aut, const LassoWord& word);

/// Transitions taken infinitely often by the unique run on the word, or an
/// empty set when the run does not exist.
TransitionSet lasso_inf_set(const Dts& dts, const LassoWord& word,
                            bool* has_run = nullptr);

/// Evaluates an acceptance condition against a set of infinitely visited
/// transitions.
bool accepts_inf_set(const Automaton& aut, const TransitionSet& inf);

std::string format_lasso(const Dts& dts, const LassoWord& word);

}  // namespace dra2dpa
