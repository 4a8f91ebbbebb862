#pragma once

#include <utility>
#include <vector>

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

/// Synchronized product of two deterministic transition systems over the same
/// alphabet, restricted to the reachable pairs.  A product transition exists
/// iff both component transitions do.
struct Product {
  Dts dts;
  std::vector<std::pair<StateId, StateId>> state_pair;  // product -> (a, b)

  TransKey project_a(TransKey key, const Dts& a) const;
  TransKey project_b(TransKey key, const Dts& b) const;
};

Product product(const Dts& a, const Dts& b);

/// Product transitions whose projection onto the first (second) component
/// lies in the given set.
TransitionSet lift_a(const Product& prod, const Dts& a, const TransitionSet& set);
TransitionSet lift_b(const Product& prod, const Dts& b, const TransitionSet& set);

}  // namespace dra2dpa
