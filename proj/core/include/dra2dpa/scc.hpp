#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

struct SccDecomposition {
  /// Components in topological order of the condensation: every transition
  /// goes from a component with smaller-or-equal index to one with
  /// larger-or-equal index.  Only states reachable from the initial state
  /// appear; each component lists its states in ascending order.
  std::vector<std::vector<StateId>> components;
  /// Component index per state; kNoComponent for unreachable states.
  std::vector<std::int32_t> component_of;

  static constexpr std::int32_t kNoComponent = -1;
};

SccDecomposition scc_decompose(const Dts& dts);

/// SCC partition of the subgraph induced by the `present` states, covering
/// every present state regardless of reachability; topological order.
std::vector<std::vector<StateId>> subgraph_sccs(const Dts& dts,
                                                const std::vector<bool>& present);

/// A transient SCC is a singleton without a self-loop; any run passes through
/// it at most once.
bool is_transient(std::span<const StateId> scc, const Dts& dts);

/// True when no transition leaves the component (a bottom SCC).
bool is_bottom(const SccDecomposition& sccs, std::size_t component,
               const Dts& dts);

}  // namespace dra2dpa
