#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dra2dpa/automaton.hpp"
#include "dra2dpa/permutation.hpp"

namespace dra2dpa {

/// State of the constructed parity automaton: original state plus appearance
/// record over the tracked pair indices.
struct IarState {
  StateId base = 0;
  Permutation record;

  auto operator<=>(const IarState&) const = default;
};

enum class TieBreak {
  /// Indices moved to the front keep their relative order by previous
  /// position.
  kStableOrder,
  /// Among the front-block orderings, prefer one whose successor state has
  /// already been constructed (lexicographically least by previous
  /// positions); fall back to the stable order.
  kPreferExisting,
};

struct IarOptions {
  /// Initial appearance record; identity when absent.
  std::optional<Permutation> initial_record;
  TieBreak tie_break = TieBreak::kStableOrder;
  /// Front-block orderings are only enumerated up to this block size.
  std::uint32_t prefer_existing_max_block = 6;
  /// Hard cap on constructed states.
  std::uint64_t state_budget = 10'000'000;
};

struct IarResult {
  Automaton automaton;           // deterministic parity, reachable part only
  std::vector<IarState> states;  // per output state
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Maximal 1-based position in the record of a pair whose fin or inf set
/// contains the transition (bit i of a mask = pair index i); 0 if none.
std::uint32_t max_ind(std::uint64_t hit_mask, const Permutation& record);

/// Priority emitted for a transition evaluated at the source record:
/// 1 when no tracked pair is hit, 2*maxInd when the maximal hit pair is
/// required-only, 2*maxInd + 1 when its prohibited set is hit.
Priority iar_priority(std::uint64_t fin_mask, std::uint64_t inf_mask,
                      const Permutation& record);

/// Index appearance record translation of a deterministic Rabin automaton
/// into a deterministic parity automaton over priorities 1..2k+1.  Explores
/// only the part reachable from (initial state, initial record); at most
/// n * k! states.
IarResult iar(const Automaton& rabin, const IarOptions& options = {});

/// Streett input translated by reading its pairs as the Rabin condition for
/// the complement language, applying iar and shifting every priority up by
/// one.  Requires a complete automaton.
IarResult streett_to_dpa(const Automaton& streett,
                         const IarOptions& options = {});

/// Display name "q,312" for an output state; the empty record renders as the
/// empty-word symbol.  `pair_labels` optionally renames the tracked pair
/// indices (used when the record tracks a restricted pair subset).
std::string iar_state_name(const Dts& input, const IarState& state,
                           const std::vector<std::uint32_t>* pair_labels = nullptr);

}  // namespace dra2dpa
