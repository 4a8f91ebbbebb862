#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace dra2dpa {

using StateId = std::uint32_t;
using Letter = std::uint32_t;
using Priority = std::uint32_t;

inline constexpr StateId kNoState = 0xFFFFFFFFu;
inline constexpr Priority kNoPriority = 0xFFFFFFFFu;

/// A transition is identified by its (source, letter) key; the target is
/// implied by determinism.
using TransKey = std::uint64_t;

inline TransKey make_key(StateId source, Letter letter, Letter alphabet_size) {
  return static_cast<TransKey>(source) * alphabet_size + letter;
}
inline StateId key_source(TransKey key, Letter alphabet_size) {
  return static_cast<StateId>(key / alphabet_size);
}
inline Letter key_letter(TransKey key, Letter alphabet_size) {
  return static_cast<Letter>(key % alphabet_size);
}

/// Set of transitions of one automaton, kept as sorted unique keys.
class TransitionSet {
 public:
  TransitionSet() = default;
  explicit TransitionSet(std::vector<TransKey> keys);

  void insert(TransKey key);
  bool contains(TransKey key) const;
  bool intersects(const TransitionSet& other) const;
  bool empty() const { return keys_.empty(); }
  std::size_t size() const { return keys_.size(); }
  const std::vector<TransKey>& keys() const { return keys_; }

  bool operator==(const TransitionSet&) const = default;

 private:
  std::vector<TransKey> keys_;
};

/// Deterministic transition system over the alphabet 2^AP.  Letters are the
/// canonical minterm indices 0 .. 2^ap_count - 1 where bit i of a letter gives
/// the truth value of atomic proposition i.  The transition function may be
/// partial; absent entries are kNoState.
struct Dts {
  std::uint32_t ap_count = 0;
  StateId initial = 0;
  std::vector<StateId> delta;            // num_states * alphabet_size entries
  std::vector<std::string> state_names;  // optional, empty or one per state
  std::vector<std::string> ap_names;     // optional, empty or one per AP

  Letter alphabet_size() const { return Letter{1} << ap_count; }
  StateId num_states() const {
    return static_cast<StateId>(delta.size() / alphabet_size());
  }

  StateId succ(StateId s, Letter a) const { return delta[key(s, a)]; }
  void set_succ(StateId s, Letter a, StateId t) { delta[key(s, a)] = t; }
  TransKey key(StateId s, Letter a) const {
    return make_key(s, a, alphabet_size());
  }
  bool has_succ(StateId s, Letter a) const { return succ(s, a) != kNoState; }

  StateId add_state() {
    delta.resize(delta.size() + alphabet_size(), kNoState);
    if (!state_names.empty()) state_names.emplace_back();
    return num_states() - 1;
  }

  bool is_complete() const;
  std::string state_name(StateId s) const;
};

Dts make_dts(std::uint32_t ap_count, StateId num_states, StateId initial = 0);

/// Rabin pair: a run is accepted by the pair when it visits `fin` finitely
/// often and `inf` infinitely often.
struct RabinPair {
  TransitionSet fin;
  TransitionSet inf;

  bool operator==(const RabinPair&) const = default;
};

struct GeneralizedRabinPair {
  TransitionSet fin;
  std::vector<TransitionSet> infs;  // nonempty list

  bool operator==(const GeneralizedRabinPair&) const = default;
};

struct RabinAcc {
  std::vector<RabinPair> pairs;
  bool operator==(const RabinAcc&) const = default;
};

struct GeneralizedRabinAcc {
  std::vector<GeneralizedRabinPair> pairs;
  bool operator==(const GeneralizedRabinAcc&) const = default;
};

/// Streett condition over the same pair shape as Rabin, read as the
/// conjunction over pairs of (Inf(fin_i) or Fin(inf_i)) -- exactly the
/// negation of the Rabin condition with identical sets.
struct StreettAcc {
  std::vector<RabinPair> pairs;
  bool operator==(const StreettAcc&) const = default;
};

/// Max-even parity: a run is accepted iff the maximum priority among the
/// transitions visited infinitely often is even.  `priority` is parallel to
/// Dts::delta and must be assigned exactly on the existing transitions.
struct ParityAcc {
  std::vector<Priority> priority;
  bool operator==(const ParityAcc&) const = default;
};

using AcceptanceCondition =
    std::variant<RabinAcc, GeneralizedRabinAcc, StreettAcc, ParityAcc>;

struct Automaton {
  Dts dts;
  AcceptanceCondition acceptance;
  // Acceptance set count as declared by an HOA source; zero for automata
  // built programmatically (emission recomputes the count it needs).
  std::uint32_t declared_sets = 0;

  bool is_rabin() const { return std::holds_alternative<RabinAcc>(acceptance); }
  bool is_generalized_rabin() const {
    return std::holds_alternative<GeneralizedRabinAcc>(acceptance);
  }
  bool is_streett() const {
    return std::holds_alternative<StreettAcc>(acceptance);
  }
  bool is_parity() const {
    return std::holds_alternative<ParityAcc>(acceptance);
  }

  const RabinAcc& rabin() const { return std::get<RabinAcc>(acceptance); }
  const GeneralizedRabinAcc& generalized_rabin() const {
    return std::get<GeneralizedRabinAcc>(acceptance);
  }
  const StreettAcc& streett() const { return std::get<StreettAcc>(acceptance); }
  const ParityAcc& parity() const { return std::get<ParityAcc>(acceptance); }
  ParityAcc& parity() { return std::get<ParityAcc>(acceptance); }
};

/// Throws std::invalid_argument when structural invariants are violated:
/// dangling transition targets, acceptance sets referring to missing
/// transitions, parity priorities not matching the transition structure,
/// generalized Rabin pairs without required sets.
void validate(const Automaton& aut);

/// Maximum priority used by a parity automaton, or 0 when it has no
/// transitions.
Priority max_priority(const Automaton& parity_aut);

/// States in BFS discovery order from the initial state (letters in ascending
/// order); unreachable states are absent.
std::vector<StateId> bfs_order(const Dts& dts);

/// Restriction of the automaton to the reachable part, states renumbered in
/// BFS discovery order.  Acceptance sets and names are remapped.
Automaton trim(const Automaton& aut);

/// Language-preserving completion.  Adds a rejecting sink when the transition
/// function is partial: the sink carries no set memberships for Rabin and
/// generalized Rabin, priority 1 for parity, and for Streett a fresh guard
/// pair (fin = empty, inf = the added transitions) keeps the diverted runs
/// rejected.  Complete automata are returned unchanged.
Automaton completed(const Automaton& aut);

/// Result of restricting a Rabin automaton to an SCC: states are renumbered
/// to 0..|scc|-1 and only the pairs whose required set intersects the
/// internal transitions are kept, each intersected with them.
struct RestrictedRabin {
  Automaton automaton;
  std::vector<StateId> original_state;        // local state -> original state
  std::vector<std::uint32_t> original_pair;   // local pair -> original pair
};

/// R restricted to `scc` with initial state `entry`; throws when entry is not
/// a member or the automaton is not Rabin.
RestrictedRabin restrict_to_scc(const Automaton& rabin,
                                std::span<const StateId> scc, StateId entry);

TransitionSet union_of(const TransitionSet& a, const TransitionSet& b);

/// Every transition present in the system.
TransitionSet all_transitions(const Dts& dts);

/// Minterm formula of a letter over the AP names ("!a & b"); used by the DOT
/// and HOA printers and for witness output.
std::string letter_formula(const Dts& dts, Letter letter);

}  // namespace dra2dpa
