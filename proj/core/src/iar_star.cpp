#include "dra2dpa/iar_star.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dra2dpa/scc.hpp"

namespace dra2dpa {

namespace {

bool strongly_connected(const Dts& dts) {
  const SccDecomposition d = scc_decompose(dts);
  return d.components.size() == 1 &&
         d.components.front().size() == dts.num_states();
}

std::string star_state_name(const Dts& input, const IarStarState& state) {
  std::string name = input.state_name(state.base);
  name += ',';
  if (state.tracked.empty()) return name + "\xCE\xB5";  // epsilon
  bool dotted = false;
  for (std::uint32_t label : state.tracked)
    if (label + 1 > 9) dotted = true;
  for (std::size_t i = 0; i < state.tracked.size(); ++i) {
    if (dotted && i) name += '.';
    name += std::to_string(state.tracked[i] + 1);
  }
  return name;
}

}  // namespace

std::vector<IarState> compute_bscc(const Automaton& rabin,
                                   const Permutation& pi0,
                                   std::uint64_t state_budget) {
  if (!strongly_connected(rabin.dts))
    throw std::invalid_argument("compute_bscc requires a strongly connected input");
  IarOptions options;
  options.initial_record = pi0;
  options.state_budget = state_budget;
  const IarResult result = iar(rabin, options);

  const SccDecomposition d = scc_decompose(result.automaton.dts);
  std::vector<std::size_t> bottoms;
  for (std::size_t c = 0; c < d.components.size(); ++c)
    if (is_bottom(d, c, result.automaton.dts)) bottoms.push_back(c);
  if (bottoms.size() != 1)
    throw std::logic_error("expected exactly one bottom SCC");

  std::vector<IarState> bscc;
  for (StateId s : d.components[bottoms.front()])
    bscc.push_back(result.states[s]);
  std::sort(bscc.begin(), bscc.end());
  return bscc;
}

Permutation pick_perm(StateId entry, const Automaton& rabin,
                      std::uint64_t state_budget) {
  const std::uint32_t k =
      static_cast<std::uint32_t>(rabin.rabin().pairs.size());
  if (k <= 1) return Permutation::identity(k);

  const std::vector<IarState> bscc =
      compute_bscc(rabin, Permutation::identity(k), state_budget);
  const Permutation* best = nullptr;
  for (const IarState& s : bscc) {
    if (s.base != entry) continue;
    if (!best || s.record < *best) best = &s.record;
  }
  if (!best) throw std::logic_error("bottom SCC misses the entry state");
  return *best;
}

IarStarResult iar_star(const Automaton& rabin, const IarStarOptions& options) {
  if (!rabin.is_rabin())
    throw std::invalid_argument("iar_star requires a Rabin automaton");
  const Dts& dts = rabin.dts;
  const Letter alpha = dts.alphabet_size();
  const SccDecomposition sccs = scc_decompose(dts);

  // Discovery order decides the starting state picked inside each SCC.
  std::vector<std::uint32_t> discovery(dts.num_states(), 0xFFFFFFFFu);
  {
    const std::vector<StateId> order = bfs_order(dts);
    for (std::uint32_t i = 0; i < order.size(); ++i) discovery[order[i]] = i;
  }

  Dts out = make_dts(dts.ap_count, 0, 0);
  std::vector<Priority> priority;
  std::vector<IarStarState> states;
  std::vector<std::int32_t> state_component;  // input SCC per output state
  std::vector<std::vector<StateId>> outputs_of_base(dts.num_states());
  std::vector<SccContribution> contributions(sccs.components.size());

  auto add_state = [&](IarStarState s, std::int32_t component) {
    const StateId id = out.add_state();
    outputs_of_base[s.base].push_back(id);
    states.push_back(std::move(s));
    state_component.push_back(component);
    return id;
  };
  auto set_edge = [&](StateId src, Letter a, StateId dst, Priority p) {
    out.set_succ(src, a, dst);
    priority.resize(out.delta.size(), kNoPriority);
    priority[out.key(src, a)] = p;
  };

  for (std::size_t c = 0; c < sccs.components.size(); ++c) {
    const std::vector<StateId>& members = sccs.components[c];
    const std::int32_t comp = static_cast<std::int32_t>(c);

    std::vector<std::uint32_t> tracked;
    {
      TransitionSet internal;
      for (StateId s : members)
        for (Letter a = 0; a < alpha; ++a) {
          const StateId t = dts.succ(s, a);
          if (t != kNoState && sccs.component_of[t] == comp)
            internal.insert(dts.key(s, a));
        }
      for (std::uint32_t i = 0; i < rabin.rabin().pairs.size(); ++i)
        if (rabin.rabin().pairs[i].inf.intersects(internal)) tracked.push_back(i);
    }

    const bool relevant = !is_transient(members, dts) && !tracked.empty();
    contributions[c].component = static_cast<std::uint32_t>(c);
    contributions[c].input_states = static_cast<std::uint32_t>(members.size());
    contributions[c].tracked_pairs =
        relevant ? static_cast<std::uint32_t>(tracked.size()) : 0;
    contributions[c].relevant = relevant;

    if (!relevant) {
      std::map<StateId, StateId> local;
      for (StateId q : members)
        local[q] = add_state(IarStarState{q, {}}, comp);
      for (StateId q : members)
        for (Letter a = 0; a < alpha; ++a) {
          const StateId t = dts.succ(q, a);
          if (t != kNoState && sccs.component_of[t] == comp)
            set_edge(local[q], a, local[t], 1);
        }
      continue;
    }

    StateId entry = members.front();
    for (StateId q : members)
      if (discovery[q] < discovery[entry]) entry = q;

    const RestrictedRabin sub = restrict_to_scc(rabin, members, entry);
    IarOptions iar_options;
    iar_options.initial_record =
        pick_perm(sub.automaton.dts.initial, sub.automaton, options.state_budget);
    iar_options.tie_break = options.tie_break;
    iar_options.prefer_existing_max_block = options.prefer_existing_max_block;
    iar_options.state_budget = options.state_budget;
    const IarResult piece = iar(sub.automaton, iar_options);

    const StateId offset = out.num_states();
    for (const IarState& s : piece.states) {
      IarStarState star;
      star.base = sub.original_state[s.base];
      for (std::uint32_t pos = 0; pos < s.record.size(); ++pos)
        star.tracked.push_back(sub.original_pair[s.record.at(pos)]);
      add_state(std::move(star), comp);
    }
    const Dts& piece_dts = piece.automaton.dts;
    for (StateId s = 0; s < piece_dts.num_states(); ++s)
      for (Letter a = 0; a < alpha; ++a) {
        const StateId t = piece_dts.succ(s, a);
        if (t != kNoState)
          set_edge(offset + s, a, offset + t,
                   piece.automaton.parity().priority[piece_dts.key(s, a)]);
      }
  }

  // Connect the SCCs: inter-SCC transitions target the representative with
  // the lexicographically least record and carry the neutral odd priority.
  for (StateId os = 0; os < out.num_states(); ++os) {
    const StateId q = states[os].base;
    for (Letter a = 0; a < alpha; ++a) {
      const StateId t = dts.succ(q, a);
      if (t == kNoState || sccs.component_of[t] == state_component[os]) continue;
      StateId best = kNoState;
      for (StateId candidate : outputs_of_base[t])
        if (best == kNoState || states[candidate].tracked < states[best].tracked)
          best = candidate;
      set_edge(os, a, best, 1);
    }
  }
  priority.resize(out.delta.size(), kNoPriority);

  // The initial state is the entry of the initial state's SCC construction.
  {
    StateId initial_out = kNoState;
    for (StateId candidate : outputs_of_base[dts.initial]) {
      if (!sccs.components.empty() &&
          state_component[candidate] == sccs.component_of[dts.initial]) {
        initial_out = candidate;
        break;  // per-SCC construction starts at its entry state
      }
    }
    out.initial = initial_out;
  }

  // Trim to the reachable part, renumbering in discovery order.
  IarStarResult result;
  const std::vector<StateId> order = bfs_order(out);
  std::vector<StateId> new_id(out.num_states(), kNoState);
  for (StateId i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  result.automaton.dts = make_dts(dts.ap_count, static_cast<StateId>(order.size()), 0);
  result.automaton.dts.ap_names = dts.ap_names;
  result.automaton.dts.state_names.resize(order.size());
  ParityAcc acc;
  acc.priority.assign(result.automaton.dts.delta.size(), kNoPriority);
  result.states.resize(order.size());
  std::vector<std::int32_t> trimmed_component(order.size());
  for (StateId i = 0; i < order.size(); ++i) {
    const StateId s = order[i];
    result.states[i] = states[s];
    trimmed_component[i] = state_component[s];
    result.automaton.dts.state_names[i] = star_state_name(dts, states[s]);
    for (Letter a = 0; a < alpha; ++a) {
      const StateId t = out.succ(s, a);
      if (t == kNoState) continue;
      result.automaton.dts.set_succ(i, a, new_id[t]);
      acc.priority[result.automaton.dts.key(i, a)] = priority[out.key(s, a)];
    }
  }
  result.automaton.acceptance = std::move(acc);

  for (std::int32_t c : trimmed_component) ++contributions[c].output_states;
  result.contributions = std::move(contributions);
  return result;
}

}  // namespace dra2dpa
