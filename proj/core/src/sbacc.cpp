#include "dra2dpa/sbacc.hpp"

#include <map>
#include <stdexcept>

namespace dra2dpa {

std::vector<TransitionSet> to_transition_based(const StateMarkedDts& marked) {
  std::vector<std::vector<TransKey>> keys(marked.num_sets);
  const Dts& dts = marked.dts;
  for (StateId s = 0; s < dts.num_states(); ++s) {
    if (s >= marked.state_sets.size()) break;
    for (std::uint32_t set : marked.state_sets[s]) {
      if (set >= marked.num_sets)
        throw std::invalid_argument("state mark outside declared sets");
      for (Letter a = 0; a < dts.alphabet_size(); ++a)
        if (dts.succ(s, a) != kNoState) keys[set].push_back(dts.key(s, a));
    }
  }
  std::vector<TransitionSet> sets;
  sets.reserve(marked.num_sets);
  for (std::vector<TransKey>& k : keys) sets.emplace_back(std::move(k));
  return sets;
}

StateBasedParity to_state_based(const Automaton& parity_aut) {
  if (!parity_aut.is_parity())
    throw std::invalid_argument("state-based conversion requires parity");
  const Dts& dts = parity_aut.dts;
  const ParityAcc& acc = parity_aut.parity();

  Priority initial_priority = kNoPriority;
  for (Priority p : acc.priority)
    if (p != kNoPriority && p < initial_priority) initial_priority = p;
  if (initial_priority == kNoPriority) initial_priority = 1;

  StateBasedParity out;
  out.dts = make_dts(dts.ap_count, 0, 0);
  out.dts.ap_names = dts.ap_names;

  std::map<std::pair<StateId, Priority>, StateId> index;
  std::vector<std::pair<StateId, Priority>> worklist;
  auto intern = [&](StateId s, Priority p) {
    auto [it, inserted] = index.insert({{s, p}, out.dts.num_states()});
    if (inserted) {
      out.dts.add_state();
      out.state_priority.push_back(p);
      if (!dts.state_names.empty()) {
        out.dts.state_names.resize(out.dts.num_states());
        out.dts.state_names.back() = dts.state_name(s);
      }
      worklist.emplace_back(s, p);
    }
    return it->second;
  };

  intern(dts.initial, initial_priority);
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    const auto [s, p] = worklist[next];
    const StateId src = index.at({s, p});
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t == kNoState) continue;
      out.dts.set_succ(src, a, intern(t, acc.priority[dts.key(s, a)]));
    }
  }
  return out;
}

Automaton to_automaton(const StateBasedParity& sb) {
  Automaton out;
  out.dts = sb.dts;
  ParityAcc acc;
  acc.priority.assign(sb.dts.delta.size(), kNoPriority);
  for (StateId s = 0; s < sb.dts.num_states(); ++s)
    for (Letter a = 0; a < sb.dts.alphabet_size(); ++a)
      if (sb.dts.succ(s, a) != kNoState)
        acc.priority[sb.dts.key(s, a)] = sb.state_priority[s];
  out.acceptance = std::move(acc);
  return out;
}

}  // namespace dra2dpa
