#include "dra2dpa/automaton.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace dra2dpa {

TransitionSet::TransitionSet(std::vector<TransKey> keys) : keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

void TransitionSet::insert(TransKey key) {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) keys_.insert(it, key);
}

bool TransitionSet::contains(TransKey key) const {
  return std::binary_search(keys_.begin(), keys_.end(), key);
}

bool TransitionSet::intersects(const TransitionSet& other) const {
  auto a = keys_.begin();
  auto b = other.keys_.begin();
  while (a != keys_.end() && b != other.keys_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

bool Dts::is_complete() const {
  return std::find(delta.begin(), delta.end(), kNoState) == delta.end();
}

std::string Dts::state_name(StateId s) const {
  if (s < state_names.size() && !state_names[s].empty()) return state_names[s];
  return std::to_string(s);
}

Dts make_dts(std::uint32_t ap_count, StateId num_states, StateId initial) {
  Dts dts;
  dts.ap_count = ap_count;
  dts.initial = initial;
  dts.delta.assign(static_cast<std::size_t>(num_states) * dts.alphabet_size(),
                   kNoState);
  return dts;
}

namespace {

void check_set(const TransitionSet& set, const Dts& dts, const char* what) {
  const Letter alpha = dts.alphabet_size();
  for (TransKey key : set.keys()) {
    const StateId src = key_source(key, alpha);
    if (src >= dts.num_states() || dts.delta[key] == kNoState)
      throw std::invalid_argument(std::string(what) +
                                  " refers to a missing transition");
  }
}

}  // namespace

void validate(const Automaton& aut) {
  const Dts& dts = aut.dts;
  const StateId n = dts.num_states();
  if (n == 0) throw std::invalid_argument("automaton has no states");
  if (dts.initial >= n) throw std::invalid_argument("initial state out of range");
  for (StateId target : dts.delta)
    if (target != kNoState && target >= n)
      throw std::invalid_argument("transition target out of range");
  if (!dts.state_names.empty() && dts.state_names.size() != n)
    throw std::invalid_argument("state name table has wrong size");
  if (!dts.ap_names.empty() && dts.ap_names.size() != dts.ap_count)
    throw std::invalid_argument("AP name table has wrong size");

  struct Visitor {
    const Dts& dts;
    void operator()(const RabinAcc& acc) const {
      for (const RabinPair& pair : acc.pairs) {
        check_set(pair.fin, dts, "Rabin fin set");
        check_set(pair.inf, dts, "Rabin inf set");
      }
    }
    void operator()(const GeneralizedRabinAcc& acc) const {
      for (const GeneralizedRabinPair& pair : acc.pairs) {
        if (pair.infs.empty())
          throw std::invalid_argument(
              "generalized Rabin pair without required sets");
        check_set(pair.fin, dts, "generalized Rabin fin set");
        for (const TransitionSet& inf : pair.infs)
          check_set(inf, dts, "generalized Rabin inf set");
      }
    }
    void operator()(const StreettAcc& acc) const {
      for (const RabinPair& pair : acc.pairs) {
        check_set(pair.fin, dts, "Streett fin set");
        check_set(pair.inf, dts, "Streett inf set");
      }
    }
    void operator()(const ParityAcc& acc) const {
      if (acc.priority.size() != dts.delta.size())
        throw std::invalid_argument("priority table has wrong size");
      for (std::size_t key = 0; key < acc.priority.size(); ++key) {
        const bool has_transition = dts.delta[key] != kNoState;
        const bool has_priority = acc.priority[key] != kNoPriority;
        if (has_transition != has_priority)
          throw std::invalid_argument(
              "parity priorities must be assigned exactly on transitions");
      }
    }
  };
  std::visit(Visitor{dts}, aut.acceptance);
}

Priority max_priority(const Automaton& parity_aut) {
  const ParityAcc& acc = parity_aut.parity();
  Priority result = 0;
  for (Priority p : acc.priority)
    if (p != kNoPriority && p > result) result = p;
  return result;
}

std::vector<StateId> bfs_order(const Dts& dts) {
  std::vector<StateId> order;
  if (dts.num_states() == 0) return order;
  std::vector<bool> seen(dts.num_states(), false);
  std::deque<StateId> queue{dts.initial};
  seen[dts.initial] = true;
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

namespace {

TransitionSet remap_set(const TransitionSet& set, const Dts& old_dts,
                        const std::vector<StateId>& new_id,
                        Letter new_alpha) {
  std::vector<TransKey> keys;
  for (TransKey key : set.keys()) {
    const StateId src = key_source(key, old_dts.alphabet_size());
    if (new_id[src] == kNoState) continue;
    keys.push_back(make_key(new_id[src], key_letter(key, old_dts.alphabet_size()),
                            new_alpha));
  }
  return TransitionSet(std::move(keys));
}

AcceptanceCondition remap_acceptance(const AcceptanceCondition& acc,
                                     const Dts& old_dts, const Dts& new_dts,
                                     const std::vector<StateId>& new_id) {
  const Letter alpha = new_dts.alphabet_size();
  struct Visitor {
    const Dts& old_dts;
    const Dts& new_dts;
    const std::vector<StateId>& new_id;
    Letter alpha;

    AcceptanceCondition operator()(const RabinAcc& a) const {
      RabinAcc out;
      for (const RabinPair& p : a.pairs)
        out.pairs.push_back({remap_set(p.fin, old_dts, new_id, alpha),
                             remap_set(p.inf, old_dts, new_id, alpha)});
      return out;
    }
    AcceptanceCondition operator()(const GeneralizedRabinAcc& a) const {
      GeneralizedRabinAcc out;
      for (const GeneralizedRabinPair& p : a.pairs) {
        GeneralizedRabinPair q;
        q.fin = remap_set(p.fin, old_dts, new_id, alpha);
        for (const TransitionSet& inf : p.infs)
          q.infs.push_back(remap_set(inf, old_dts, new_id, alpha));
        out.pairs.push_back(std::move(q));
      }
      return out;
    }
    AcceptanceCondition operator()(const StreettAcc& a) const {
      StreettAcc out;
      for (const RabinPair& p : a.pairs)
        out.pairs.push_back({remap_set(p.fin, old_dts, new_id, alpha),
                             remap_set(p.inf, old_dts, new_id, alpha)});
      return out;
    }
    AcceptanceCondition operator()(const ParityAcc& a) const {
      ParityAcc out;
      out.priority.assign(new_dts.delta.size(), kNoPriority);
      for (StateId s = 0; s < old_dts.num_states(); ++s) {
        if (new_id[s] == kNoState) continue;
        for (Letter l = 0; l < alpha; ++l) {
          const TransKey old_key = old_dts.key(s, l);
          if (old_dts.delta[old_key] == kNoState) continue;
          out.priority[make_key(new_id[s], l, alpha)] = a.priority[old_key];
        }
      }
      return out;
    }
  };
  return std::visit(Visitor{old_dts, new_dts, new_id, alpha}, acc);
}

}  // namespace

Automaton trim(const Automaton& aut) {
  const Dts& dts = aut.dts;
  const std::vector<StateId> order = bfs_order(dts);
  std::vector<StateId> new_id(dts.num_states(), kNoState);
  for (StateId i = 0; i < order.size(); ++i) new_id[order[i]] = i;

  Dts out = make_dts(dts.ap_count, static_cast<StateId>(order.size()), 0);
  out.ap_names = dts.ap_names;
  if (!dts.state_names.empty()) out.state_names.resize(order.size());
  for (StateId i = 0; i < order.size(); ++i) {
    const StateId s = order[i];
    if (!dts.state_names.empty()) out.state_names[i] = dts.state_names[s];
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t != kNoState) out.set_succ(i, a, new_id[t]);
    }
  }
  Automaton result;
  result.dts = std::move(out);
  result.acceptance = remap_acceptance(aut.acceptance, dts, result.dts, new_id);
  result.declared_sets = aut.declared_sets;
  return result;
}

Automaton completed(const Automaton& aut) {
  if (aut.dts.is_complete()) return aut;
  Automaton out = aut;
  Dts& dts = out.dts;
  const Letter alpha = dts.alphabet_size();
  const StateId sink = dts.add_state();
  if (out.is_parity())
    out.parity().priority.resize(dts.delta.size(), kNoPriority);

  std::vector<TransKey> added;
  for (StateId s = 0; s <= sink; ++s) {
    for (Letter a = 0; a < alpha; ++a) {
      if (dts.succ(s, a) != kNoState) continue;
      dts.set_succ(s, a, sink);
      added.push_back(dts.key(s, a));
      if (out.is_parity()) out.parity().priority[dts.key(s, a)] = 1;
    }
  }
  if (out.is_streett()) {
    RabinPair guard;
    guard.inf = TransitionSet(std::move(added));
    std::get<StreettAcc>(out.acceptance).pairs.push_back(std::move(guard));
  }
  return out;
}

RestrictedRabin restrict_to_scc(const Automaton& rabin,
                                std::span<const StateId> scc, StateId entry) {
  if (!rabin.is_rabin())
    throw std::invalid_argument("restriction requires a Rabin automaton");
  const Dts& dts = rabin.dts;
  std::vector<StateId> local(dts.num_states(), kNoState);
  std::vector<StateId> members(scc.begin(), scc.end());
  std::sort(members.begin(), members.end());
  for (StateId i = 0; i < members.size(); ++i) local[members[i]] = i;
  if (entry >= dts.num_states() || local[entry] == kNoState)
    throw std::invalid_argument("entry state is not a member of the SCC");

  RestrictedRabin result;
  result.original_state = members;
  Dts sub = make_dts(dts.ap_count, static_cast<StateId>(members.size()),
                     local[entry]);
  sub.ap_names = dts.ap_names;
  if (!dts.state_names.empty()) sub.state_names.resize(members.size());
  for (StateId i = 0; i < members.size(); ++i) {
    const StateId s = members[i];
    if (!dts.state_names.empty()) sub.state_names[i] = dts.state_names[s];
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId t = dts.succ(s, a);
      if (t != kNoState && local[t] != kNoState) sub.set_succ(i, a, local[t]);
    }
  }

  const Letter alpha = sub.alphabet_size();
  auto restrict_set = [&](const TransitionSet& set) {
    std::vector<TransKey> keys;
    for (TransKey key : set.keys()) {
      const StateId src = key_source(key, dts.alphabet_size());
      const Letter l = key_letter(key, dts.alphabet_size());
      if (local[src] == kNoState) continue;
      if (sub.succ(local[src], l) == kNoState) continue;
      keys.push_back(make_key(local[src], l, alpha));
    }
    return TransitionSet(std::move(keys));
  };

  RabinAcc acc;
  const RabinAcc& pairs = rabin.rabin();
  for (std::uint32_t i = 0; i < pairs.pairs.size(); ++i) {
    TransitionSet inf = restrict_set(pairs.pairs[i].inf);
    if (inf.empty()) continue;
    acc.pairs.push_back({restrict_set(pairs.pairs[i].fin), std::move(inf)});
    result.original_pair.push_back(i);
  }
  result.automaton.dts = std::move(sub);
  result.automaton.acceptance = std::move(acc);
  return result;
}

TransitionSet union_of(const TransitionSet& a, const TransitionSet& b) {
  std::vector<TransKey> keys;
  keys.reserve(a.size() + b.size());
  std::merge(a.keys().begin(), a.keys().end(), b.keys().begin(),
             b.keys().end(), std::back_inserter(keys));
  return TransitionSet(std::move(keys));
}

TransitionSet all_transitions(const Dts& dts) {
  std::vector<TransKey> keys;
  for (TransKey key = 0; key < dts.delta.size(); ++key)
    if (dts.delta[key] != kNoState) keys.push_back(key);
  return TransitionSet(std::move(keys));
}

std::string letter_formula(const Dts& dts, Letter letter) {
  if (dts.ap_count == 0) return "t";
  std::string out;
  for (std::uint32_t i = 0; i < dts.ap_count; ++i) {
    if (!out.empty()) out += " & ";
    if (!(letter & (Letter{1} << i))) out += '!';
    if (i < dts.ap_names.size() && !dts.ap_names[i].empty())
      out += dts.ap_names[i];
    else
      out += 'p' + std::to_string(i);
  }
  return out;
}

}  // namespace dra2dpa
