#include "dra2dpa/emptiness.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "dra2dpa/scc.hpp"

namespace dra2dpa {

namespace {

std::vector<GeneralizedRabinPair> pairs_of(const Automaton& aut) {
  if (aut.is_generalized_rabin()) return aut.generalized_rabin().pairs;
  if (aut.is_rabin()) {
    std::vector<GeneralizedRabinPair> pairs;
    for (const RabinPair& p : aut.rabin().pairs)
      pairs.push_back({p.fin, {p.inf}});
    return pairs;
  }
  throw std::invalid_argument(
      "emptiness check requires a Rabin or generalized Rabin automaton");
}

// Subgraph of the reachable part with the transitions of `fin` removed.
Dts deleted_graph(const Dts& dts, const TransitionSet& fin,
                  const std::vector<bool>& reachable) {
  Dts sub = dts;
  for (StateId s = 0; s < dts.num_states(); ++s) {
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const TransKey key = dts.key(s, a);
      if (dts.delta[key] == kNoState) continue;
      if (!reachable[s] || !reachable[dts.delta[key]] || fin.contains(key))
        sub.delta[key] = kNoState;
    }
  }
  return sub;
}

struct Certificate {
  std::size_t pair_index;
  std::vector<StateId> component;  // states of the certifying SCC
  Dts subgraph;                    // F-deleted graph the SCC lives in
};

std::optional<Certificate> find_certificate(const Automaton& aut) {
  const Dts& dts = aut.dts;
  const std::vector<GeneralizedRabinPair> pairs = pairs_of(aut);

  std::vector<bool> reachable(dts.num_states(), false);
  for (StateId s : bfs_order(dts)) reachable[s] = true;

  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const GeneralizedRabinPair& pair = pairs[pi];
    Dts sub = deleted_graph(dts, pair.fin, reachable);

    // SCCs of the deleted graph over every reachable state, not only states
    // reachable inside the subgraph: the run may cross F transitions finitely
    // often before settling.
    const std::vector<std::vector<StateId>> components =
        subgraph_sccs(sub, reachable);

    for (const std::vector<StateId>& comp : components) {
      std::vector<bool> in_comp(dts.num_states(), false);
      for (StateId s : comp) in_comp[s] = true;

      bool has_cycle = false;
      std::vector<bool> inf_hit(pair.infs.size(), false);
      for (StateId s : comp) {
        for (Letter a = 0; a < sub.alphabet_size(); ++a) {
          const StateId t = sub.succ(s, a);
          if (t == kNoState || !in_comp[t]) continue;
          has_cycle = true;
          const TransKey key = sub.key(s, a);
          for (std::size_t j = 0; j < pair.infs.size(); ++j)
            if (!inf_hit[j] && pair.infs[j].contains(key)) inf_hit[j] = true;
        }
      }
      if (!has_cycle) continue;
      if (std::find(inf_hit.begin(), inf_hit.end(), false) != inf_hit.end())
        continue;
      return Certificate{pi, comp, std::move(sub)};
    }
  }
  return std::nullopt;
}

// Shortest path of letters from `from` to any state satisfying `goal`,
// following only transitions present in `dts`.  Returns the reached state.
std::optional<std::pair<std::vector<Letter>, StateId>> bfs_path(
    const Dts& dts, StateId from, const std::vector<bool>& allowed,
    const std::vector<bool>& goal) {
  std::vector<TransKey> via(dts.num_states(), ~TransKey{0});
  std::vector<bool> seen(dts.num_states(), false);
  std::deque<StateId> queue{from};
  seen[from] = true;
  StateId found = kNoState;
  if (goal[from]) found = from;
  while (found == kNoState && !queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dts.alphabet_size() && found == kNoState; ++a) {
      const StateId t = dts.succ(s, a);
      if (t == kNoState || !allowed[t] || seen[t]) continue;
      seen[t] = true;
      via[t] = dts.key(s, a);
      if (goal[t]) found = t;
      queue.push_back(t);
    }
  }
  if (found == kNoState) return std::nullopt;
  std::vector<Letter> letters;
  for (StateId s = found; s != from;) {
    const TransKey key = via[s];
    letters.push_back(key_letter(key, dts.alphabet_size()));
    s = key_source(key, dts.alphabet_size());
  }
  std::reverse(letters.begin(), letters.end());
  return std::make_pair(std::move(letters), found);
}

}  // namespace

bool gen_rabin_empty(const Automaton& aut) {
  return !find_certificate(aut).has_value();
}

std::optional<LassoWord> gen_rabin_witness(const Automaton& aut) {
  const std::optional<Certificate> cert = find_certificate(aut);
  if (!cert) return std::nullopt;
  const Dts& dts = aut.dts;
  const Dts& sub = cert->subgraph;
  const std::vector<GeneralizedRabinPair> pairs = pairs_of(aut);
  const GeneralizedRabinPair& pair = pairs[cert->pair_index];

  std::vector<bool> in_comp(dts.num_states(), false);
  for (StateId s : cert->component) in_comp[s] = true;

  const StateId anchor = cert->component.front();
  LassoWord word;

  // Prefix may use the full graph, including F transitions.
  std::vector<bool> all(dts.num_states(), true);
  std::vector<bool> goal(dts.num_states(), false);
  goal[anchor] = true;
  auto prefix = bfs_path(dts, dts.initial, all, goal);
  if (!prefix) throw std::logic_error("certifying SCC must be reachable");
  word.prefix = std::move(prefix->first);

  // Cycle: visit one transition of each required set, then return to the
  // anchor, all inside the F-deleted component.
  StateId cur = anchor;
  for (const TransitionSet& req : pair.infs) {
    std::vector<bool> sources(dts.num_states(), false);
    for (TransKey key : req.keys()) {
      const StateId src = key_source(key, sub.alphabet_size());
      const Letter l = key_letter(key, sub.alphabet_size());
      const StateId tgt = sub.succ(src, l);
      if (tgt != kNoState && in_comp[src] && in_comp[tgt]) sources[src] = true;
    }
    auto leg = bfs_path(sub, cur, in_comp, sources);
    if (!leg) throw std::logic_error("required set must be reachable in SCC");
    for (Letter a : leg->first) word.cycle.push_back(a);
    cur = leg->second;
    // Take one transition of the required set from here.
    for (Letter a = 0; a < sub.alphabet_size(); ++a) {
      const StateId t = sub.succ(cur, a);
      if (t == kNoState || !in_comp[t]) continue;
      if (!req.contains(sub.key(cur, a))) continue;
      word.cycle.push_back(a);
      cur = t;
      break;
    }
  }
  std::vector<bool> back(dts.num_states(), false);
  back[anchor] = true;
  auto ret = bfs_path(sub, cur, in_comp, back);
  if (!ret) throw std::logic_error("SCC must close the cycle");
  for (Letter a : ret->first) word.cycle.push_back(a);

  if (word.cycle.empty()) {
    // Possible when every required set shares one self-loop already taken; a
    // pair with zero legs cannot occur, but keep the cycle nonempty anyway.
    for (Letter a = 0; a < sub.alphabet_size(); ++a)
      if (sub.succ(anchor, a) == anchor) {
        word.cycle.push_back(a);
        break;
      }
  }
  return word;
}

Automaton complement_parity(const Automaton& parity_aut) {
  if (!parity_aut.is_parity())
    throw std::invalid_argument("complement requires a parity automaton");
  Automaton out = parity_aut;
  for (Priority& p : out.parity().priority)
    if (p != kNoPriority) ++p;
  return out;
}

}  // namespace dra2dpa
