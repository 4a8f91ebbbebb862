#include "dra2dpa/lasso.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace dra2dpa {

TransitionSet lasso_inf_set(const Dts& dts, const LassoWord& word,
                            bool* has_run) {
  if (word.cycle.empty()) throw std::invalid_argument("lasso cycle is empty");
  if (has_run) *has_run = false;

  StateId state = dts.initial;
  for (Letter a : word.prefix) {
    state = dts.succ(state, a);
    if (state == kNoState) return {};
  }

  // Pump the cycle until a (state, cycle position) pair repeats; the
  // transitions between the two occurrences are exactly Inf of the run.
  std::map<std::pair<StateId, std::size_t>, std::size_t> first_seen;
  std::vector<TransKey> taken;
  std::size_t pos = 0;
  for (;;) {
    auto [it, inserted] = first_seen.insert({{state, pos}, taken.size()});
    if (!inserted) {
      if (has_run) *has_run = true;
      return TransitionSet(std::vector<TransKey>(taken.begin() + it->second,
                                                 taken.end()));
    }
    const Letter a = word.cycle[pos];
    const StateId next = dts.succ(state, a);
    if (next == kNoState) return {};
    taken.push_back(dts.key(state, a));
    state = next;
    pos = (pos + 1) % word.cycle.size();
  }
}

bool accepts_inf_set(const Automaton& aut, const TransitionSet& inf) {
  struct Visitor {
    const Automaton& aut;
    const TransitionSet& inf;

    bool operator()(const RabinAcc& acc) const {
      for (const RabinPair& pair : acc.pairs)
        if (!inf.intersects(pair.fin) && inf.intersects(pair.inf)) return true;
      return false;
    }
    bool operator()(const GeneralizedRabinAcc& acc) const {
      for (const GeneralizedRabinPair& pair : acc.pairs) {
        if (inf.intersects(pair.fin)) continue;
        bool all = true;
        for (const TransitionSet& req : pair.infs)
          if (!inf.intersects(req)) {
            all = false;
            break;
          }
        if (all) return true;
      }
      return false;
    }
    bool operator()(const StreettAcc& acc) const {
      for (const RabinPair& pair : acc.pairs)
        if (!inf.intersects(pair.fin) && inf.intersects(pair.inf)) return false;
      return true;
    }
    bool operator()(const ParityAcc& acc) const {
      Priority max = 0;
      bool any = false;
      for (TransKey key : inf.keys()) {
        const Priority p = acc.priority[key];
        if (!any || p > max) max = p;
        any = true;
      }
      return any && max % 2 == 0;
    }
  };
  return std::visit(Visitor{aut, inf}, aut.acceptance);
}

bool accepts_lasso(const Automaton& aut, const LassoWord& word) {
  bool has_run = false;
  const TransitionSet inf = lasso_inf_set(aut.dts, word, &has_run);
  if (!has_run) return false;
  return accepts_inf_set(aut, inf);
}

std::string format_lasso(const Dts& dts, const LassoWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.prefix.size(); ++i) {
    if (i) out += ',';
    out += letter_formula(dts, word.prefix[i]);
  }
  out += ';';
  for (std::size_t i = 0; i < word.cycle.size(); ++i) {
    if (i) out += ',';
    out += letter_formula(dts, word.cycle[i]);
  }
  return out;
}

}  // namespace dra2dpa
