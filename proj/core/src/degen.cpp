#include "dra2dpa/degen.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace dra2dpa {

Automaton degeneralize(const Automaton& gen_rabin) {
  if (!gen_rabin.is_generalized_rabin())
    throw std::invalid_argument(
        "degeneralize requires a generalized Rabin automaton");
  const Dts& dts = gen_rabin.dts;
  const Letter alpha = dts.alphabet_size();
  const std::vector<GeneralizedRabinPair>& pairs =
      gen_rabin.generalized_rabin().pairs;
  const std::size_t k = pairs.size();

  using Counters = std::vector<std::uint32_t>;  // counter i in 0..l_i-1
  using ProductState = std::pair<StateId, Counters>;

  Dts out = make_dts(dts.ap_count, 0, 0);
  out.ap_names = dts.ap_names;
  std::vector<ProductState> expanded;
  std::map<ProductState, StateId> index;
  auto intern = [&](ProductState s) {
    auto [it, inserted] = index.insert({s, out.num_states()});
    if (inserted) {
      out.add_state();
      expanded.push_back(std::move(s));
    }
    return it->second;
  };

  std::vector<std::vector<TransKey>> fin_keys(k);
  std::vector<std::vector<TransKey>> inf_keys(k);

  intern({dts.initial, Counters(k, 0)});
  for (StateId next = 0; next < out.num_states(); ++next) {
    const ProductState current = expanded[next];  // copy: vector may grow
    for (Letter a = 0; a < alpha; ++a) {
      const StateId target = dts.succ(current.first, a);
      if (target == kNoState) continue;
      const TransKey key = dts.key(current.first, a);

      Counters counters = current.second;
      for (std::size_t i = 0; i < k; ++i) {
        if (!pairs[i].infs[counters[i]].contains(key)) continue;
        counters[i] = (counters[i] + 1) % pairs[i].infs.size();
        if (counters[i] == 0) inf_keys[i].push_back(make_key(next, a, alpha));
      }
      for (std::size_t i = 0; i < k; ++i)
        if (pairs[i].fin.contains(key))
          fin_keys[i].push_back(make_key(next, a, alpha));

      out.set_succ(next, a, intern({target, std::move(counters)}));
    }
  }

  if (!dts.state_names.empty()) {
    out.state_names.resize(out.num_states());
    for (StateId s = 0; s < out.num_states(); ++s) {
      std::string name = dts.state_name(expanded[s].first);
      for (std::uint32_t c : expanded[s].second)
        name += ':' + std::to_string(c + 1);
      out.state_names[s] = name;
    }
  }

  RabinAcc acc;
  for (std::size_t i = 0; i < k; ++i)
    acc.pairs.push_back({TransitionSet(std::move(fin_keys[i])),
                         TransitionSet(std::move(inf_keys[i]))});

  Automaton result;
  result.dts = std::move(out);
  result.acceptance = std::move(acc);
  return result;
}

}  // namespace dra2dpa
