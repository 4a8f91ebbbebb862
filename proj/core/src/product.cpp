#include "dra2dpa/product.hpp"

#include <map>
#include <stdexcept>

namespace dra2dpa {

TransKey Product::project_a(TransKey key, const Dts& a) const {
  const Letter alpha = dts.alphabet_size();
  return make_key(state_pair[key_source(key, alpha)].first,
                  key_letter(key, alpha), a.alphabet_size());
}

TransKey Product::project_b(TransKey key, const Dts& b) const {
  const Letter alpha = dts.alphabet_size();
  return make_key(state_pair[key_source(key, alpha)].second,
                  key_letter(key, alpha), b.alphabet_size());
}

Product product(const Dts& a, const Dts& b) {
  if (a.ap_count != b.ap_count)
    throw std::invalid_argument("product requires a common alphabet");
  const Letter alpha = a.alphabet_size();

  Product prod;
  prod.dts = make_dts(a.ap_count, 0, 0);
  prod.dts.ap_names = a.ap_names;

  std::map<std::pair<StateId, StateId>, StateId> index;
  std::vector<std::pair<StateId, StateId>> worklist;
  auto intern = [&](StateId s, StateId t) {
    auto [it, inserted] = index.insert({{s, t}, prod.dts.num_states()});
    if (inserted) {
      prod.dts.add_state();
      prod.state_pair.emplace_back(s, t);
      worklist.emplace_back(s, t);
    }
    return it->second;
  };

  intern(a.initial, b.initial);
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    const auto [s, t] = worklist[next];
    const StateId src = index.at({s, t});
    for (Letter l = 0; l < alpha; ++l) {
      const StateId s2 = a.succ(s, l);
      const StateId t2 = b.succ(t, l);
      if (s2 == kNoState || t2 == kNoState) continue;
      prod.dts.set_succ(src, l, intern(s2, t2));
    }
  }
  return prod;
}

namespace {

TransitionSet lift(const Product& prod, const TransitionSet& set,
                   TransKey (Product::*project)(TransKey, const Dts&) const,
                   const Dts& component) {
  std::vector<TransKey> keys;
  const Letter alpha = prod.dts.alphabet_size();
  for (StateId s = 0; s < prod.dts.num_states(); ++s) {
    for (Letter l = 0; l < alpha; ++l) {
      const TransKey key = prod.dts.key(s, l);
      if (prod.dts.delta[key] == kNoState) continue;
      if (set.contains((prod.*project)(key, component))) keys.push_back(key);
    }
  }
  return TransitionSet(std::move(keys));
}

}  // namespace

TransitionSet lift_a(const Product& prod, const Dts& a, const TransitionSet& set) {
  return lift(prod, set, &Product::project_a, a);
}

TransitionSet lift_b(const Product& prod, const Dts& b, const TransitionSet& set) {
  return lift(prod, set, &Product::project_b, b);
}

}  // namespace dra2dpa
