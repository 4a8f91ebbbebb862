#include "dra2dpa/oracle.hpp"

#include <stdexcept>

#include "dra2dpa/emptiness.hpp"
#include "dra2dpa/product.hpp"

namespace dra2dpa {

namespace {

constexpr std::size_t kMaxOraclePairs = 4096;

std::vector<GeneralizedRabinPair> parity_chain_pairs(const Automaton& aut) {
  const ParityAcc& acc = aut.parity();
  const Priority top = max_priority(aut);
  std::vector<GeneralizedRabinPair> pairs;
  for (Priority even = 0; even <= top; even += 2) {
    GeneralizedRabinPair pair;
    std::vector<TransKey> fin, inf;
    for (TransKey key = 0; key < acc.priority.size(); ++key) {
      if (acc.priority[key] == kNoPriority) continue;
      if (acc.priority[key] == even) inf.push_back(key);
      if (acc.priority[key] > even) fin.push_back(key);
    }
    if (inf.empty()) continue;  // pair can never fire
    pair.fin = TransitionSet(std::move(fin));
    pair.infs.push_back(TransitionSet(std::move(inf)));
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

// Conjunction of per-pair alternatives "Inf(F_i) or Fin(I_i^{j})", expanded
// into disjunctive generalized Rabin form.  `alternatives[i]` lists the Fin
// choices for conjunct i; `inf_part[i]` is its Inf choice.
std::vector<GeneralizedRabinPair> expand_conjunction(
    const Dts& dts, const std::vector<TransitionSet>& inf_part,
    const std::vector<std::vector<TransitionSet>>& fin_choices) {
  const std::size_t k = inf_part.size();
  std::size_t count = 1;
  for (const std::vector<TransitionSet>& choices : fin_choices) {
    count *= 1 + choices.size();
    if (count > kMaxOraclePairs)
      throw std::runtime_error("oracle expansion exceeds the pair limit");
  }

  const TransitionSet everything = all_transitions(dts);
  std::vector<GeneralizedRabinPair> pairs;
  std::vector<std::size_t> choice(k, 0);  // 0 = Inf branch, j+1 = Fin choice j
  for (;;) {
    GeneralizedRabinPair pair;
    for (std::size_t i = 0; i < k; ++i) {
      if (choice[i] == 0)
        pair.infs.push_back(inf_part[i]);
      else
        pair.fin = union_of(pair.fin, fin_choices[i][choice[i] - 1]);
    }
    if (pair.infs.empty()) pair.infs.push_back(everything);
    pairs.push_back(std::move(pair));

    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++choice[i] <= fin_choices[i].size()) break;
      choice[i] = 0;
    }
    if (i == k) break;  // k == 0 yields the single always-true pair
  }
  return pairs;
}

}  // namespace

std::vector<GeneralizedRabinPair> to_gen_rabin_pairs(const Automaton& aut) {
  if (aut.is_rabin()) {
    std::vector<GeneralizedRabinPair> pairs;
    for (const RabinPair& p : aut.rabin().pairs) pairs.push_back({p.fin, {p.inf}});
    return pairs;
  }
  if (aut.is_generalized_rabin()) return aut.generalized_rabin().pairs;
  if (aut.is_parity()) return parity_chain_pairs(aut);
  // Streett: conjunction of (Inf(fin_i) or Fin(inf_i)).
  std::vector<TransitionSet> inf_part;
  std::vector<std::vector<TransitionSet>> fin_choices;
  for (const RabinPair& p : aut.streett().pairs) {
    inf_part.push_back(p.fin);
    fin_choices.push_back({p.inf});
  }
  return expand_conjunction(aut.dts, inf_part, fin_choices);
}

std::vector<GeneralizedRabinPair> negated_gen_rabin_pairs(const Automaton& aut) {
  if (aut.is_parity()) return parity_chain_pairs(complement_parity(aut));
  if (aut.is_streett()) {
    // Negated Streett is the Rabin condition over the same pairs.
    std::vector<GeneralizedRabinPair> pairs;
    for (const RabinPair& p : aut.streett().pairs)
      pairs.push_back({p.fin, {p.inf}});
    return pairs;
  }
  if (aut.is_rabin()) {
    // Negated Rabin is Streett over the same pairs.
    std::vector<TransitionSet> inf_part;
    std::vector<std::vector<TransitionSet>> fin_choices;
    for (const RabinPair& p : aut.rabin().pairs) {
      inf_part.push_back(p.fin);
      fin_choices.push_back({p.inf});
    }
    return expand_conjunction(aut.dts, inf_part, fin_choices);
  }
  // Generalized Rabin: conjunction of (Inf(F_i) or Fin(I_i^1) or ...).
  std::vector<TransitionSet> inf_part;
  std::vector<std::vector<TransitionSet>> fin_choices;
  for (const GeneralizedRabinPair& p : aut.generalized_rabin().pairs) {
    inf_part.push_back(p.fin);
    fin_choices.push_back(p.infs);
  }
  return expand_conjunction(aut.dts, inf_part, fin_choices);
}

namespace {

std::vector<GeneralizedRabinPair> conjoin_pairs(
    const std::vector<GeneralizedRabinPair>& left,
    const std::vector<GeneralizedRabinPair>& right) {
  if (left.size() * right.size() > kMaxOraclePairs)
    throw std::runtime_error("oracle conjunction exceeds the pair limit");
  std::vector<GeneralizedRabinPair> pairs;
  for (const GeneralizedRabinPair& a : left) {
    for (const GeneralizedRabinPair& b : right) {
      GeneralizedRabinPair pair;
      pair.fin = union_of(a.fin, b.fin);
      pair.infs = a.infs;
      pair.infs.insert(pair.infs.end(), b.infs.begin(), b.infs.end());
      pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

std::vector<GeneralizedRabinPair> lift_pairs(
    const Product& prod, const Dts& component,
    const std::vector<GeneralizedRabinPair>& pairs, bool first_component) {
  std::vector<GeneralizedRabinPair> lifted;
  for (const GeneralizedRabinPair& p : pairs) {
    GeneralizedRabinPair q;
    q.fin = first_component ? lift_a(prod, component, p.fin)
                            : lift_b(prod, component, p.fin);
    for (const TransitionSet& inf : p.infs)
      q.infs.push_back(first_component ? lift_a(prod, component, inf)
                                       : lift_b(prod, component, inf));
    lifted.push_back(std::move(q));
  }
  return lifted;
}

// Product carrying L(x) intersected with the complement of L(y); both inputs
// must already be complete.
Automaton difference_automaton(const Automaton& x, const Automaton& y) {
  const Product prod = product(x.dts, y.dts);
  const std::vector<GeneralizedRabinPair> keep =
      lift_pairs(prod, x.dts, to_gen_rabin_pairs(x), true);
  const std::vector<GeneralizedRabinPair> avoid =
      lift_pairs(prod, y.dts, negated_gen_rabin_pairs(y), false);
  Automaton out;
  out.dts = prod.dts;
  out.acceptance = GeneralizedRabinAcc{conjoin_pairs(keep, avoid)};
  return out;
}

}  // namespace

Automaton conjoin_rabin_parity(const Automaton& rabin, const Automaton& parity) {
  if (!rabin.is_rabin() || !parity.is_parity())
    throw std::invalid_argument("conjoin_rabin_parity kind mismatch");
  const Product prod = product(rabin.dts, parity.dts);
  const std::vector<GeneralizedRabinPair> left =
      lift_pairs(prod, rabin.dts, to_gen_rabin_pairs(rabin), true);
  const std::vector<GeneralizedRabinPair> right =
      lift_pairs(prod, parity.dts, to_gen_rabin_pairs(parity), false);
  Automaton out;
  out.dts = prod.dts;
  out.acceptance = GeneralizedRabinAcc{conjoin_pairs(left, right)};
  return out;
}

EquivalenceResult check_equivalent(const Automaton& a, const Automaton& b) {
  if (a.dts.ap_count != b.dts.ap_count)
    throw std::invalid_argument("equivalence check requires a common alphabet");
  const Automaton ca = completed(a);
  const Automaton cb = completed(b);
  if (auto witness = gen_rabin_witness(difference_automaton(ca, cb)))
    return {false, std::move(witness)};
  if (auto witness = gen_rabin_witness(difference_automaton(cb, ca)))
    return {false, std::move(witness)};
  return {true, std::nullopt};
}

EquivalenceResult equivalent(const Automaton& rabin, const Automaton& parity) {
  if (!rabin.is_rabin())
    throw std::invalid_argument("equivalent: first automaton must be Rabin");
  if (!parity.is_parity())
    throw std::invalid_argument("equivalent: second automaton must be parity");
  return check_equivalent(rabin, parity);
}

std::optional<LassoWord> find_separating_lasso(const Automaton& a,
                                               const Automaton& b,
                                               std::uint32_t bound) {
  if (a.dts.ap_count != b.dts.ap_count)
    throw std::invalid_argument("lasso comparison requires a common alphabet");
  const std::uint64_t alpha = a.dts.alphabet_size();
  std::uint64_t words = 0;  // sum over lengths of alpha^len
  std::uint64_t power = 1;
  for (std::uint32_t len = 1; len <= bound; ++len) {
    power *= alpha;
    words += power;
    if (words > (std::uint64_t{1} << 26))
      throw std::invalid_argument("lasso enumeration bound too large");
  }
  if (a.dts.num_states() > 4096 || b.dts.num_states() > 4096)
    throw std::invalid_argument("lasso oracle requires small automata");

  auto next_word = [&](std::vector<Letter>& word) {
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (++word[i] < alpha) return true;
      word[i] = 0;
    }
    return false;
  };

  LassoWord lasso;
  for (std::uint32_t plen = 0; plen <= bound; ++plen) {
    lasso.prefix.assign(plen, 0);
    do {
      for (std::uint32_t clen = 1; clen <= bound; ++clen) {
        lasso.cycle.assign(clen, 0);
        do {
          if (accepts_lasso(a, lasso) != accepts_lasso(b, lasso)) return lasso;
        } while (next_word(lasso.cycle));
      }
    } while (next_word(lasso.prefix));
  }
  return std::nullopt;
}

bool lasso_equivalence(const Automaton& a, const Automaton& b,
                       std::uint32_t bound) {
  return !find_separating_lasso(a, b, bound).has_value();
}

}  // namespace dra2dpa
