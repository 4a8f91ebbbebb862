#include "dra2dpa/iar.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "dra2dpa/emptiness.hpp"

namespace dra2dpa {

std::uint32_t max_ind(std::uint64_t hit_mask, const Permutation& record) {
  for (std::uint32_t pos = record.size(); pos > 0; --pos)
    if (hit_mask & (std::uint64_t{1} << record.at(pos - 1))) return pos;
  return 0;
}

Priority iar_priority(std::uint64_t fin_mask, std::uint64_t inf_mask,
                      const Permutation& record) {
  const std::uint32_t m = max_ind(fin_mask | inf_mask, record);
  if (m == 0) return 1;
  const std::uint64_t top = std::uint64_t{1} << record.at(m - 1);
  return (fin_mask & top) ? 2 * m + 1 : 2 * m;
}

namespace {

struct PairMasks {
  std::vector<std::uint64_t> fin;  // per transition key
  std::vector<std::uint64_t> inf;
};

PairMasks build_masks(const Automaton& rabin) {
  const std::size_t k = rabin.rabin().pairs.size();
  if (k > 62)
    throw std::invalid_argument("more Rabin pairs than supported (62)");
  PairMasks masks;
  masks.fin.assign(rabin.dts.delta.size(), 0);
  masks.inf.assign(rabin.dts.delta.size(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (TransKey key : rabin.rabin().pairs[i].fin.keys())
      masks.fin[key] |= std::uint64_t{1} << i;
    for (TransKey key : rabin.rabin().pairs[i].inf.keys())
      masks.inf[key] |= std::uint64_t{1} << i;
  }
  return masks;
}

// Front-block orderings of the visited indices in lexicographic order of
// their previous positions; the first entry is the stable default.
std::vector<std::vector<std::uint32_t>> front_block_orderings(
    const Permutation& record, std::uint64_t visited_mask) {
  std::vector<std::uint32_t> block;
  for (std::uint32_t pos = 0; pos < record.size(); ++pos)
    if (visited_mask & (std::uint64_t{1} << record.at(pos)))
      block.push_back(record.at(pos));  // ascending by previous position
  std::vector<std::vector<std::uint32_t>> orderings;
  std::vector<std::uint32_t> positions(block.size());
  for (std::size_t i = 0; i < block.size(); ++i)
    positions[i] = record.position_of(block[i]);
  // Positions are distinct, so permuting the position sequence in
  // lexicographic order enumerates the block orderings in the required order.
  std::vector<std::size_t> perm(block.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    std::vector<std::uint32_t> ordering(block.size());
    for (std::size_t i = 0; i < perm.size(); ++i) ordering[i] = block[perm[i]];
    orderings.push_back(std::move(ordering));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return orderings;
}

Permutation with_front_block(const Permutation& record,
                             std::uint64_t visited_mask,
                             const std::vector<std::uint32_t>& block) {
  std::vector<std::uint32_t> order(block);
  for (std::uint32_t pos = 0; pos < record.size(); ++pos)
    if (!(visited_mask & (std::uint64_t{1} << record.at(pos))))
      order.push_back(record.at(pos));
  return Permutation(std::move(order));
}

}  // namespace

IarResult iar(const Automaton& rabin, const IarOptions& options) {
  if (!rabin.is_rabin())
    throw std::invalid_argument("iar requires a Rabin automaton");
  const Dts& dts = rabin.dts;
  const std::uint32_t k =
      static_cast<std::uint32_t>(rabin.rabin().pairs.size());
  const PairMasks masks = build_masks(rabin);

  Permutation initial_record = options.initial_record
                                   ? *options.initial_record
                                   : Permutation::identity(k);
  if (initial_record.size() != k)
    throw std::invalid_argument("initial record length does not match pairs");

  IarResult result;
  result.automaton.dts = make_dts(dts.ap_count, 0, 0);
  result.automaton.dts.ap_names = dts.ap_names;
  result.automaton.dts.state_names.clear();
  ParityAcc acc;

  std::map<IarState, StateId> index;
  auto intern = [&](IarState s) {
    auto [it, inserted] = index.insert({s, result.automaton.dts.num_states()});
    if (inserted) {
      if (index.size() > options.state_budget)
        throw BudgetExceeded("iar construction exceeded the state budget");
      result.automaton.dts.add_state();
      result.states.push_back(std::move(s));
    }
    return it->second;
  };

  intern(IarState{dts.initial, initial_record});
  for (StateId next = 0; next < result.automaton.dts.num_states(); ++next) {
    const IarState current = result.states[next];  // copy: vector may grow
    for (Letter a = 0; a < dts.alphabet_size(); ++a) {
      const StateId target = dts.succ(current.base, a);
      if (target == kNoState) continue;
      const TransKey key = dts.key(current.base, a);
      const std::uint64_t move_mask = masks.fin[key];

      Permutation successor_record = move_to_front(current.record, move_mask);
      if (options.tie_break == TieBreak::kPreferExisting &&
          std::popcount(move_mask) >= 2 &&
          std::popcount(move_mask) <=
              static_cast<int>(options.prefer_existing_max_block)) {
        for (const std::vector<std::uint32_t>& block :
             front_block_orderings(current.record, move_mask)) {
          Permutation candidate =
              with_front_block(current.record, move_mask, block);
          if (index.count(IarState{target, candidate})) {
            successor_record = std::move(candidate);
            break;
          }
        }
      }

      const StateId dst = intern(IarState{target, successor_record});
      const Priority priority =
          iar_priority(masks.fin[key], masks.inf[key], current.record);
      result.automaton.dts.set_succ(next, a, dst);
      acc.priority.resize(result.automaton.dts.delta.size(), kNoPriority);
      acc.priority[result.automaton.dts.key(next, a)] = priority;
    }
  }
  acc.priority.resize(result.automaton.dts.delta.size(), kNoPriority);

  result.automaton.dts.state_names.resize(result.automaton.dts.num_states());
  for (StateId s = 0; s < result.automaton.dts.num_states(); ++s)
    result.automaton.dts.state_names[s] = iar_state_name(dts, result.states[s]);
  result.automaton.acceptance = std::move(acc);
  return result;
}

IarResult streett_to_dpa(const Automaton& streett, const IarOptions& options) {
  if (!streett.is_streett())
    throw std::invalid_argument("streett_to_dpa requires a Streett automaton");
  if (!streett.dts.is_complete())
    throw std::invalid_argument(
        "streett_to_dpa requires a complete automaton (complete it first)");
  Automaton as_rabin;
  as_rabin.dts = streett.dts;
  as_rabin.acceptance = RabinAcc{streett.streett().pairs};
  IarResult result = iar(as_rabin, options);
  result.automaton = complement_parity(result.automaton);
  return result;
}

std::string iar_state_name(const Dts& input, const IarState& state,
                           const std::vector<std::uint32_t>* pair_labels) {
  std::string name = input.state_name(state.base);
  name += ',';
  if (state.record.empty()) return name + "\xCE\xB5";  // epsilon
  if (!pair_labels) return name + state.record.to_string();
  bool dotted = false;
  for (std::uint32_t label : *pair_labels)
    if (label + 1 > 9) dotted = true;
  for (std::uint32_t pos = 0; pos < state.record.size(); ++pos) {
    if (dotted && pos) name += '.';
    name += std::to_string((*pair_labels)[state.record.at(pos)] + 1);
  }
  return name;
}

}  // namespace dra2dpa
