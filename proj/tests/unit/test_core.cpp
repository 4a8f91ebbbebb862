#include <doctest.h>

#include <set>
#include <stdexcept>

#include "dra2dpa/automaton.hpp"
#include "dra2dpa/permutation.hpp"
#include "dra2dpa/random.hpp"
#include "dra2dpa/scc.hpp"
#include "support/figures.hpp"

using namespace dra2dpa;
using testsupport::fig1;
using testsupport::fig2;
using testsupport::fig3;
using testsupport::kA;
using testsupport::kB;

TEST_CASE("transition sets are ordered sets over (source, letter) keys") {
  TransitionSet set;
  set.insert(5);
  set.insert(1);
  set.insert(5);
  CHECK(set.size() == 2);
  CHECK(set.contains(1));
  CHECK(!set.contains(2));
  TransitionSet other(std::vector<TransKey>{2, 5});
  CHECK(set.intersects(other));
  CHECK(union_of(set, other).size() == 3);
  CHECK(!TransitionSet{}.intersects(set));
}

TEST_CASE("validate rejects structural breakage") {
  Automaton aut = fig1();
  CHECK_NOTHROW(validate(aut));

  Automaton bad_target = aut;
  bad_target.dts.delta[0] = 17;
  CHECK_THROWS_AS(validate(bad_target), std::invalid_argument);

  Automaton loose_set = aut;
  std::get<RabinAcc>(loose_set.acceptance).pairs[0].fin.insert(
      loose_set.dts.key(2, kA) + 100);
  CHECK_THROWS_AS(validate(loose_set), std::invalid_argument);

  Automaton no_req = aut;
  GeneralizedRabinAcc gacc;
  gacc.pairs.push_back({TransitionSet{}, {}});
  no_req.acceptance = gacc;
  CHECK_THROWS_AS(validate(no_req), std::invalid_argument);
}

TEST_CASE("completion adds a rejecting sink only when needed") {
  const Automaton aut = fig1();  // complete already
  CHECK(aut.dts.is_complete());
  CHECK(completed(aut).dts.num_states() == aut.dts.num_states());

  Automaton partial = aut;
  partial.dts.delta[partial.dts.key(2, kA)] = kNoState;
  std::get<RabinAcc>(partial.acceptance).pairs[1].fin =
      TransitionSet{};  // drop sets referring to removed transition
  CHECK(!partial.dts.is_complete());
  const Automaton full = completed(partial);
  CHECK(full.dts.is_complete());
  CHECK(full.dts.num_states() == aut.dts.num_states() + 1);
  CHECK_NOTHROW(validate(full));
}

TEST_CASE("scc decomposition matches the worked examples") {
  const SccDecomposition one = scc_decompose(fig1().dts);
  REQUIRE(one.components.size() == 1);
  CHECK(one.components[0] == std::vector<StateId>{0, 1, 2});

  const SccDecomposition two = scc_decompose(fig3().dts);
  REQUIRE(two.components.size() == 2);
  CHECK(two.components[0] == std::vector<StateId>{0});
  CHECK(two.components[1] == std::vector<StateId>{1, 2});

  Dts lonely = make_dts(1, 1, 0);
  const SccDecomposition single = scc_decompose(lonely);
  REQUIRE(single.components.size() == 1);
  CHECK(is_transient(single.components[0], lonely));
}

TEST_CASE("transience needs a singleton without self-loop") {
  const Automaton aut = fig3();
  const SccDecomposition sccs = scc_decompose(aut.dts);
  CHECK(!is_transient(sccs.components[0], aut.dts));  // p has a self-loop
  CHECK(!is_transient(sccs.components[1], aut.dts));  // two states
}

TEST_CASE("scc decomposition agrees with brute-force mutual reachability") {
  GenParams params;
  params.min_states = 2;
  params.max_states = 8;
  params.ap_count = 1;
  params.density = 0.3;
  params.seed = 11;
  for (std::uint32_t index = 0; index < 40; ++index) {
    const Automaton aut = random_dra(params, index);
    const StateId n = aut.dts.num_states();
    // reachable-from relation
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (StateId s = 0; s < n; ++s) reach[s][s] = true;
    for (bool changed = true; changed;) {
      changed = false;
      for (StateId s = 0; s < n; ++s)
        for (Letter a = 0; a < aut.dts.alphabet_size(); ++a) {
          const StateId t = aut.dts.succ(s, a);
          if (t == kNoState) continue;
          for (StateId u = 0; u < n; ++u)
            if (reach[t][u] && !reach[s][u]) {
              reach[s][u] = true;
              changed = true;
            }
        }
    }
    const SccDecomposition sccs = scc_decompose(aut.dts);
    // partition covers exactly the reachable states
    for (StateId s = 0; s < n; ++s) {
      const bool reachable = reach[aut.dts.initial][s];
      CHECK((sccs.component_of[s] != SccDecomposition::kNoComponent) ==
            reachable);
    }
    // states share a component iff mutually reachable
    for (StateId s = 0; s < n; ++s)
      for (StateId t = 0; t < n; ++t) {
        if (sccs.component_of[s] == SccDecomposition::kNoComponent) continue;
        if (sccs.component_of[t] == SccDecomposition::kNoComponent) continue;
        CHECK((sccs.component_of[s] == sccs.component_of[t]) ==
              (reach[s][t] && reach[t][s]));
      }
    // returned order is topological
    for (StateId s = 0; s < n; ++s) {
      if (sccs.component_of[s] == SccDecomposition::kNoComponent) continue;
      for (Letter a = 0; a < aut.dts.alphabet_size(); ++a) {
        const StateId t = aut.dts.succ(s, a);
        if (t != kNoState)
          CHECK(sccs.component_of[s] <= sccs.component_of[t]);
      }
    }
  }
}

TEST_CASE("restriction keeps only pairs whose required set survives") {
  const Automaton aut = fig3();

  SUBCASE("SCC {q, r} entered at q tracks only pair 2") {
    const RestrictedRabin sub =
        restrict_to_scc(aut, std::vector<StateId>{1, 2}, 1);
    REQUIRE(sub.original_pair == std::vector<std::uint32_t>{1});
    REQUIRE(sub.automaton.rabin().pairs.size() == 1);
    const Dts& dts = sub.automaton.dts;
    CHECK(dts.num_states() == 2);
    CHECK(dts.initial == 0);  // q is the smaller member
    const RabinPair& pair = sub.automaton.rabin().pairs[0];
    CHECK(pair.fin.keys() ==
          std::vector<TransKey>{dts.key(0, kA)});  // q -a-> r
    CHECK(pair.inf.size() == 2);  // q -b-> q and r -b-> q
    CHECK(pair.inf.contains(dts.key(0, kB)));
    CHECK(pair.inf.contains(dts.key(1, kB)));
  }

  SUBCASE("SCC {p} keeps only pair 1 with empty prohibited part") {
    const RestrictedRabin sub =
        restrict_to_scc(aut, std::vector<StateId>{0}, 0);
    REQUIRE(sub.original_pair == std::vector<std::uint32_t>{0});
    const RabinPair& pair = sub.automaton.rabin().pairs[0];
    CHECK(pair.fin.empty());
    CHECK(pair.inf.keys() ==
          std::vector<TransKey>{sub.automaton.dts.key(0, kA)});
  }

  SUBCASE("restriction to everything is the identity") {
    const Automaton whole = fig1();  // both required sets nonempty
    const RestrictedRabin sub =
        restrict_to_scc(whole, std::vector<StateId>{0, 1, 2}, 0);
    CHECK(sub.automaton.dts.delta == whole.dts.delta);
    CHECK(sub.automaton.rabin() == whole.rabin());
    CHECK(sub.original_pair == std::vector<std::uint32_t>{0, 1});
  }

  SUBCASE("entry must belong to the component") {
    CHECK_THROWS_AS(restrict_to_scc(aut, std::vector<StateId>{1, 2}, 0),
                    std::invalid_argument);
  }
}

TEST_CASE("runs that stay inside an SCC accept like the restricted automaton") {
  GenParams params;
  params.min_states = 3;
  params.max_states = 7;
  params.min_pairs = 1;
  params.max_pairs = 3;
  params.ap_count = 1;
  params.density = 0.4;
  params.acc_probability = 0.3;
  params.seed = 5150;
  SplitMix64 rng{22};
  std::uint32_t cycles_checked = 0;
  for (std::uint32_t index = 0; index < 60; ++index) {
    const Automaton aut = random_dra(params, index);
    const SccDecomposition sccs = scc_decompose(aut.dts);
    for (std::size_t c = 0; c < sccs.components.size(); ++c) {
      const std::vector<StateId>& members = sccs.components[c];
      if (is_transient(members, aut.dts)) continue;
      const StateId anchor = members[rng.below(
          static_cast<std::uint32_t>(members.size()))];

      // random walk inside the SCC, then close the cycle back to the anchor
      std::vector<Letter> cycle;
      StateId cur = anchor;
      for (int step = 0; step < 8; ++step) {
        std::vector<Letter> stay;
        for (Letter a = 0; a < aut.dts.alphabet_size(); ++a) {
          const StateId t = aut.dts.succ(cur, a);
          if (t != kNoState &&
              sccs.component_of[t] == static_cast<std::int32_t>(c))
            stay.push_back(a);
        }
        const Letter a = stay[rng.below(static_cast<std::uint32_t>(stay.size()))];
        cycle.push_back(a);
        cur = aut.dts.succ(cur, a);
      }
      while (cur != anchor && cycle.size() <= 400) {
        // random walk inside the SCC reaches the anchor eventually
        std::vector<Letter> stay;
        for (Letter a = 0; a < aut.dts.alphabet_size(); ++a) {
          const StateId t = aut.dts.succ(cur, a);
          if (t != kNoState &&
              sccs.component_of[t] == static_cast<std::int32_t>(c))
            stay.push_back(a);
        }
        const Letter a = stay[rng.below(static_cast<std::uint32_t>(stay.size()))];
        cycle.push_back(a);
        cur = aut.dts.succ(cur, a);
      }
      if (cur != anchor) continue;  // walk failed to close, skip

      // prefix from the initial state to the anchor
      std::vector<Letter> prefix;
      {
        std::vector<TransKey> via(aut.dts.num_states(), ~TransKey{0});
        std::vector<bool> seen(aut.dts.num_states(), false);
        std::vector<StateId> queue{aut.dts.initial};
        seen[aut.dts.initial] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          const StateId s = queue[head];
          for (Letter a = 0; a < aut.dts.alphabet_size(); ++a) {
            const StateId t = aut.dts.succ(s, a);
            if (t == kNoState || seen[t]) continue;
            seen[t] = true;
            via[t] = aut.dts.key(s, a);
            queue.push_back(t);
          }
        }
        for (StateId s = anchor; s != aut.dts.initial;) {
          prefix.push_back(key_letter(via[s], aut.dts.alphabet_size()));
          s = key_source(via[s], aut.dts.alphabet_size());
        }
        std::reverse(prefix.begin(), prefix.end());
      }

      const RestrictedRabin sub = restrict_to_scc(aut, members, anchor);
      const bool whole = accepts_lasso(aut, {prefix, cycle});
      const bool restricted = accepts_lasso(sub.automaton, {{}, cycle});
      CHECK(whole == restricted);
      ++cycles_checked;
    }
  }
  CHECK(cycles_checked > 50);
}

TEST_CASE("stable move-to-front") {
  const Permutation id2 = Permutation::identity(2);
  CHECK(move_to_front(id2, 0b01).order() == std::vector<std::uint32_t>{0, 1});
  CHECK(move_to_front(id2, 0b10).order() == std::vector<std::uint32_t>{1, 0});
  CHECK(move_to_front(id2, 0) == id2);
  const Permutation pi({2, 0, 1});
  CHECK(move_to_front(pi, 0b001).order() == std::vector<std::uint32_t>{0, 2, 1});
  CHECK_THROWS_AS(move_to_front(id2, 0b100), std::out_of_range);
}

TEST_CASE("move-to-front keeps both blocks in previous relative order") {
  SplitMix64 rng{42};
  for (int round = 0; round < 200; ++round) {
    const std::uint32_t k = 1 + rng.below(7);
    std::vector<std::uint32_t> order(k);
    for (std::uint32_t i = 0; i < k; ++i) order[i] = i;
    for (std::uint32_t i = k; i > 1; --i)
      std::swap(order[i - 1], order[rng.below(i)]);
    const Permutation pi(order);
    const std::uint64_t mask = rng.next() & ((std::uint64_t{1} << k) - 1);
    const Permutation moved = move_to_front(pi, mask);

    std::set<std::uint32_t> seen(moved.order().begin(), moved.order().end());
    CHECK(seen.size() == k);  // still a permutation
    std::vector<std::uint32_t> front, back;
    for (std::uint32_t pos = 0; pos < k; ++pos) {
      const std::uint32_t index = pi.at(pos);
      ((mask >> index) & 1 ? front : back).push_back(index);
    }
    std::vector<std::uint32_t> expect = front;
    expect.insert(expect.end(), back.begin(), back.end());
    CHECK(moved.order() == expect);
  }
}

TEST_CASE("permutation rendering is 1-based") {
  CHECK(Permutation({2, 0, 1}).to_string() == "312");
  CHECK(Permutation::identity(0).to_string().empty());
}
