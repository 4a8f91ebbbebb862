#include <doctest.h>

#include <set>
#include <sstream>

#include "dra2dpa/hoa.hpp"
#include "dra2dpa/iar.hpp"
#include "dra2dpa/iar_star.hpp"
#include "dra2dpa/lasso.hpp"
#include "dra2dpa/oracle.hpp"
#include "dra2dpa/random.hpp"
#include "support/compare.hpp"
#include "support/figures.hpp"
#include "support/hoa_validator.hpp"

using namespace dra2dpa;
using testsupport::fig1;
using testsupport::kA;
using testsupport::kB;

TEST_CASE("parsing a minimal Rabin document") {
  const char* text = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
acc-name: Rabin 1
Acceptance: 2 Fin(0) & Inf(1)
--BODY--
State: 0
[0] 0 {1}
[!0] 0 {0}
--END--
)";
  const Automaton aut = parse_hoa_string(text);
  REQUIRE(aut.is_rabin());
  REQUIRE(aut.rabin().pairs.size() == 1);
  const RabinPair& pair = aut.rabin().pairs[0];
  CHECK(pair.fin.keys() == std::vector<TransKey>{aut.dts.key(0, kB)});
  CHECK(pair.inf.keys() == std::vector<TransKey>{aut.dts.key(0, kA)});
  CHECK(aut.dts.is_complete());
}

TEST_CASE("state-based marks are pushed onto outgoing transitions") {
  const char* text = R"(HOA: v1
States: 2
Start: 0
AP: 1 "a"
acc-name: Rabin 1
Acceptance: 2 (Fin(0) & Inf(1))
--BODY--
State: 0 {1}
[t] 1
State: 1 {0}
[0] 0
[!0] 1
--END--
)";
  const Automaton aut = parse_hoa_string(text);
  const RabinPair& pair = aut.rabin().pairs[0];
  CHECK(pair.inf.size() == 2);  // both letters leaving state 0
  CHECK(pair.inf.contains(aut.dts.key(0, kA)));
  CHECK(pair.inf.contains(aut.dts.key(0, kB)));
  CHECK(pair.fin.size() == 2);  // both transitions of state 1
}

TEST_CASE("implicit labels enumerate the letters in order") {
  const char* text = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 2 Fin(0) & Inf(1)
--BODY--
State: 0
0 {0}
0 {1}
--END--
)";
  const Automaton aut = parse_hoa_string(text);
  const RabinPair& pair = aut.rabin().pairs[0];
  CHECK(pair.fin.keys() == std::vector<TransKey>{aut.dts.key(0, 0)});
  CHECK(pair.inf.keys() == std::vector<TransKey>{aut.dts.key(0, 1)});
}

TEST_CASE("acceptance shapes without acc-name are recognized") {
  SUBCASE("Streett") {
    const char* text = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 2 Fin(0) | Inf(1)
--BODY--
State: 0
[0] 0 {1}
[!0] 0 {0}
--END--
)";
    const Automaton aut = parse_hoa_string(text);
    REQUIRE(aut.is_streett());
    const RabinPair& pair = aut.streett().pairs[0];
    CHECK(pair.inf.contains(aut.dts.key(0, kB)));  // the Fin(0) part
    CHECK(pair.fin.contains(aut.dts.key(0, kA)));  // the Inf(1) part
  }
  SUBCASE("generalized Rabin") {
    const char* text = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 3 Fin(0) & Inf(1) & Inf(2)
--BODY--
State: 0
[0] 0 {1}
[!0] 0 {2}
--END--
)";
    const Automaton aut = parse_hoa_string(text);
    REQUIRE(aut.is_generalized_rabin());
    CHECK(aut.generalized_rabin().pairs[0].infs.size() == 2);
  }
  SUBCASE("parity max even") {
    const char* text = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 2 Fin(1) & Inf(0)
--BODY--
State: 0
[0] 0 {0}
[!0] 0 {1}
--END--
)";
    const Automaton aut = parse_hoa_string(text);
    REQUIRE(aut.is_parity());
    CHECK(aut.parity().priority[aut.dts.key(0, kA)] == 0);
    CHECK(aut.parity().priority[aut.dts.key(0, kB)] == 1);
  }
  SUBCASE("constant conditions") {
    const char* tmpl = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 0 %
--BODY--
State: 0
[t] 0
--END--
)";
    std::string always(tmpl);
    always.replace(always.find('%'), 1, "t");
    CHECK(parse_hoa_string(always).is_streett());
    std::string never(tmpl);
    never.replace(never.find('%'), 1, "f");
    CHECK(parse_hoa_string(never).is_rabin());
  }
}

TEST_CASE("parity max odd inputs are normalized to max even semantics") {
  const char* text = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
acc-name: parity max odd 2
Acceptance: 2 Inf(1) | Fin(0)
--BODY--
State: 0
[0] 0 {1}
[!0] 0 {0}
--END--
)";
  const Automaton aut = parse_hoa_string(text);
  REQUIRE(aut.is_parity());
  CHECK(accepts_lasso(aut, {{}, {kA}}));    // mark 1: max odd accepts
  CHECK(!accepts_lasso(aut, {{}, {kB}}));   // mark 0: max even, rejected
  CHECK(accepts_lasso(aut, {{}, {kA, kB}}));
}

TEST_CASE("parse errors carry positions and clear causes") {
  CHECK_THROWS_AS(parse_hoa_string("HOA: v2\n--BODY--\n--END--\n"), ParseError);

  const char* nondet = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 2 Fin(0) & Inf(1)
--BODY--
State: 0
[0] 0
[t] 0
--END--
)";
  CHECK_THROWS_WITH_AS(parse_hoa_string(nondet),
                       doctest::Contains("nondeterministic"), ParseError);

  const char* bad_set = R"(HOA: v1
States: 1
Start: 0
AP: 1 "a"
Acceptance: 2 Fin(0) & Inf(1)
--BODY--
State: 0
[t] 0 {7}
--END--
)";
  CHECK_THROWS_WITH_AS(parse_hoa_string(bad_set),
                       doctest::Contains("set index"), ParseError);

  const char* alias = "HOA: v1\nAlias: @a 0\n--BODY--\n--END--\n";
  CHECK_THROWS_WITH_AS(parse_hoa_string(alias), doctest::Contains("alias"),
                       ParseError);

  const char* twice = R"(HOA: v1
States: 1
Start: 0
Start: 0
AP: 0
Acceptance: 0 f
--BODY--
State: 0
--END--
)";
  CHECK_THROWS_WITH_AS(parse_hoa_string(twice),
                       doctest::Contains("multiple initial"), ParseError);

  const char* undeclared = R"(HOA: v1
States: 1
Start: 0
AP: 0
Acceptance: 1 Fin(0) & Inf(1)
--BODY--
State: 0
--END--
)";
  CHECK_THROWS_WITH_AS(parse_hoa_string(undeclared),
                       doctest::Contains("undeclared"), ParseError);

  const char* buechi = R"(HOA: v1
States: 1
Start: 0
AP: 0
acc-name: Buchi
Acceptance: 1 Inf(0)
--BODY--
State: 0
[t] 0 {0}
--END--
)";
  CHECK_THROWS_WITH_AS(parse_hoa_string(buechi),
                       doctest::Contains("unsupported acc-name"), ParseError);
}

TEST_CASE("emission of the translated example") {
  const Automaton dpa = iar(fig1()).automaton;
  const std::string text = emit_hoa_string(dpa);
  CHECK(text.find("States: 5") != std::string::npos);
  CHECK(text.find("acc-name: parity max even 6") != std::string::npos);
  CHECK(text.find("\"p,12\"") != std::string::npos);
  testsupport::validate_hoa_document(text);

  std::set<Priority> used;
  for (Priority p : dpa.parity().priority)
    if (p != kNoPriority) used.insert(p);
  CHECK(used == std::set<Priority>{1, 3, 4, 5});
}

TEST_CASE("round-trips preserve structure up to renumbering") {
  auto roundtrip = [](const Automaton& aut) {
    const std::string text = emit_hoa_string(aut);
    testsupport::validate_hoa_document(text);
    const Automaton back = parse_hoa_string(text);
    CHECK(testsupport::isomorphic(aut, back));
  };

  roundtrip(fig1());
  roundtrip(testsupport::fig2());
  roundtrip(testsupport::fig3());
  roundtrip(iar(fig1()).automaton);
  roundtrip(iar_star(testsupport::fig3()).automaton);

  GenParams params;
  params.min_states = 1;
  params.max_states = 6;
  params.min_pairs = 0;
  params.max_pairs = 3;
  params.ap_count = 2;
  params.density = 0.4;
  params.acc_probability = 0.3;
  params.seed = 4242;
  params.max_inf_sets = 2;
  for (std::uint32_t index = 0; index < 25; ++index) {
    roundtrip(random_dra(params, index));
    roundtrip(random_dgra(params, index));
    const Automaton rabin = completed(random_dra(params, index));
    Automaton streett;
    streett.dts = rabin.dts;
    streett.acceptance = StreettAcc{rabin.rabin().pairs};
    roundtrip(streett);
  }
}

TEST_CASE("state-based emission keeps the language") {
  const Automaton dpa = iar(fig1()).automaton;
  const std::string text = emit_hoa_string(dpa, {.state_based = true});
  testsupport::validate_hoa_document(text);
  CHECK(text.find("state-acc") != std::string::npos);
  const Automaton back = parse_hoa_string(text);
  REQUIRE(back.is_parity());
  CHECK(check_equivalent(dpa, back).equivalent);
  CHECK_THROWS_AS(emit_hoa_string(fig1(), {.state_based = true}),
                  std::invalid_argument);
}

TEST_CASE("emitted verdicts survive the round trip") {
  const Automaton rabin = fig1();
  const Automaton dpa = iar(rabin).automaton;
  const Automaton back = parse_hoa_string(emit_hoa_string(dpa));
  SplitMix64 rng{17};
  for (int i = 0; i < 20; ++i) {
    LassoWord word;
    word.prefix.assign(rng.below(5), 0);
    for (Letter& l : word.prefix) l = rng.below(2);
    word.cycle.assign(1 + rng.below(5), 0);
    for (Letter& l : word.cycle) l = rng.below(2);
    CHECK(accepts_lasso(dpa, word) == accepts_lasso(back, word));
  }
}

TEST_CASE("dot export shows record names and priorities") {
  const Automaton dpa = iar(fig1()).automaton;
  std::ostringstream out;
  emit_dot(dpa, out);
  const std::string text = out.str();
  CHECK(text.find("digraph") != std::string::npos);
  CHECK(text.find("p,12") != std::string::npos);
  CHECK(text.find("a 4") != std::string::npos);
  CHECK(text.find("!a 3") != std::string::npos);
}
