// Command line front-end: translate Rabin-family HOA automata to parity,
// check language equivalence, and run the random-automata benchmark.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dra2dpa/bench.hpp"
#include "dra2dpa/degen.hpp"
#include "dra2dpa/emptiness.hpp"
#include "dra2dpa/hoa.hpp"
#include "dra2dpa/iar.hpp"
#include "dra2dpa/iar_star.hpp"
#include "dra2dpa/lasso.hpp"
#include "dra2dpa/oracle.hpp"
#include "dra2dpa/scc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInequivalent = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

dra2dpa::Automaton read_automaton(const std::string& path) {
  if (path == "-") return dra2dpa::parse_hoa(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return dra2dpa::parse_hoa(in);
}

void parse_range(const std::string& text, std::uint32_t& lo, std::uint32_t& hi) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = static_cast<std::uint32_t>(std::stoul(text));
    return;
  }
  lo = static_cast<std::uint32_t>(std::stoul(text.substr(0, dots)));
  hi = static_cast<std::uint32_t>(std::stoul(text.substr(dots + 2)));
}

dra2dpa::Permutation parse_perm(const std::string& text) {
  std::vector<std::uint32_t> order;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const unsigned long value = std::stoul(item);
    if (value == 0) throw std::invalid_argument("permutation indices are 1-based");
    order.push_back(static_cast<std::uint32_t>(value - 1));
  }
  return dra2dpa::Permutation(std::move(order));
}

struct TranslateArgs {
  std::string input = "-";
  std::string output = "-";
  std::string mode = "iar-star";
  std::string initial_perm;
  bool prefer_existing = false;
  bool state_based = false;
  bool complete = false;
  bool dot = false;
  bool stats = false;
  std::uint64_t budget = 10'000'000;
};

int run_translate(const TranslateArgs& args) {
  using namespace dra2dpa;
  Automaton input = read_automaton(args.input);
  if (args.complete) input = completed(input);

  if (!args.initial_perm.empty() && args.mode != "iar") {
    std::cerr << "dra2dpa: --initial-perm is only meaningful with --mode iar\n";
    return kExitInputError;
  }

  const TieBreak tie_break = args.prefer_existing ? TieBreak::kPreferExisting
                                                  : TieBreak::kStableOrder;
  auto run_rabin = [&](const Automaton& rabin) {
    if (args.mode == "iar") {
      IarOptions options;
      options.tie_break = tie_break;
      options.state_budget = args.budget;
      if (!args.initial_perm.empty())
        options.initial_record = parse_perm(args.initial_perm);
      return iar(rabin, options).automaton;
    }
    IarStarOptions options;
    options.tie_break = tie_break;
    options.state_budget = args.budget;
    return iar_star(rabin, options).automaton;
  };

  const auto start = std::chrono::steady_clock::now();
  Automaton output;
  if (input.is_rabin()) {
    output = run_rabin(input);
  } else if (input.is_generalized_rabin()) {
    output = run_rabin(degeneralize(input));
  } else if (input.is_streett()) {
    if (!input.dts.is_complete()) {
      std::cerr << "dra2dpa: Streett input must be complete; pass --complete\n";
      return kExitInputError;
    }
    Automaton as_rabin;
    as_rabin.dts = input.dts;
    as_rabin.acceptance = RabinAcc{input.streett().pairs};
    output = complement_parity(run_rabin(as_rabin));
  } else {
    output = input;  // parity input passes through
  }
  const double time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  if (args.stats) {
    const StatRecord record = collect_stats(output, args.mode, time_ms);
    std::cerr << "states=" << record.states << " sccs=" << record.sccs
              << " max_priority=" << record.max_priority << " time_ms="
              << record.time_ms << "\n";
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (args.output != "-") {
    file.open(args.output);
    if (!file) throw std::runtime_error("cannot open " + args.output);
    out = &file;
  }
  if (args.dot)
    emit_dot(output, *out);
  else
    emit_hoa(output, *out, {.state_based = args.state_based});
  return kExitOk;
}

struct CheckArgs {
  std::string first;
  std::string second;
  std::uint32_t lasso_bound = 0;
};

int run_check(const CheckArgs& args) {
  using namespace dra2dpa;
  const Automaton a = read_automaton(args.first);
  const Automaton b = read_automaton(args.second);
  const EquivalenceResult result = check_equivalent(a, b);
  if (args.lasso_bound > 0) {
    const auto separating = find_separating_lasso(a, b, args.lasso_bound);
    if (separating)
      std::cerr << "lasso oracle: separating word "
                << format_lasso(a.dts, *separating) << "\n";
    else
      std::cerr << "lasso oracle: no separating word up to bound "
                << args.lasso_bound << "\n";
  }
  if (result.equivalent) {
    std::cerr << "equivalent\n";
    return kExitOk;
  }
  std::cout << format_lasso(a.dts, *result.witness) << "\n";
  std::cerr << "not equivalent\n";
  return kExitInequivalent;
}

struct BenchArgs {
  std::string states = "5..15";
  std::string pairs = "2..3";
  std::uint32_t ap = 2;
  double density = 0.1;
  double acc_probability = 0.2;
  std::uint64_t seed = 0;
  std::uint32_t count = 100;
  std::string modes = "iar,iar-star";
  std::string csv = "-";
  std::uint64_t budget = 10'000'000;
};

int run_bench(const BenchArgs& args) {
  using namespace dra2dpa;
  GenParams params;
  parse_range(args.states, params.min_states, params.max_states);
  parse_range(args.pairs, params.min_pairs, params.max_pairs);
  params.ap_count = args.ap;
  params.density = args.density;
  params.acc_probability = args.acc_probability;
  params.seed = args.seed;
  params.count = args.count;

  std::vector<BenchMode> modes;
  std::stringstream stream(args.modes);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto mode = bench_mode_from_string(item);
    if (!mode) {
      std::cerr << "dra2dpa: unknown mode " << item << "\n";
      return kExitInputError;
    }
    modes.push_back(*mode);
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (args.csv != "-") {
    file.open(args.csv);
    if (!file) throw std::runtime_error("cannot open " + args.csv);
    out = &file;
  }
  run_benchmark(params, modes, *out, args.budget);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "dra2dpa: deterministic Rabin / generalized Rabin / Streett to parity "
      "translation via index appearance records"};
  app.require_subcommand(1);

  TranslateArgs translate_args;
  CLI::App* translate =
      app.add_subcommand("translate", "Translate a HOA automaton to a DPA");
  translate->add_option("input", translate_args.input,
                        "HOA file ('-' for standard input)");
  translate->add_option("--mode", translate_args.mode, "Construction variant")
      ->check(CLI::IsMember({"iar", "iar-star"}));
  translate->add_option("--initial-perm", translate_args.initial_perm,
                        "Initial appearance record, e.g. 3,1,2 (iar mode)");
  translate->add_flag("--prefer-existing", translate_args.prefer_existing,
                      "Reuse constructed states when several move-to-front "
                      "orders are possible");
  translate->add_flag("--state-based-output", translate_args.state_based,
                      "Emit state-based acceptance");
  translate->add_flag("--complete", translate_args.complete,
                      "Complete the input with a rejecting sink first");
  translate->add_flag("--dot", translate_args.dot, "Emit DOT instead of HOA");
  translate->add_flag("--stats", translate_args.stats,
                      "Print a statistics line to standard error");
  translate->add_option("-o,--output", translate_args.output,
                        "Output file ('-' for standard output)");
  translate->add_option("--state-budget", translate_args.budget,
                        "Abort when the construction exceeds this many states");

  CheckArgs check_args;
  CLI::App* check =
      app.add_subcommand("check", "Check language equivalence of two automata");
  check->add_option("first", check_args.first, "HOA file")->required();
  check->add_option("second", check_args.second, "HOA file")->required();
  check->add_option("--lasso", check_args.lasso_bound,
                    "Also run the exhaustive lasso oracle up to this bound");

  BenchArgs bench_args;
  CLI::App* bench =
      app.add_subcommand("bench", "Random-automata benchmark harness");
  bench->add_option("--count", bench_args.count, "Number of instances");
  bench->add_option("-Q,--states", bench_args.states, "State count range A..B");
  bench->add_option("--pairs", bench_args.pairs, "Pair count range A..B");
  bench->add_option("--ap", bench_args.ap, "Atomic propositions");
  bench->add_option("--density", bench_args.density, "Transition density");
  bench->add_option("--acc-probability", bench_args.acc_probability,
                    "Membership probability per acceptance set");
  bench->add_option("--seed", bench_args.seed, "Generator seed");
  bench->add_option("--modes", bench_args.modes,
                    "Comma list of iar,iar-star,iar-prefer-existing,sb-output");
  bench->add_option("--csv", bench_args.csv, "CSV output file");
  bench->add_option("--state-budget", bench_args.budget,
                    "Per-instance state budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (translate->parsed()) return run_translate(translate_args);
    if (check->parsed()) return run_check(check_args);
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const dra2dpa::BudgetExceeded& e) {
    std::cerr << "dra2dpa: " << e.what() << "\n";
    return kExitBudget;
  } catch (const dra2dpa::ParseError& e) {
    std::cerr << "dra2dpa: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "dra2dpa: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
