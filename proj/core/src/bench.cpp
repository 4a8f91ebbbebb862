#include "dra2dpa/bench.hpp"

#include <chrono>
#include <iomanip>
#include <limits>
#include <ostream>

#include "dra2dpa/iar.hpp"
#include "dra2dpa/iar_star.hpp"
#include "dra2dpa/sbacc.hpp"
#include "dra2dpa/scc.hpp"

namespace dra2dpa {

std::string_view to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::kIar:
      return "iar";
    case BenchMode::kIarStar:
      return "iar-star";
    case BenchMode::kIarPreferExisting:
      return "iar-prefer-existing";
    case BenchMode::kSbOutput:
      return "sb-output";
  }
  return "?";
}

std::optional<BenchMode> bench_mode_from_string(std::string_view name) {
  if (name == "iar") return BenchMode::kIar;
  if (name == "iar-star") return BenchMode::kIarStar;
  if (name == "iar-prefer-existing") return BenchMode::kIarPreferExisting;
  if (name == "sb-output") return BenchMode::kSbOutput;
  return std::nullopt;
}

StatRecord collect_stats(const Automaton& aut, std::string mode,
                         double time_ms) {
  StatRecord record;
  record.mode = std::move(mode);
  record.states = aut.dts.num_states();
  record.sccs = static_cast<std::uint32_t>(
      scc_decompose(aut.dts).components.size());
  record.max_priority = aut.is_parity() ? max_priority(aut) : 0;
  record.time_ms = time_ms;
  return record;
}

namespace {

Automaton translate_for_mode(const Automaton& input, BenchMode mode,
                             std::uint64_t state_budget) {
  IarOptions iar_options;
  iar_options.state_budget = state_budget;
  switch (mode) {
    case BenchMode::kIar:
      return iar(input, iar_options).automaton;
    case BenchMode::kIarPreferExisting:
      iar_options.tie_break = TieBreak::kPreferExisting;
      return iar(input, iar_options).automaton;
    case BenchMode::kIarStar: {
      IarStarOptions options;
      options.state_budget = state_budget;
      return iar_star(input, options).automaton;
    }
    case BenchMode::kSbOutput:
      return to_automaton(to_state_based(iar(input, iar_options).automaton));
  }
  throw std::logic_error("unknown benchmark mode");
}

void write_record(std::ostream& csv, const StatRecord& r) {
  csv << r.instance << ',' << r.mode << ',' << r.states << ',' << r.sccs << ','
      << r.max_priority << ',' << std::fixed << std::setprecision(3)
      << r.time_ms << ',' << r.outcome << '\n';
}

}  // namespace

BenchSummary run_benchmark(const GenParams& params,
                           std::span<const BenchMode> modes, std::ostream& csv,
                           std::uint64_t state_budget) {
  validate(params);
  BenchSummary summary;
  for (BenchMode mode : modes)
    summary.modes.push_back({std::string(to_string(mode))});

  csv << "instance,mode,states,sccs,max_priority,time_ms,outcome\n";
  std::vector<std::uint32_t> smallest_credit(modes.size(), 0);

  for (std::uint32_t instance = 0; instance < params.count; ++instance) {
    const Automaton input = random_dra(params, instance);
    std::vector<StatRecord> row;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      StatRecord record;
      const auto start = std::chrono::steady_clock::now();
      try {
        const Automaton output =
            translate_for_mode(input, modes[m], state_budget);
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        record = collect_stats(output, std::string(to_string(modes[m])), ms);
      } catch (const BudgetExceeded&) {
        record.mode = to_string(modes[m]);
        record.outcome = "budget-exceeded";
      } catch (const std::exception&) {
        record.mode = to_string(modes[m]);
        record.outcome = "error";
      }
      record.instance = instance;
      write_record(csv, record);
      row.push_back(std::move(record));
    }

    std::uint64_t least = std::numeric_limits<std::uint64_t>::max();
    for (const StatRecord& r : row)
      if (r.outcome == "ok" && r.states < least) least = r.states;
    for (std::size_t m = 0; m < row.size(); ++m) {
      if (row[m].outcome == "ok") {
        ++summary.modes[m].completed;
        summary.modes[m].mean_states += row[m].states;
        summary.modes[m].mean_sccs += row[m].sccs;
        if (row[m].states == least) ++smallest_credit[m];
      } else {
        ++summary.modes[m].failures;
      }
      summary.records.push_back(row[m]);
    }
  }

  for (std::size_t m = 0; m < summary.modes.size(); ++m) {
    BenchSummary::PerMode& per = summary.modes[m];
    if (per.completed > 0) {
      per.mean_states /= per.completed;
      per.mean_sccs /= per.completed;
    }
    if (params.count > 0)
      per.smallest_pct = 100.0 * smallest_credit[m] / params.count;
    csv << "# mean_states mode=" << per.mode << " value=" << std::fixed
        << std::setprecision(4) << per.mean_states << '\n';
    csv << "# mean_sccs mode=" << per.mode << " value=" << std::fixed
        << std::setprecision(4) << per.mean_sccs << '\n';
    csv << "# smallest_pct mode=" << per.mode << " value=" << std::fixed
        << std::setprecision(2) << per.smallest_pct << '\n';
    csv << "# failures mode=" << per.mode << " value=" << per.failures << '\n';
  }
  return summary;
}

}  // namespace dra2dpa
