#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dra2dpa/automaton.hpp"
#include "dra2dpa/random.hpp"

namespace dra2dpa {

enum class BenchMode {
  kIar,
  kIarStar,
  kIarPreferExisting,
  kSbOutput,  // unoptimized translation converted to state-based acceptance
};

std::string_view to_string(BenchMode mode);
std::optional<BenchMode> bench_mode_from_string(std::string_view name);

struct StatRecord {
  std::uint32_t instance = 0;
  std::string mode;
  std::uint32_t states = 0;
  std::uint32_t sccs = 0;
  Priority max_priority = 0;
  double time_ms = 0.0;
  std::string outcome = "ok";  // ok | budget-exceeded | error
};

/// Counts states, SCCs and the maximum priority of a translated automaton.
StatRecord collect_stats(const Automaton& aut, std::string mode,
                         double time_ms);

struct BenchSummary {
  struct PerMode {
    std::string mode;
    std::uint32_t completed = 0;
    std::uint32_t failures = 0;
    double mean_states = 0.0;
    double mean_sccs = 0.0;
    /// Share of instances on which this mode produced the (possibly tied)
    /// least number of states, in percent of all instances.
    double smallest_pct = 0.0;
  };
  std::vector<PerMode> modes;
  std::vector<StatRecord> records;
};

/// Generates `params.count` random Rabin automata and translates each with
/// every requested mode, streaming one CSV row per (instance, mode) in order:
/// instance,mode,states,sccs,max_priority,time_ms,outcome
/// followed by a commented summary block.  Budget overruns and errors are
/// recorded as data, not raised.  Output is bit-identical across runs except
/// for the time_ms column.
BenchSummary run_benchmark(const GenParams& params,
                           std::span<const BenchMode> modes, std::ostream& csv,
                           std::uint64_t state_budget = 10'000'000);

}  // namespace dra2dpa
