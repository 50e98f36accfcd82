#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgsched/ga.hpp"
#include "tgsched/oma.hpp"
#include "tgsched/schedule.hpp"
#include "tgsched/task_graph.hpp"

namespace tgsched {

enum class Mode { kHybrid, kGaOnly, kLaOnly };

const char* to_string(Mode mode);
/// Accepts "hybrid", "ga-only", "la-only".
std::optional<Mode> parse_mode(const std::string& name);

struct HybridConfig {
  GAConfig ga;
  std::uint32_t memory_depth = 5;
  std::size_t processors = 2;
  /// GA -> LA switch after this many generations without a best improvement.
  std::size_t switch_stagnation = 5;
  /// If nonzero, switch after exactly this many GA generations instead.
  std::size_t switch_generation = 0;
  /// Stop after this many iterations of the active phase without improvement.
  std::size_t term_stagnation = 10;
  std::size_t max_iterations = 10000;
  Mode mode = Mode::kHybrid;
  /// Depth given to every action when chromosomes become automata (0 = boundary).
  std::uint32_t initial_depth = 0;
  /// Keep the final automata (genes + depths) in the report.
  bool keep_automata = false;

  void validate() const;
};

struct RunReport {
  HybridConfig config;
  Chromosome best_chromosome;
  Schedule best_schedule;
  Time best_makespan = 0;
  std::size_t ga_generations = 0;
  std::size_t la_iterations = 0;
  /// First iteration at which best_makespan was reached (0 = initial population).
  std::size_t best_iteration = 0;
  /// trace[i] = best makespan after iteration i; trace[0] is the initial population.
  std::vector<Time> trace;
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
  std::vector<Automaton> final_automata;

  std::size_t total_iterations() const { return ga_generations + la_iterations; }
};

/// GA phase until switch (or termination in ga-only mode), then every
/// chromosome becomes an automaton and LA sweeps run until the best makespan
/// has not improved for term_stagnation sweeps. la-only skips the GA phase and
/// maps the random initial population directly. The global best is tracked
/// independently of the current population/pool.
RunReport run(const TaskGraph& g, const HybridConfig& cfg);

/// Provenance echoed into serialized reports.
struct GraphInfo {
  std::string path;
  std::string format;
  std::optional<CommAugmentSpec> augmentation;
};

/// Deterministic JSON. Wall time is written only when include_timing is set,
/// so reports for a fixed seed are byte-identical by default.
std::string report_to_json(const RunReport& report, const TaskGraph& g, const GraphInfo& info,
                           bool include_timing = false);

struct ComparisonRow {
  Mode mode = Mode::kHybrid;
  std::uint64_t seed = 0;
  Time makespan = 0;
  std::size_t ga_generations = 0;
  std::size_t la_iterations = 0;
  std::size_t best_iteration = 0;
  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
};

struct ModeSummary {
  Mode mode = Mode::kHybrid;
  double mean_makespan = 0.0;
  Time min_makespan = 0;
  double mean_ga_generations = 0.0;
  double mean_la_iterations = 0.0;
  double mean_evaluations = 0.0;
  double mean_wall_ms = 0.0;
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;  // mode-major, seeds in given order
  std::vector<ModeSummary> summaries;
};

/// Runs every (mode, seed) cell with base_cfg (seed and mode overridden).
/// Cells are independent and run on up to `jobs` threads; results do not
/// depend on jobs.
ComparisonTable compare(const TaskGraph& g, const HybridConfig& base_cfg,
                        const std::vector<Mode>& modes, const std::vector<std::uint64_t>& seeds,
                        std::size_t jobs = 1);

/// Columns: graph,processors,mode,seed,makespan,ga_gens,la_iters,evals,wall_ms.
/// One row per cell, then one row per mode with seed "mean" holding the means.
std::string table_to_csv(const ComparisonTable& table, const std::string& graph_name,
                         std::size_t processors);

}  // namespace tgsched
