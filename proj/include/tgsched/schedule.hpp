#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tgsched/task_graph.hpp"

namespace tgsched {

using Gene = std::uint64_t;
using ProcessorId = std::uint32_t;

/// One gene per task. A gene's value is the task's priority (larger runs
/// first among ready tasks) and, modulo P, its processor.
struct Chromosome {
  std::vector<Gene> genes;

  std::size_t size() const { return genes.size(); }
  friend bool operator==(const Chromosome&, const Chromosome&) = default;
};

/// Exclusive upper bound for gene values: 2·k·P.
constexpr Gene gene_range(std::size_t task_count, std::size_t processors) {
  return static_cast<Gene>(2 * task_count * processors);
}

constexpr ProcessorId processor_of(Gene gene, std::size_t processors) {
  return static_cast<ProcessorId>(gene % processors);
}

struct Placement {
  ProcessorId processor = 0;
  Time start = 0;
  Time finish = 0;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Schedule {
  std::vector<Placement> placements;  // indexed by task id
  Time makespan = 0;
  std::size_t processor_count = 1;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

/// Strict priority list scheduling, append-only.
///
/// Repeatedly takes the ready task with the largest gene (ties: smallest id),
/// puts it on processor_of(gene, P) at
///   max(processor free time, max over preds of finish + comm if cross-processor)
/// and advances that processor's free time to the task's finish. No idle-gap
/// insertion. Throws std::invalid_argument on a length mismatch or P == 0.
Schedule decode(const Chromosome& c, const TaskGraph& g, std::size_t processors);

/// Cheaper variant of decode that only returns the makespan. Identical timing.
Time decode_makespan(const Chromosome& c, const TaskGraph& g, std::size_t processors);

inline Time makespan(const Schedule& s) { return s.makespan; }

/// Checks the four schedule invariants (duration, no overlap per processor,
/// precedence + comm, makespan = max finish) plus processor range. Returns
/// one human-readable line per violation; empty means valid.
std::vector<std::string> schedule_violations(const Schedule& s, const TaskGraph& g);

}  // namespace tgsched
