#pragma once

#include <cstdint>
#include <stdexcept>

#include "tgsched/schedule.hpp"
#include "tgsched/task_graph.hpp"

namespace tgsched {

inline constexpr std::size_t kOracleMaxTasks = 12;

class OracleSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct OracleResult {
  Time optimum_makespan = 0;
  Schedule witness;
  std::uint64_t nodes_explored = 0;
};

/// Exact minimum makespan by depth-first branch and bound.
///
/// The search branches on every (ready task, processor) pair and places the
/// task at its earliest start on that processor after everything already
/// placed there: max(processor free time, data-ready time with comm charged
/// across processors). This is the same timing rule the decoder uses.
///
/// Why the space holds an optimum: take any feasible schedule and replay its
/// tasks in order of start time with the same processor assignment. Each
/// task's predecessors and its processor-mates that started earlier are
/// already placed, and by induction finish no later than before, so the
/// replayed start is no later than the original. Idle time inserted ahead of
/// a task therefore never helps, and earliest-start appends reach an optimal
/// makespan.
///
/// Pruning bound (admissible): the larger of
///   - remaining-work bound: ceil((sum of processor free times + unplaced cost) / P)
///   - path bound: for each unplaced task, its earliest conceivable start
///     (latest placed-predecessor finish, and the earliest free processor)
///     plus its bottom level.
/// Empty processors are interchangeable, so only the first one is tried.
///
/// Throws OracleSizeError when the graph has more than kOracleMaxTasks tasks.
OracleResult brute_force_optimum(const TaskGraph& g, std::size_t processors);

}  // namespace tgsched
