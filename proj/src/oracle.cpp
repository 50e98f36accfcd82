#include "tgsched/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace tgsched {

namespace {

class Search {
 public:
  Search(const TaskGraph& g, std::size_t processors)
      : g_(g),
        P_(processors),
        k_(g.task_count()),
        blevel_(bottom_levels(g)),
        placed_(k_, false),
        waiting_(k_),
        current_(k_),
        free_at_(processors, 0),
        used_(processors, 0),
        remaining_(g.total_cost()) {
    for (TaskId t = 0; t < k_; ++t) waiting_[t] = g.predecessors(t).size();

    // serial incumbent: topological order on processor 0
    best_.processor_count = P_;
    best_.placements.resize(k_);
    Time clock = 0;
    for (TaskId t : g.topo_order()) {
      best_.placements[t] = Placement{0, clock, clock + g.cost(t)};
      clock += g.cost(t);
    }
    best_.makespan = clock;

    // try tasks with longer tails first so good incumbents show up early
    by_priority_.resize(k_);
    for (TaskId t = 0; t < k_; ++t) by_priority_[t] = t;
    std::stable_sort(by_priority_.begin(), by_priority_.end(),
                     [&](TaskId a, TaskId b) { return blevel_[a] > blevel_[b]; });
  }

  OracleResult solve() {
    dfs(0, 0);
    return OracleResult{best_.makespan, best_, nodes_};
  }

 private:
  Time lower_bound(Time partial) const {
    Time sum_free = 0;
    Time min_free = free_at_[0];
    for (Time f : free_at_) {
      sum_free += f;
      min_free = std::min(min_free, f);
    }
    const auto P = static_cast<Time>(P_);
    Time bound = std::max(partial, (sum_free + remaining_ + P - 1) / P);
    for (TaskId t = 0; t < k_; ++t) {
      if (placed_[t]) continue;
      Time est = min_free;
      for (const Arc& pred : g_.predecessors(t))
        if (placed_[pred.task]) est = std::max(est, current_[pred.task].finish);
      bound = std::max(bound, est + blevel_[t]);
    }
    return bound;
  }

  void dfs(std::size_t placed_count, Time partial) {
    ++nodes_;
    if (placed_count == k_) {
      if (partial < best_.makespan) {
        best_.placements = current_;
        best_.makespan = partial;
      }
      return;
    }
    if (lower_bound(partial) >= best_.makespan) return;

    for (TaskId t : by_priority_) {
      if (placed_[t] || waiting_[t] != 0) continue;
      bool tried_empty = false;
      for (std::size_t p = 0; p < P_; ++p) {
        if (used_[p] == 0) {
          if (tried_empty) continue;
          tried_empty = true;
        }
        Time start = free_at_[p];
        for (const Arc& pred : g_.predecessors(t)) {
          const Placement& pp = current_[pred.task];
          start = std::max(start, pp.finish + (pp.processor != p ? pred.comm : 0));
        }
        const Time finish = start + g_.cost(t);

        const Time saved_free = free_at_[p];
        current_[t] = Placement{static_cast<ProcessorId>(p), start, finish};
        placed_[t] = true;
        free_at_[p] = finish;
        ++used_[p];
        remaining_ -= g_.cost(t);
        for (const Arc& s : g_.successors(t)) --waiting_[s.task];

        dfs(placed_count + 1, std::max(partial, finish));

        for (const Arc& s : g_.successors(t)) ++waiting_[s.task];
        remaining_ += g_.cost(t);
        --used_[p];
        free_at_[p] = saved_free;
        placed_[t] = false;
      }
    }
  }

  const TaskGraph& g_;
  std::size_t P_;
  std::size_t k_;
  std::vector<Time> blevel_;
  std::vector<bool> placed_;
  std::vector<std::size_t> waiting_;
  std::vector<Placement> current_;
  std::vector<Time> free_at_;
  std::vector<std::size_t> used_;
  std::vector<TaskId> by_priority_;
  Time remaining_;
  Schedule best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult brute_force_optimum(const TaskGraph& g, std::size_t processors) {
  if (processors == 0) throw std::invalid_argument("processor count must be >= 1");
  if (g.task_count() > kOracleMaxTasks)
    throw OracleSizeError("oracle refuses graphs with more than " +
                          std::to_string(kOracleMaxTasks) + " tasks (got " +
                          std::to_string(g.task_count()) + ")");
  return Search(g, processors).solve();
}

}  // namespace tgsched
