#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tgsched {

using TaskId = std::uint32_t;
using Time = std::int64_t;

/// Precedence edge. comm is paid only when from/to run on different processors.
struct Edge {
  TaskId from = 0;
  TaskId to = 0;
  Time comm = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Adjacency entry: the task on the other end of an edge plus its comm cost.
struct Arc {
  TaskId task = 0;
  Time comm = 0;
};

enum class GraphErrorKind {
  kEmpty,
  kNegativeCost,
  kBadEndpoint,
  kSelfEdge,
  kDuplicateEdge,
  kCycle,
};

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrorKind kind, const std::string& what, std::optional<TaskId> task = {})
      : std::runtime_error(what), kind_(kind), task_(task) {}
  GraphErrorKind kind() const { return kind_; }
  /// Offending task, when the error is attributable to one.
  std::optional<TaskId> task() const { return task_; }

 private:
  GraphErrorKind kind_;
  std::optional<TaskId> task_;
};

/// Immutable DAG of tasks with computation costs and per-edge communication
/// costs. Construction validates every invariant; a TaskGraph that exists is
/// valid. Edges are stored sorted by (from, to).
class TaskGraph {
 public:
  TaskGraph(std::vector<Time> costs, std::vector<Edge> edges);

  std::size_t task_count() const { return costs_.size(); }
  Time cost(TaskId t) const { return costs_[t]; }
  const std::vector<Time>& costs() const { return costs_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Time total_cost() const { return total_cost_; }

  std::span<const Arc> predecessors(TaskId t) const;
  std::span<const Arc> successors(TaskId t) const;

  /// Deterministic topological order, ties broken by ascending task id.
  const std::vector<TaskId>& topo_order() const { return topo_; }

  friend bool operator==(const TaskGraph& a, const TaskGraph& b) {
    return a.costs_ == b.costs_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Time> costs_;
  std::vector<Edge> edges_;
  // CSR adjacency
  std::vector<std::size_t> pred_offsets_, succ_offsets_;
  std::vector<Arc> preds_, succs_;
  std::vector<TaskId> topo_;
  Time total_cost_ = 0;
};

/// Kahn's algorithm with a min-heap on task id. Throws GraphError(kCycle).
/// Usable on raw edge lists before a TaskGraph exists.
std::vector<TaskId> topo_order(std::size_t task_count, std::span<const Edge> edges);

inline std::vector<TaskId> topo_order(const TaskGraph& g) { return g.topo_order(); }

/// Longest cost path starting at each task (task's own cost included, comm
/// ignored).
std::vector<Time> bottom_levels(const TaskGraph& g);

/// Length of the longest computation-cost path in the graph.
Time critical_path_length(const TaskGraph& g);

struct CommAugmentSpec {
  std::uint64_t seed = 1;
  Time min_cost = 1;
  Time max_cost = 20;
};

/// Replaces every edge's comm cost with a uniform draw from
/// [spec.min_cost, spec.max_cost]. Edges are visited in ascending (from, to)
/// order and each consumes exactly one Rng::between draw, so the result is a
/// pure function of (g, spec).
TaskGraph augment_comm(const TaskGraph& g, const CommAugmentSpec& spec);

}  // namespace tgsched
