#include "tgsched/task_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "tgsched/rng.hpp"

namespace tgsched {

namespace {

void build_csr(std::size_t n, const std::vector<Edge>& edges, bool by_target,
               std::vector<std::size_t>& offsets, std::vector<Arc>& arcs) {
  offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_target ? e.to : e.from) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  arcs.resize(edges.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    const TaskId key = by_target ? e.to : e.from;
    arcs[fill[key]++] = Arc{by_target ? e.from : e.to, e.comm};
  }
}

}  // namespace

std::vector<TaskId> topo_order(std::size_t task_count, std::span<const Edge> edges) {
  std::vector<std::size_t> indegree(task_count, 0);
  std::vector<std::vector<TaskId>> out(task_count);
  for (const Edge& e : edges) {
    ++indegree[e.to];
    out[e.from].push_back(e.to);
  }
  std::priority_queue<TaskId, std::vector<TaskId>, std::greater<>> ready;
  for (TaskId t = 0; t < task_count; ++t)
    if (indegree[t] == 0) ready.push(t);

  std::vector<TaskId> order;
  order.reserve(task_count);
  while (!ready.empty()) {
    const TaskId t = ready.top();
    ready.pop();
    order.push_back(t);
    for (TaskId s : out[t])
      if (--indegree[s] == 0) ready.push(s);
  }
  if (order.size() != task_count) {
    TaskId stuck = 0;
    while (indegree[stuck] == 0) ++stuck;
    throw GraphError(GraphErrorKind::kCycle,
                     "task graph contains a cycle through task " + std::to_string(stuck), stuck);
  }
  return order;
}

TaskGraph::TaskGraph(std::vector<Time> costs, std::vector<Edge> edges)
    : costs_(std::move(costs)), edges_(std::move(edges)) {
  const std::size_t n = costs_.size();
  if (n == 0) throw GraphError(GraphErrorKind::kEmpty, "task graph must contain at least one task");
  for (std::size_t t = 0; t < n; ++t) {
    if (costs_[t] < 0)
      throw GraphError(GraphErrorKind::kNegativeCost,
                       "task " + std::to_string(t) + " has negative cost", static_cast<TaskId>(t));
    total_cost_ += costs_[t];
  }
  for (const Edge& e : edges_) {
    if (e.from >= n || e.to >= n)
      throw GraphError(GraphErrorKind::kBadEndpoint, "edge " + std::to_string(e.from) + "->" +
                                                         std::to_string(e.to) +
                                                         " references a missing task");
    if (e.from == e.to)
      throw GraphError(GraphErrorKind::kSelfEdge, "self edge on task " + std::to_string(e.from));
    if (e.comm < 0)
      throw GraphError(GraphErrorKind::kNegativeCost, "edge " + std::to_string(e.from) + "->" +
                                                          std::to_string(e.to) +
                                                          " has negative comm cost");
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].from == edges_[i - 1].from && edges_[i].to == edges_[i - 1].to)
      throw GraphError(GraphErrorKind::kDuplicateEdge,
                       "duplicate edge " + std::to_string(edges_[i].from) + "->" +
                           std::to_string(edges_[i].to));

  topo_ = tgsched::topo_order(n, edges_);
  build_csr(n, edges_, /*by_target=*/true, pred_offsets_, preds_);
  build_csr(n, edges_, /*by_target=*/false, succ_offsets_, succs_);
}

std::span<const Arc> TaskGraph::predecessors(TaskId t) const {
  return {preds_.data() + pred_offsets_[t], pred_offsets_[t + 1] - pred_offsets_[t]};
}

std::span<const Arc> TaskGraph::successors(TaskId t) const {
  return {succs_.data() + succ_offsets_[t], succ_offsets_[t + 1] - succ_offsets_[t]};
}

std::vector<Time> bottom_levels(const TaskGraph& g) {
  std::vector<Time> level(g.task_count(), 0);
  const auto& order = g.topo_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Time below = 0;
    for (const Arc& s : g.successors(*it)) below = std::max(below, level[s.task]);
    level[*it] = g.cost(*it) + below;
  }
  return level;
}

Time critical_path_length(const TaskGraph& g) {
  const auto levels = bottom_levels(g);
  return *std::max_element(levels.begin(), levels.end());
}

TaskGraph augment_comm(const TaskGraph& g, const CommAugmentSpec& spec) {
  if (spec.min_cost < 1 || spec.max_cost < spec.min_cost)
    throw std::invalid_argument("comm augmentation range must satisfy 1 <= min <= max");
  Rng rng(spec.seed);
  std::vector<Edge> edges = g.edges();  // already (from, to) sorted
  for (Edge& e : edges)
    e.comm = static_cast<Time>(rng.between(static_cast<std::uint64_t>(spec.min_cost),
                                           static_cast<std::uint64_t>(spec.max_cost)));
  return TaskGraph(g.costs(), std::move(edges));
}

}  // namespace tgsched
