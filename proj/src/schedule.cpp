#include "tgsched/schedule.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tgsched {

namespace {

template <typename OnPlace>
Time list_schedule(const Chromosome& c, const TaskGraph& g, std::size_t processors,
                   OnPlace&& on_place) {
  const std::size_t k = g.task_count();
  if (c.size() != k)
    throw std::invalid_argument("chromosome has " + std::to_string(c.size()) +
                                " genes but the graph has " + std::to_string(k) + " tasks");
  if (processors == 0) throw std::invalid_argument("processor count must be >= 1");

  auto lower_priority = [&](TaskId a, TaskId b) {
    if (c.genes[a] != c.genes[b]) return c.genes[a] < c.genes[b];
    return a > b;
  };
  std::priority_queue<TaskId, std::vector<TaskId>, decltype(lower_priority)> ready(lower_priority);

  std::vector<std::size_t> waiting(k);
  for (TaskId t = 0; t < k; ++t) {
    waiting[t] = g.predecessors(t).size();
    if (waiting[t] == 0) ready.push(t);
  }

  std::vector<Time> free_at(processors, 0);
  std::vector<Time> finish(k, 0);
  std::vector<ProcessorId> where(k, 0);
  Time span = 0;

  while (!ready.empty()) {
    const TaskId t = ready.top();
    ready.pop();
    const ProcessorId p = processor_of(c.genes[t], processors);
    Time start = free_at[p];
    for (const Arc& pred : g.predecessors(t))
      start = std::max(start, finish[pred.task] + (where[pred.task] != p ? pred.comm : 0));
    const Time end = start + g.cost(t);
    finish[t] = end;
    where[t] = p;
    free_at[p] = end;
    span = std::max(span, end);
    on_place(t, Placement{p, start, end});
    for (const Arc& succ : g.successors(t))
      if (--waiting[succ.task] == 0) ready.push(succ.task);
  }
  return span;
}

}  // namespace

Schedule decode(const Chromosome& c, const TaskGraph& g, std::size_t processors) {
  Schedule s;
  s.processor_count = processors;
  s.placements.resize(g.task_count());
  s.makespan = list_schedule(c, g, processors,
                             [&](TaskId t, const Placement& pl) { s.placements[t] = pl; });
  return s;
}

Time decode_makespan(const Chromosome& c, const TaskGraph& g, std::size_t processors) {
  return list_schedule(c, g, processors, [](TaskId, const Placement&) {});
}

std::vector<std::string> schedule_violations(const Schedule& s, const TaskGraph& g) {
  std::vector<std::string> out;
  const std::size_t k = g.task_count();
  if (s.placements.size() != k) {
    out.push_back("schedule has " + std::to_string(s.placements.size()) + " placements for " +
                  std::to_string(k) + " tasks");
    return out;
  }
  Time latest = 0;
  for (TaskId t = 0; t < k; ++t) {
    const Placement& pl = s.placements[t];
    if (pl.processor >= s.processor_count)
      out.push_back("task " + std::to_string(t) + " on processor " +
                    std::to_string(pl.processor) + " outside [0, " +
                    std::to_string(s.processor_count) + ")");
    if (pl.start < 0) out.push_back("task " + std::to_string(t) + " starts before time 0");
    if (pl.finish != pl.start + g.cost(t))
      out.push_back("task " + std::to_string(t) + ": finish " + std::to_string(pl.finish) +
                    " != start " + std::to_string(pl.start) + " + cost " +
                    std::to_string(g.cost(t)));
    latest = std::max(latest, pl.finish);
  }

  std::vector<TaskId> by_start(k);
  for (TaskId t = 0; t < k; ++t) by_start[t] = t;
  std::sort(by_start.begin(), by_start.end(), [&](TaskId a, TaskId b) {
    const auto& pa = s.placements[a];
    const auto& pb = s.placements[b];
    if (pa.processor != pb.processor) return pa.processor < pb.processor;
    if (pa.start != pb.start) return pa.start < pb.start;
    return pa.finish < pb.finish;
  });
  // zero-length tasks occupy no time and cannot overlap anything
  std::size_t last = k;  // last non-empty placement seen on the current processor
  for (std::size_t i = 0; i < k; ++i) {
    const Placement& cur = s.placements[by_start[i]];
    if (cur.start == cur.finish) continue;
    if (last != k) {
      const Placement& prev = s.placements[by_start[last]];
      if (prev.processor == cur.processor && cur.start < prev.finish)
        out.push_back("tasks " + std::to_string(by_start[last]) + " and " +
                      std::to_string(by_start[i]) + " overlap on processor " +
                      std::to_string(cur.processor));
      if (prev.processor == cur.processor && prev.finish > cur.finish) continue;
    }
    last = i;
  }

  for (const Edge& e : g.edges()) {
    const Placement& u = s.placements[e.from];
    const Placement& v = s.placements[e.to];
    const Time ready = u.finish + (u.processor != v.processor ? e.comm : 0);
    if (v.start < ready)
      out.push_back("edge " + std::to_string(e.from) + "->" + std::to_string(e.to) +
                    ": successor starts at " + std::to_string(v.start) + " before " +
                    std::to_string(ready));
  }

  if (s.makespan != latest)
    out.push_back("makespan " + std::to_string(s.makespan) + " != latest finish " +
                  std::to_string(latest));
  return out;
}

}  // namespace tgsched
