#include "tgsched/hybrid.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace tgsched {

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::kHybrid: return "hybrid";
    case Mode::kGaOnly: return "ga-only";
    case Mode::kLaOnly: return "la-only";
  }
  return "unknown";
}

std::optional<Mode> parse_mode(const std::string& name) {
  if (name == "hybrid") return Mode::kHybrid;
  if (name == "ga-only") return Mode::kGaOnly;
  if (name == "la-only") return Mode::kLaOnly;
  return std::nullopt;
}

void HybridConfig::validate() const {
  ga.validate();
  if (memory_depth < 1) throw std::invalid_argument("memory depth must be >= 1");
  if (processors < 1) throw std::invalid_argument("processor count must be >= 1");
  if (switch_stagnation < 1) throw std::invalid_argument("switch stagnation must be >= 1");
  if (term_stagnation < 1) throw std::invalid_argument("termination stagnation must be >= 1");
  if (max_iterations < 1) throw std::invalid_argument("iteration cap must be >= 1");
}

namespace {

class BestTracker {
 public:
  explicit BestTracker(RunReport& report) : report_(report) {}

  void offer(const std::vector<Gene>& genes, Time makespan, std::size_t iteration) {
    if (!seeded_ || makespan < report_.best_makespan) {
      seeded_ = true;
      report_.best_makespan = makespan;
      report_.best_chromosome = Chromosome{genes};
      report_.best_iteration = iteration;
      improved_ = true;
    }
  }

  /// Closes an iteration: records the trace entry and updates stagnation.
  void close_iteration() {
    report_.trace.push_back(report_.best_makespan);
    stagnant_ = improved_ ? 0 : stagnant_ + 1;
    improved_ = false;
  }

  std::size_t stagnant() const { return stagnant_; }
  void reset_stagnation() { stagnant_ = 0; }

 private:
  RunReport& report_;
  bool seeded_ = false;
  bool improved_ = false;
  std::size_t stagnant_ = 0;
};

}  // namespace

RunReport run(const TaskGraph& g, const HybridConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const std::size_t P = cfg.processors;

  RunReport report;
  report.config = cfg;
  Rng rng(cfg.ga.seed);
  EvalCounter evals;
  BestTracker best(report);
  std::size_t iteration = 0;

  Population pop = initial_population(g, P, cfg.ga, rng, evals);
  for (const Individual& ind : pop.members) best.offer(ind.chromosome.genes, ind.makespan, 0);
  best.close_iteration();
  best.reset_stagnation();

  bool run_la = cfg.mode != Mode::kGaOnly;
  if (cfg.mode != Mode::kLaOnly) {
    while (iteration < cfg.max_iterations) {
      pop = next_generation(pop, cfg.ga, g, P, rng, evals);
      ++iteration;
      ++report.ga_generations;
      for (const Individual& ind : pop.members) best.offer(ind.chromosome.genes, ind.makespan, iteration);
      best.close_iteration();

      if (cfg.mode == Mode::kHybrid) {
        const bool switch_now = cfg.switch_generation > 0
                                    ? report.ga_generations >= cfg.switch_generation
                                    : best.stagnant() >= cfg.switch_stagnation;
        if (switch_now) break;
      }
      if (best.stagnant() >= cfg.term_stagnation) {
        run_la = false;
        break;
      }
    }
  }

  if (run_la && iteration < cfg.max_iterations) {
    std::vector<Automaton> pool;
    pool.reserve(pop.members.size());
    // re-decoding here is not counted: the makespans are already known
    for (const Individual& ind : pop.members)
      pool.push_back(from_chromosome(ind.chromosome, g, P, cfg.memory_depth));
    if (cfg.initial_depth > 0)
      for (Automaton& a : pool) a.depths.assign(a.genes.size(), std::min(cfg.initial_depth, cfg.memory_depth));
    best.reset_stagnation();
    while (iteration < cfg.max_iterations) {
      for (Automaton& a : pool) {
        la_step(a, g, P, rng, &evals);
        best.offer(a.genes, a.makespan, iteration + 1);
      }
      ++iteration;
      ++report.la_iterations;
      best.close_iteration();
      if (best.stagnant() >= cfg.term_stagnation) break;
    }
    if (cfg.keep_automata) report.final_automata = std::move(pool);
  }

  report.best_schedule = decode(report.best_chromosome, g, P);
  report.evaluations = evals.evaluations;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

std::string report_to_json(const RunReport& report, const TaskGraph& g, const GraphInfo& info,
                           bool include_timing) {
  using nlohmann::ordered_json;
  const HybridConfig& cfg = report.config;

  ordered_json graph;
  graph["path"] = info.path;
  graph["format"] = info.format;
  graph["tasks"] = g.task_count();
  graph["edges"] = g.edges().size();
  if (info.augmentation) {
    graph["augmentation"] = {{"seed", info.augmentation->seed},
                             {"min_comm", info.augmentation->min_cost},
                             {"max_comm", info.augmentation->max_cost}};
  } else {
    graph["augmentation"] = nullptr;
  }

  ordered_json config;
  config["mode"] = to_string(cfg.mode);
  config["processors"] = cfg.processors;
  config["seed"] = cfg.ga.seed;
  config["popsize"] = cfg.ga.popsize;
  config["crossover_rate"] = cfg.ga.crossover_rate;
  config["mutation_rate"] = cfg.ga.mutation_rate;
  config["elite_fraction"] = cfg.ga.elite_fraction;
  config["elite_count"] = cfg.ga.elite_count();
  config["memory_depth"] = cfg.memory_depth;
  config["switch_stagnation"] = cfg.switch_stagnation;
  config["switch_generation"] = cfg.switch_generation;
  config["term_stagnation"] = cfg.term_stagnation;
  config["max_iterations"] = cfg.max_iterations;
  config["la_initial_depth"] = cfg.initial_depth;
  config["gene_range"] = gene_range(g.task_count(), cfg.processors);
  config["prng"] = "xoshiro256** seeded by splitmix64";

  ordered_json placements = ordered_json::array();
  for (TaskId t = 0; t < report.best_schedule.placements.size(); ++t) {
    const Placement& pl = report.best_schedule.placements[t];
    placements.push_back(
        {{"task", t}, {"processor", pl.processor}, {"start", pl.start}, {"finish", pl.finish}});
  }

  ordered_json doc;
  doc["graph"] = graph;
  doc["config"] = config;
  doc["best_makespan"] = report.best_makespan;
  doc["best_fitness"] = report.best_makespan > 0 ? 1.0 / static_cast<double>(report.best_makespan) : 0.0;
  doc["ga_generations"] = report.ga_generations;
  doc["la_iterations"] = report.la_iterations;
  doc["iterations"] = std::to_string(report.ga_generations) + "+" + std::to_string(report.la_iterations);
  doc["best_found_iteration"] = report.best_iteration;
  doc["evaluations"] = report.evaluations;
  if (include_timing) doc["wall_ms"] = report.wall_ms;
  doc["best_chromosome"] = report.best_chromosome.genes;
  doc["best_schedule"] = placements;
  doc["trace"] = report.trace;
  if (!report.final_automata.empty()) {
    ordered_json automata = ordered_json::array();
    for (const Automaton& a : report.final_automata)
      automata.push_back({{"makespan", a.makespan}, {"genes", a.genes}, {"depths", a.depths}});
    doc["final_automata"] = automata;
  }
  return doc.dump(2) + "\n";
}

ComparisonTable compare(const TaskGraph& g, const HybridConfig& base_cfg,
                        const std::vector<Mode>& modes, const std::vector<std::uint64_t>& seeds,
                        std::size_t jobs) {
  if (modes.empty() || seeds.empty())
    throw std::invalid_argument("compare needs at least one mode and one seed");
  base_cfg.validate();

  ComparisonTable table;
  table.rows.resize(modes.size() * seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t cell = next++; cell < table.rows.size(); cell = next++) {
      HybridConfig cfg = base_cfg;
      cfg.mode = modes[cell / seeds.size()];
      cfg.ga.seed = seeds[cell % seeds.size()];
      cfg.keep_automata = false;
      const RunReport r = run(g, cfg);
      table.rows[cell] = ComparisonRow{cfg.mode,         cfg.ga.seed,      r.best_makespan,
                                       r.ga_generations, r.la_iterations,  r.best_iteration,
                                       r.evaluations,    r.wall_ms};
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, table.rows.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t m = 0; m < modes.size(); ++m) {
    ModeSummary s;
    s.mode = modes[m];
    s.min_makespan = table.rows[m * seeds.size()].makespan;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      const ComparisonRow& row = table.rows[m * seeds.size() + i];
      s.mean_makespan += static_cast<double>(row.makespan);
      s.min_makespan = std::min(s.min_makespan, row.makespan);
      s.mean_ga_generations += static_cast<double>(row.ga_generations);
      s.mean_la_iterations += static_cast<double>(row.la_iterations);
      s.mean_evaluations += static_cast<double>(row.evaluations);
      s.mean_wall_ms += row.wall_ms;
    }
    const auto n = static_cast<double>(seeds.size());
    s.mean_makespan /= n;
    s.mean_ga_generations /= n;
    s.mean_la_iterations /= n;
    s.mean_evaluations /= n;
    s.mean_wall_ms /= n;
    table.summaries.push_back(s);
  }
  return table;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string table_to_csv(const ComparisonTable& table, const std::string& graph_name,
                         std::size_t processors) {
  std::ostringstream out;
  const std::string graph = csv_field(graph_name);
  out << "graph,processors,mode,seed,makespan,ga_gens,la_iters,evals,wall_ms\n";
  for (const ComparisonRow& r : table.rows)
    out << graph << ',' << processors << ',' << to_string(r.mode) << ',' << r.seed << ','
        << r.makespan << ',' << r.ga_generations << ',' << r.la_iterations << ',' << r.evaluations
        << ',' << fixed(r.wall_ms, 3) << '\n';
  for (const ModeSummary& s : table.summaries)
    out << graph << ',' << processors << ',' << to_string(s.mode) << ",mean,"
        << fixed(s.mean_makespan, 2) << ',' << fixed(s.mean_ga_generations, 2) << ','
        << fixed(s.mean_la_iterations, 2) << ',' << fixed(s.mean_evaluations, 2) << ','
        << fixed(s.mean_wall_ms, 3) << '\n';
  return out.str();
}

}  // namespace tgsched
