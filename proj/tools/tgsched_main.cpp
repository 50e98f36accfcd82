// tgsched: command-line front end for the task-graph scheduler.
//
//   tgsched run      schedule one graph, write a JSON RunReport (+ optional Gantt)
//   tgsched compare  run modes x seeds, write a CSV comparison table
//   tgsched oracle   exact optimum for small graphs (<= 12 tasks)
//   tgsched gantt    render a chromosome or a saved report as text or SVG
//   tgsched augment  add seeded random comm costs to a graph, write native JSON
//
// Exit codes: 0 success, 2 usage error, 3 input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgsched/gantt.hpp"
#include "tgsched/graph_io.hpp"
#include "tgsched/hybrid.hpp"
#include "tgsched/oracle.hpp"

namespace {

using namespace tgsched;

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  std::string path;
  std::string format;  // empty: infer from extension
  bool augment = false;
  std::uint64_t augment_seed = 1;
  Time comm_min = 1;
  Time comm_max = 20;
};

void add_graph_options(CLI::App* cmd, GraphOptions& o, bool with_augment) {
  cmd->add_option("--graph", o.path, "Task graph file")->required();
  cmd->add_option("--format", o.format, "stg | native (default: by extension, .stg = stg)")
      ->check(CLI::IsMember({"stg", "native"}));
  if (!with_augment) return;
  cmd->add_flag("--augment", o.augment, "Replace comm costs with seeded uniform draws");
  cmd->add_option("--augment-seed", o.augment_seed, "Seed for --augment")->capture_default_str();
  cmd->add_option("--comm-min", o.comm_min, "Lowest added comm cost")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--comm-max", o.comm_max, "Highest added comm cost")->capture_default_str()->check(CLI::PositiveNumber);
}

GraphFormat resolve_format(const GraphOptions& o) {
  if (o.format == "stg") return GraphFormat::kStg;
  if (o.format == "native") return GraphFormat::kNative;
  const auto dot = o.path.rfind('.');
  return dot != std::string::npos && o.path.substr(dot) == ".stg" ? GraphFormat::kStg
                                                                  : GraphFormat::kNative;
}

struct LoadedGraph {
  TaskGraph graph;
  GraphInfo info;
};

LoadedGraph load_graph(const GraphOptions& o) {
  if (o.augment && o.comm_max < o.comm_min)
    throw UsageError("--comm-max must be >= --comm-min");
  const GraphFormat format = resolve_format(o);
  std::string text;
  try {
    text = read_file(o.path);
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
  try {
    TaskGraph g = parse_graph(text, format);
    GraphInfo info{o.path, format == GraphFormat::kStg ? "stg" : "native", std::nullopt};
    if (o.augment) {
      const CommAugmentSpec spec{o.augment_seed, o.comm_min, o.comm_max};
      g = augment_comm(g, spec);
      info.augmentation = spec;
    }
    return {std::move(g), std::move(info)};
  } catch (const ParseError& e) {
    throw InputError(o.path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void write_gantt(const std::string& path, const Schedule& s, const TaskGraph& g) {
  const auto problems = schedule_violations(s, g);
  if (!problems.empty())
    throw std::logic_error("refusing to render an invalid schedule: " + problems.front());
  write_file(path, ends_with(path, ".svg") ? render_gantt_svg(s) : render_gantt_text(s));
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used, 10);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-')
    throw UsageError("invalid " + what + " '" + text + "'");
  return value;
}

/// "a..b" (inclusive) or a comma-separated list.
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const std::uint64_t lo = parse_u64(text.substr(0, dots), "seed range");
    const std::uint64_t hi = parse_u64(text.substr(dots + 2), "seed range");
    if (hi < lo) throw UsageError("empty seed range '" + text + "'");
    if (hi - lo >= 1000000) throw UsageError("seed range too large");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) seeds.push_back(parse_u64(item, "seed"));
  if (seeds.empty()) throw UsageError("empty seed list");
  return seeds;
}

struct SearchOptions {
  std::size_t processors = 2;
  std::vector<std::string> modes{"hybrid"};
  std::optional<std::uint64_t> seed;
  std::size_t pop = 100;
  double crossover = 0.7;
  double mutation = 0.3;
  double elite = 0.1;
  std::uint32_t memory_depth = 5;
  std::size_t switch_stagnation = 5;
  std::size_t switch_generation = 0;
  std::size_t term_stagnation = 10;
  std::size_t max_iters = 10000;
  std::uint32_t initial_depth = 0;
};

void add_search_options(CLI::App* cmd, SearchOptions& o) {
  cmd->add_option("-p,--processors", o.processors, "Processor count")->capture_default_str()->check(CLI::Range(1, 1 << 16));
  cmd->add_option("--mode", o.modes, "hybrid | ga-only | la-only")
      ->capture_default_str()
      ->check(CLI::IsMember({"hybrid", "ga-only", "la-only"}));
  cmd->add_option("--pop", o.pop, "Population size")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--crossover", o.crossover, "Crossover rate")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--mutation", o.mutation, "Mutation rate")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--elite", o.elite, "Elite fraction, in (0,1)")->capture_default_str()->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--memory-depth", o.memory_depth, "OMA states per action")->capture_default_str()->check(CLI::Range(1, 1 << 16));
  cmd->add_option("--switch-stagnation", o.switch_stagnation, "GA generations without improvement before LA")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--switch-generation", o.switch_generation, "Switch to LA after exactly this many generations (0 = off)")
      ->capture_default_str();
  cmd->add_option("--term-stagnation", o.term_stagnation, "Iterations without improvement before stopping")
      ->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--la-initial-depth", o.initial_depth, "Depth given to every action when the GA hands over to LA (0 = boundary state 1)")
      ->capture_default_str()->check(CLI::Range(0, 1 << 16));
  cmd->add_option("--max-iters", o.max_iters, "Iteration cap")->capture_default_str()->check(CLI::PositiveNumber);
}

HybridConfig make_config(const SearchOptions& o, std::uint64_t seed, Mode mode) {
  HybridConfig cfg;
  cfg.processors = o.processors;
  cfg.mode = mode;
  cfg.ga.seed = seed;
  cfg.ga.popsize = o.pop;
  cfg.ga.crossover_rate = o.crossover;
  cfg.ga.mutation_rate = o.mutation;
  cfg.ga.elite_fraction = o.elite;
  cfg.memory_depth = o.memory_depth;
  cfg.switch_stagnation = o.switch_stagnation;
  cfg.switch_generation = o.switch_generation;
  cfg.term_stagnation = o.term_stagnation;
  cfg.max_iterations = o.max_iters;
  cfg.initial_depth = o.initial_depth;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

std::uint64_t effective_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TGSCHED_SEED"); env && *env) return parse_u64(env, "TGSCHED_SEED");
  return 1;
}

Mode single_mode(const SearchOptions& o) {
  if (o.modes.size() != 1) throw UsageError("run takes exactly one --mode");
  return *parse_mode(o.modes.front());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task-graph scheduling with a hybrid genetic algorithm / object migration automata"};
  app.require_subcommand(1);

  GraphOptions graph_opts;
  SearchOptions search_opts;
  std::string out_path;
  std::string report_out = "run_report.json";
  std::string gantt_path;
  bool timing = false;
  bool dump_automata = false;
  std::string seeds_text;
  std::size_t jobs = 1;
  std::string report_path;
  std::string genes_text;
  std::uint64_t augment_seed = 1;
  Time comm_min = 1;
  Time comm_max = 20;

  auto* run_cmd = app.add_subcommand("run", "Schedule a graph and write a JSON RunReport");
  add_graph_options(run_cmd, graph_opts, true);
  add_search_options(run_cmd, search_opts);
  run_cmd->add_option("--seed", search_opts.seed, "Run seed (fallback: $TGSCHED_SEED, then 1)");
  run_cmd->add_option("--out", report_out, "RunReport path")->capture_default_str();
  run_cmd->add_option("--gantt", gantt_path, "Also write a Gantt chart (.svg = SVG, else text)");
  run_cmd->add_flag("--timing", timing, "Include wall time in the report (breaks byte-reproducibility)");
  run_cmd->add_flag("--dump-automata", dump_automata, "Include final automata genes/depths in the report");

  auto* cmp_cmd = app.add_subcommand("compare", "Run modes x seeds and write a CSV table");
  add_graph_options(cmp_cmd, graph_opts, true);
  add_search_options(cmp_cmd, search_opts);
  cmp_cmd->add_option("--seed", search_opts.seed, "Single seed");
  cmp_cmd->add_option("--seeds", seeds_text, "Seed range a..b or list a,b,c");
  cmp_cmd->add_option("--jobs", jobs, "Worker threads")->capture_default_str()->check(CLI::Range(1, 1024));
  cmp_cmd->add_option("--out", out_path, "CSV path (default: stdout)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum for graphs of at most 12 tasks");
  add_graph_options(oracle_cmd, graph_opts, true);
  oracle_cmd->add_option("-p,--processors", search_opts.processors, "Processor count")->capture_default_str()->check(CLI::Range(1, 64));
  oracle_cmd->add_option("--gantt", gantt_path, "Write the witness schedule as a Gantt chart");

  auto* gantt_cmd = app.add_subcommand("gantt", "Render a schedule from a report or a gene list");
  add_graph_options(gantt_cmd, graph_opts, true);
  gantt_cmd->add_option("-p,--processors", search_opts.processors, "Processor count (ignored with --report)")->capture_default_str()->check(CLI::Range(1, 1 << 16));
  auto* report_opt = gantt_cmd->add_option("--report", report_path, "RunReport JSON to take best_chromosome from");
  gantt_cmd->add_option("--genes", genes_text, "Comma-separated gene values")->excludes(report_opt);
  gantt_cmd->add_option("--out", out_path, "Output path (.svg = SVG, else text)")->required();

  auto* aug_cmd = app.add_subcommand("augment", "Add seeded comm costs and write native JSON");
  aug_cmd->add_option("--graph", graph_opts.path, "Input graph")->required();
  aug_cmd->add_option("--format", graph_opts.format, "stg | native")->check(CLI::IsMember({"stg", "native"}));
  aug_cmd->add_option("--seed", augment_seed, "Augmentation seed")->capture_default_str();
  aug_cmd->add_option("--comm-min", comm_min, "Lowest comm cost")->capture_default_str()->check(CLI::PositiveNumber);
  aug_cmd->add_option("--comm-max", comm_max, "Highest comm cost")->capture_default_str()->check(CLI::PositiveNumber);
  aug_cmd->add_option("--out", out_path, "Output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*run_cmd) {
      const Mode mode = single_mode(search_opts);
      HybridConfig cfg = make_config(search_opts, effective_seed(search_opts.seed), mode);
      cfg.keep_automata = dump_automata;
      const LoadedGraph loaded = load_graph(graph_opts);
      const RunReport report = run(loaded.graph, cfg);
      const std::string json = report_to_json(report, loaded.graph, loaded.info, timing);
      write_file(report_out, json);
      if (!gantt_path.empty()) write_gantt(gantt_path, report.best_schedule, loaded.graph);
      std::cout << "makespan " << report.best_makespan << "  iterations " << report.ga_generations
                << '+' << report.la_iterations << "  evaluations " << report.evaluations
                << "  wall_ms " << report.wall_ms << '\n';
    } else if (*cmp_cmd) {
      std::vector<std::uint64_t> seeds;
      if (!seeds_text.empty()) {
        if (search_opts.seed) throw UsageError("--seed and --seeds are mutually exclusive");
        seeds = parse_seed_list(seeds_text);
      } else {
        seeds = {effective_seed(search_opts.seed)};
      }
      std::vector<Mode> modes;
      for (const auto& m : search_opts.modes) modes.push_back(*parse_mode(m));
      const HybridConfig base = make_config(search_opts, seeds.front(), modes.front());
      const LoadedGraph loaded = load_graph(graph_opts);
      const ComparisonTable table = compare(loaded.graph, base, modes, seeds, jobs);
      const std::string csv = table_to_csv(table, loaded.info.path, base.processors);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        write_file(out_path, csv);
      }
      for (const ModeSummary& s : table.summaries)
        std::cerr << to_string(s.mode) << ": mean makespan " << s.mean_makespan << ", min "
                  << s.min_makespan << ", mean iterations "
                  << s.mean_ga_generations + s.mean_la_iterations << '\n';
    } else if (*oracle_cmd) {
      const LoadedGraph loaded = load_graph(graph_opts);
      OracleResult result;
      try {
        result = brute_force_optimum(loaded.graph, search_opts.processors);
      } catch (const OracleSizeError& e) {
        throw InputError(e.what());
      }
      if (!gantt_path.empty()) write_gantt(gantt_path, result.witness, loaded.graph);
      std::cout << "optimum " << result.optimum_makespan << "  nodes " << result.nodes_explored
                << '\n'
                << render_gantt_text(result.witness);
    } else if (*gantt_cmd) {
      const LoadedGraph loaded = load_graph(graph_opts);
      Chromosome c;
      std::size_t processors = search_opts.processors;
      if (!report_path.empty()) {
        std::string text;
        try {
          text = read_file(report_path);
        } catch (const std::exception& e) {
          throw InputError(e.what());
        }
        try {
          const auto doc = nlohmann::json::parse(text);
          c.genes = doc.at("best_chromosome").get<std::vector<Gene>>();
          processors = doc.at("config").at("processors").get<std::size_t>();
        } catch (const nlohmann::json::exception& e) {
          throw InputError(report_path + ": not a RunReport (" + e.what() + ")");
        }
      } else if (!genes_text.empty()) {
        std::stringstream in(genes_text);
        std::string item;
        while (std::getline(in, item, ',')) c.genes.push_back(parse_u64(item, "gene"));
      } else {
        throw UsageError("gantt needs --report or --genes");
      }
      if (c.size() != loaded.graph.task_count())
        throw InputError("chromosome has " + std::to_string(c.size()) + " genes, graph has " +
                         std::to_string(loaded.graph.task_count()) + " tasks");
      const Schedule s = decode(c, loaded.graph, processors);
      write_gantt(out_path, s, loaded.graph);
      std::cout << "makespan " << s.makespan << '\n';
    } else if (*aug_cmd) {
      if (comm_max < comm_min) throw UsageError("--comm-max must be >= --comm-min");
      const LoadedGraph loaded = load_graph(graph_opts);
      const TaskGraph g = augment_comm(loaded.graph, CommAugmentSpec{augment_seed, comm_min, comm_max});
      write_file(out_path, to_native(g));
      std::cout << "wrote " << out_path << " (" << g.task_count() << " tasks, " << g.edges().size()
                << " edges)\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
