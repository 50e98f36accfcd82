#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tgsched/rng.hpp"
#include "tgsched/schedule.hpp"
#include "tgsched/task_graph.hpp"

namespace tgsched {

struct GAConfig {
  std::size_t popsize = 100;
  double crossover_rate = 0.7;
  double mutation_rate = 0.3;
  double elite_fraction = 0.1;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument if any field is out of range.
  void validate() const;
  /// ceil(elite_fraction * popsize), clamped to [1, popsize].
  std::size_t elite_count() const;
};

struct Individual {
  Chromosome chromosome;
  Time makespan = 0;
};

struct Population {
  std::vector<Individual> members;
  std::size_t generation = 0;

  /// Index of the lowest-makespan member; earliest on ties.
  std::size_t best_index() const;
  const Individual& best() const { return members[best_index()]; }
};

/// 1 / makespan. Throws std::domain_error for makespan <= 0.
double fitness(Time makespan);

Chromosome random_chromosome(std::size_t task_count, std::size_t processors, Rng& rng);

/// Half-open cut [lo, hi) with 0 <= lo < hi <= length.
struct Cut {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

/// Two distinct points drawn uniformly from [0, length], redrawn while equal,
/// returned in ascending order.
Cut random_cut(std::size_t length, Rng& rng);

/// Rank of each element of values (1 = largest; equal values ranked by
/// position, earlier first).
std::vector<std::size_t> descending_ranks(const std::vector<Gene>& values);

/// Weight-mapping crossover.
///
/// Each child keeps its own parent outside the cut. Inside the cut, child1
/// receives p2's segment values rearranged so they follow the rank pattern of
/// p1's segment (largest donor value where p1 had its largest, and so on);
/// child2 is the mirror image. Throws std::invalid_argument on a length
/// mismatch or an invalid cut.
std::pair<Chromosome, Chromosome> wmx_crossover(const Chromosome& p1, const Chromosome& p2, Cut cut);

/// Same, with the cut drawn by random_cut.
std::pair<Chromosome, Chromosome> wmx_crossover(const Chromosome& p1, const Chromosome& p2, Rng& rng);

/// Exchanges the genes at positions i and j.
Chromosome swap_genes(Chromosome c, std::size_t i, std::size_t j);

/// Swaps two distinct uniformly chosen positions. A single-gene chromosome is
/// returned unchanged and consumes no randomness.
Chromosome swap_mutation(Chromosome c, Rng& rng);

/// Decode cost counter shared by the GA and LA layers.
struct EvalCounter {
  std::uint64_t evaluations = 0;
};

Population initial_population(const TaskGraph& g, std::size_t processors, const GAConfig& cfg,
                              Rng& rng, EvalCounter& evals);

/// One generation: elites copied unchanged (stable order by makespan), the
/// rest bred by size-2 tournament, WMX with crossover_rate, swap mutation per
/// child with mutation_rate, then evaluated once.
Population next_generation(const Population& pop, const GAConfig& cfg, const TaskGraph& g,
                           std::size_t processors, Rng& rng, EvalCounter& evals);

}  // namespace tgsched
