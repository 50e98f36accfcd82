#pragma once

#include <cstdint>
#include <vector>

#include "tgsched/ga.hpp"
#include "tgsched/rng.hpp"
#include "tgsched/schedule.hpp"

namespace tgsched {

/// Object Migration Automaton built from a chromosome.
///
/// Each task's gene is one action (object). The action owns N linearly
/// ordered states numbered 1..N: depth 1 is the boundary state, depth N the
/// innermost. Reward moves an action one state inward (capped at N). Penalty
/// moves it one state outward; a penalty that arrives while the action is
/// already at the boundary migrates the object, i.e. the gene is replaced.
struct Automaton {
  std::vector<Gene> genes;
  std::vector<std::uint32_t> depths;
  std::uint32_t memory_depth = 5;
  Time makespan = 0;
};

/// Genes copied, all depths at the boundary (1), makespan cached.
Automaton from_chromosome(const Chromosome& c, const TaskGraph& g, std::size_t processors,
                          std::uint32_t memory_depth, EvalCounter* evals = nullptr);

Chromosome to_chromosome(const Automaton& a);

enum class LaResponse { kReward, kPenalty, kReplace };

/// Environment response to proposing `candidate` for gene `index`:
///   candidate makespan <  current  -> reward: gene replaced, depth + 1 (cap N)
///   otherwise, depth > 1           -> penalty: gene kept, depth - 1
///   otherwise (at boundary)        -> replace: gene replaced, depth stays 1
LaResponse la_update(Automaton& a, std::size_t index, Gene candidate, const TaskGraph& g,
                     std::size_t processors, EvalCounter* evals = nullptr);

/// One interaction: index uniform in [0, k), candidate uniform in
/// [0, gene_range), then la_update.
LaResponse la_step(Automaton& a, const TaskGraph& g, std::size_t processors, Rng& rng,
                   EvalCounter* evals = nullptr);

/// One la_step per automaton, in index order, all drawing from rng.
void la_sweep(std::vector<Automaton>& pool, const TaskGraph& g, std::size_t processors, Rng& rng,
              EvalCounter* evals = nullptr);

}  // namespace tgsched
