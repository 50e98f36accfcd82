#include "tgsched/oma.hpp"

#include <stdexcept>

namespace tgsched {

namespace {

Time evaluate(const std::vector<Gene>& genes, const TaskGraph& g, std::size_t processors,
              EvalCounter* evals) {
  if (evals) ++evals->evaluations;
  return decode_makespan(Chromosome{genes}, g, processors);
}

}  // namespace

Automaton from_chromosome(const Chromosome& c, const TaskGraph& g, std::size_t processors,
                          std::uint32_t memory_depth, EvalCounter* evals) {
  if (memory_depth < 1) throw std::invalid_argument("memory depth must be >= 1");
  Automaton a;
  a.genes = c.genes;
  a.depths.assign(c.size(), 1);
  a.memory_depth = memory_depth;
  a.makespan = evaluate(a.genes, g, processors, evals);
  return a;
}

Chromosome to_chromosome(const Automaton& a) { return Chromosome{a.genes}; }

LaResponse la_update(Automaton& a, std::size_t index, Gene candidate, const TaskGraph& g,
                     std::size_t processors, EvalCounter* evals) {
  if (index >= a.genes.size()) throw std::out_of_range("la_update: gene index out of range");
  const Gene previous = a.genes[index];
  a.genes[index] = candidate;
  const Time trial = evaluate(a.genes, g, processors, evals);

  if (trial < a.makespan) {
    if (a.depths[index] < a.memory_depth) ++a.depths[index];
    a.makespan = trial;
    return LaResponse::kReward;
  }
  if (a.depths[index] > 1) {
    a.genes[index] = previous;
    --a.depths[index];
    return LaResponse::kPenalty;
  }
  a.makespan = trial;
  return LaResponse::kReplace;
}

LaResponse la_step(Automaton& a, const TaskGraph& g, std::size_t processors, Rng& rng,
                   EvalCounter* evals) {
  const std::size_t index = rng.below(a.genes.size());
  const Gene candidate = rng.below(gene_range(a.genes.size(), processors));
  return la_update(a, index, candidate, g, processors, evals);
}

void la_sweep(std::vector<Automaton>& pool, const TaskGraph& g, std::size_t processors, Rng& rng,
              EvalCounter* evals) {
  for (Automaton& a : pool) la_step(a, g, processors, rng, evals);
}

}  // namespace tgsched
