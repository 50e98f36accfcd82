#include "tgsched/ga.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace tgsched {

void GAConfig::validate() const {
  if (popsize < 2) throw std::invalid_argument("popsize must be >= 2");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0))
    throw std::invalid_argument("crossover rate must lie in [0, 1]");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
    throw std::invalid_argument("mutation rate must lie in [0, 1]");
  if (!(elite_fraction > 0.0 && elite_fraction < 1.0))
    throw std::invalid_argument("elite fraction must lie in (0, 1)");
}

std::size_t GAConfig::elite_count() const {
  // subtract a hair so 0.1 * 100 is 10, not 11 from rounding noise
  const auto n = static_cast<std::size_t>(std::ceil(elite_fraction * static_cast<double>(popsize) - 1e-9));
  return std::clamp<std::size_t>(n, 1, popsize);
}

std::size_t Population::best_index() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i)
    if (members[i].makespan < members[best].makespan) best = i;
  return best;
}

double fitness(Time makespan) {
  if (makespan <= 0)
    throw std::domain_error("fitness undefined for makespan " + std::to_string(makespan) +
                            " (degenerate instance: all task costs zero?)");
  return 1.0 / static_cast<double>(makespan);
}

Chromosome random_chromosome(std::size_t task_count, std::size_t processors, Rng& rng) {
  const Gene range = gene_range(task_count, processors);
  Chromosome c;
  c.genes.resize(task_count);
  for (Gene& g : c.genes) g = rng.below(range);
  return c;
}

Cut random_cut(std::size_t length, Rng& rng) {
  std::size_t a = 0;
  std::size_t b = 0;
  do {
    a = rng.below(length + 1);
    b = rng.below(length + 1);
  } while (a == b);
  return a < b ? Cut{a, b} : Cut{b, a};
}

std::vector<std::size_t> descending_ranks(const std::vector<Gene>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<std::size_t> rank(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
  return rank;
}

namespace {

// Writes donor[lo, hi) into child[lo, hi) following pattern[lo, hi)'s ranks.
void map_segment(const Chromosome& pattern, const Chromosome& donor, Cut cut, Chromosome& child) {
  const std::vector<Gene> shape(pattern.genes.begin() + cut.lo, pattern.genes.begin() + cut.hi);
  std::vector<Gene> values(donor.genes.begin() + cut.lo, donor.genes.begin() + cut.hi);
  std::sort(values.begin(), values.end(), std::greater<>());
  const auto rank = descending_ranks(shape);
  for (std::size_t i = 0; i < shape.size(); ++i) child.genes[cut.lo + i] = values[rank[i] - 1];
}

}  // namespace

std::pair<Chromosome, Chromosome> wmx_crossover(const Chromosome& p1, const Chromosome& p2, Cut cut) {
  if (p1.size() != p2.size()) throw std::invalid_argument("wmx: parents differ in length");
  if (!(cut.lo < cut.hi && cut.hi <= p1.size()))
    throw std::invalid_argument("wmx: cut must satisfy lo < hi <= length");
  std::pair<Chromosome, Chromosome> children{p1, p2};
  map_segment(p1, p2, cut, children.first);
  map_segment(p2, p1, cut, children.second);
  return children;
}

std::pair<Chromosome, Chromosome> wmx_crossover(const Chromosome& p1, const Chromosome& p2, Rng& rng) {
  if (p1.size() != p2.size()) throw std::invalid_argument("wmx: parents differ in length");
  return wmx_crossover(p1, p2, random_cut(p1.size(), rng));
}

Chromosome swap_genes(Chromosome c, std::size_t i, std::size_t j) {
  std::swap(c.genes.at(i), c.genes.at(j));
  return c;
}

Chromosome swap_mutation(Chromosome c, Rng& rng) {
  const std::size_t k = c.size();
  if (k < 2) return c;
  const std::size_t i = rng.below(k);
  std::size_t j = rng.below(k - 1);
  if (j >= i) ++j;
  return swap_genes(std::move(c), i, j);
}

Population initial_population(const TaskGraph& g, std::size_t processors, const GAConfig& cfg,
                              Rng& rng, EvalCounter& evals) {
  Population pop;
  pop.members.reserve(cfg.popsize);
  for (std::size_t i = 0; i < cfg.popsize; ++i) {
    Individual ind{random_chromosome(g.task_count(), processors, rng), 0};
    ind.makespan = decode_makespan(ind.chromosome, g, processors);
    ++evals.evaluations;
    pop.members.push_back(std::move(ind));
  }
  return pop;
}

namespace {

const Individual& tournament(const Population& pop, Rng& rng) {
  const std::size_t n = pop.members.size();
  const std::size_t a = rng.below(n);
  std::size_t b = rng.below(n - 1);
  if (b >= a) ++b;
  const Individual& x = pop.members[a];
  const Individual& y = pop.members[b];
  if (x.makespan != y.makespan) return x.makespan < y.makespan ? x : y;
  return a < b ? x : y;
}

}  // namespace

Population next_generation(const Population& pop, const GAConfig& cfg, const TaskGraph& g,
                           std::size_t processors, Rng& rng, EvalCounter& evals) {
  const std::size_t n = pop.members.size();
  const std::size_t elites = std::min(cfg.elite_count(), n);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return pop.members[a].makespan < pop.members[b].makespan;
  });

  Population next;
  next.generation = pop.generation + 1;
  next.members.reserve(n);
  for (std::size_t i = 0; i < elites; ++i) next.members.push_back(pop.members[order[i]]);

  while (next.members.size() < n) {
    const Individual& mother = tournament(pop, rng);
    const Individual& father = tournament(pop, rng);
    std::pair<Chromosome, Chromosome> kids{mother.chromosome, father.chromosome};
    if (rng.chance(cfg.crossover_rate)) kids = wmx_crossover(mother.chromosome, father.chromosome, rng);
    for (Chromosome* kid : {&kids.first, &kids.second}) {
      if (next.members.size() == n) break;
      if (rng.chance(cfg.mutation_rate)) *kid = swap_mutation(std::move(*kid), rng);
      Individual ind{std::move(*kid), 0};
      ind.makespan = decode_makespan(ind.chromosome, g, processors);
      ++evals.evaluations;
      next.members.push_back(std::move(ind));
    }
  }
  return next;
}

}  // namespace tgsched
