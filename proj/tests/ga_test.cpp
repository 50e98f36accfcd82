#include "tgsched/ga.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "testing/random_graphs.hpp"

namespace tgsched {
namespace {

std::vector<Gene> segment(const Chromosome& c, Cut cut) {
  return {c.genes.begin() + cut.lo, c.genes.begin() + cut.hi};
}

// Walking positions in `pattern`'s descending-rank order must visit `values`
// in non-increasing order. Exact rank equality is impossible when `values`
// holds duplicates that `pattern` does not.
bool follows_rank_pattern(const std::vector<Gene>& values, const std::vector<Gene>& pattern) {
  const auto ranks = descending_ranks(pattern);
  std::vector<Gene> by_rank(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) by_rank[ranks[i] - 1] = values[i];
  return std::is_sorted(by_rank.rbegin(), by_rank.rend());
}

TEST(Fitness, ReciprocalOfMakespan) {
  EXPECT_DOUBLE_EQ(fitness(21), 1.0 / 21.0);
  EXPECT_DOUBLE_EQ(fitness(1), 1.0);
  EXPECT_THROW(fitness(0), std::domain_error);
}

TEST(Fitness, StrictlyAntitone) {
  for (Time a = 1; a <= 300; ++a)
    for (Time b = a + 1; b <= 300; ++b) ASSERT_GT(fitness(a), fitness(b));
}

TEST(RandomChromosome, RangeAndDeterminism) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) EXPECT_LT(random_chromosome(1, 1, rng).genes[0], 2u);
  Rng a(55), b(55);
  EXPECT_EQ(random_chromosome(9, 2, a), random_chromosome(9, 2, b));
  Rng c(5);
  for (Gene g : random_chromosome(30, 3, c).genes) EXPECT_LT(g, gene_range(30, 3));
}

TEST(RandomChromosome, ProcessorsAreBalanced) {
  Rng rng(2718);
  const int draws = 100000;
  long on_zero = 0;
  for (int i = 0; i < draws; ++i) on_zero += processor_of(random_chromosome(9, 2, rng).genes[0], 2) == 0;
  const double sigma = std::sqrt(draws * 0.25);
  EXPECT_LT(std::abs(static_cast<double>(on_zero) - draws / 2.0), 3 * sigma);
}

TEST(DescendingRanks, StableTies) {
  EXPECT_EQ(descending_ranks({3, 9, 5}), (std::vector<std::size_t>{3, 1, 2}));
  EXPECT_EQ(descending_ranks({4, 4, 7}), (std::vector<std::size_t>{2, 3, 1}));
}

TEST(Wmx, WeightOrderExampleFromTheOperatorDefinition) {
  // pattern segment 9-7-5-2 has weight order 1-2-3-4; donor 6-13-15-11
  const Chromosome p1{{1, 9, 7, 5, 2, 8}};
  const Chromosome p2{{3, 6, 13, 15, 11, 4}};
  const auto [c1, c2] = wmx_crossover(p1, p2, Cut{1, 5});
  EXPECT_EQ(c1.genes, (std::vector<Gene>{1, 15, 13, 11, 6, 8}));
  // mirror: p1's values in p2's rank pattern (ranks 4, 2, 1, 3)
  EXPECT_EQ(c2.genes, (std::vector<Gene>{3, 2, 7, 9, 5, 4}));
}

TEST(Wmx, HandMappedExample) {
  const auto [c1, c2] = wmx_crossover(Chromosome{{3, 9, 5}}, Chromosome{{10, 20, 30}}, Cut{0, 3});
  EXPECT_EQ(c1.genes, (std::vector<Gene>{10, 30, 20}));
  EXPECT_EQ(c2.genes, (std::vector<Gene>{3, 5, 9}));
}

TEST(Wmx, EqualSegmentsAreAFixedPoint) {
  const Chromosome p1{{5, 1, 7, 3, 2}};
  const Chromosome p2{{0, 1, 7, 3, 9}};
  const auto [c1, c2] = wmx_crossover(p1, p2, Cut{1, 4});
  EXPECT_EQ(c1, p1);
  EXPECT_EQ(c2, p2);
}

TEST(Wmx, RejectsBadInput) {
  const Chromosome a{{1, 2, 3}};
  EXPECT_THROW(wmx_crossover(a, Chromosome{{1, 2}}, Cut{0, 1}), std::invalid_argument);
  EXPECT_THROW(wmx_crossover(a, a, Cut{2, 2}), std::invalid_argument);
  EXPECT_THROW(wmx_crossover(a, a, Cut{1, 4}), std::invalid_argument);
}

TEST(Wmx, MultisetAndRankPatternOnRandomCases) {
  Rng rng(10000);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t k = rng.between(1, 20);
    const std::size_t P = rng.between(1, 4);
    const Chromosome p1 = random_chromosome(k, P, rng);
    const Chromosome p2 = random_chromosome(k, P, rng);
    const Cut cut = random_cut(k, rng);
    ASSERT_LT(cut.lo, cut.hi);
    ASSERT_LE(cut.hi, k);
    const auto [c1, c2] = wmx_crossover(p1, p2, cut);

    for (std::size_t i = 0; i < k; ++i) {
      if (i >= cut.lo && i < cut.hi) continue;
      ASSERT_EQ(c1.genes[i], p1.genes[i]);
      ASSERT_EQ(c2.genes[i], p2.genes[i]);
    }
    for (const auto& [child, own, donor] :
         {std::tuple{&c1, &p1, &p2}, std::tuple{&c2, &p2, &p1}}) {
      auto got = segment(*child, cut);
      auto want = segment(*donor, cut);
      ASSERT_TRUE(follows_rank_pattern(got, segment(*own, cut)));
      if (std::set<Gene>(got.begin(), got.end()).size() == got.size())
        ASSERT_EQ(descending_ranks(got), descending_ranks(segment(*own, cut)));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      ASSERT_EQ(got, want);
      for (Gene g : child->genes) ASSERT_LT(g, gene_range(k, P));
    }
  }
}

TEST(SwapMutation, Examples) {
  EXPECT_EQ(swap_genes(Chromosome{{1, 2}}, 0, 1).genes, (std::vector<Gene>{2, 1}));
  Rng rng(4);
  const Chromosome one{{7}};
  EXPECT_EQ(swap_mutation(one, rng), one);
  Rng r2(9);
  EXPECT_EQ(swap_mutation(Chromosome{{1, 2}}, r2).genes, (std::vector<Gene>{2, 1}));
}

TEST(SwapMutation, IsAnInvolution) {
  Rng rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const Chromosome c = random_chromosome(rng.between(2, 12), 2, rng);
    const std::size_t i = rng.below(c.size());
    const std::size_t j = rng.below(c.size());
    EXPECT_EQ(swap_genes(swap_genes(c, i, j), i, j), c);
  }
}

TEST(SwapMutation, CoversEveryPositionPair) {
  Chromosome c;
  for (Gene g = 0; g < 9; ++g) c.genes.push_back(g);
  Rng rng(321);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (int trial = 0; trial < 10000; ++trial) {
    const Chromosome m = swap_mutation(c, rng);
    std::vector<std::size_t> changed;
    for (std::size_t i = 0; i < 9; ++i)
      if (m.genes[i] != c.genes[i]) changed.push_back(i);
    ASSERT_EQ(changed.size(), 2u);
    seen.insert({changed[0], changed[1]});
  }
  EXPECT_EQ(seen.size(), 36u);
}

class NextGeneration : public ::testing::Test {
 protected:
  void SetUp() override {
    Rng graph_rng(606);
    graph_ = testing::random_dag({.min_tasks = 15, .max_tasks = 15}, graph_rng);
  }
  std::optional<TaskGraph> graph_;
};

TEST_F(NextGeneration, KeepsElitesAndPopulationSize) {
  const GAConfig cfg;
  ASSERT_EQ(cfg.elite_count(), 10u);
  Rng rng(1);
  EvalCounter evals;
  const Population pop = initial_population(*graph_, 2, cfg, rng, evals);
  ASSERT_EQ(evals.evaluations, 100u);

  const Population next = next_generation(pop, cfg, *graph_, 2, rng, evals);
  EXPECT_EQ(next.members.size(), 100u);
  EXPECT_EQ(next.generation, 1u);
  EXPECT_EQ(evals.evaluations, 190u);  // 90 offspring evaluated

  std::vector<Time> sorted;
  for (const auto& ind : pop.members) sorted.push_back(ind.makespan);
  std::stable_sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(next.members[i].makespan, sorted[i]);
  for (const auto& ind : next.members)
    EXPECT_EQ(ind.makespan, decode_makespan(ind.chromosome, *graph_, 2));
}

TEST_F(NextGeneration, BestNeverWorsens) {
  GAConfig cfg;
  cfg.popsize = 30;
  Rng rng(77);
  EvalCounter evals;
  Population pop = initial_population(*graph_, 3, cfg, rng, evals);
  Time best = pop.best().makespan;
  for (int gen = 0; gen < 60; ++gen) {
    pop = next_generation(pop, cfg, *graph_, 3, rng, evals);
    ASSERT_LE(pop.best().makespan, best);
    best = pop.best().makespan;
  }
}

TEST_F(NextGeneration, WithoutVariationOnlyCopiesExistingChromosomes) {
  GAConfig cfg;
  cfg.popsize = 20;
  cfg.crossover_rate = 0.0;
  cfg.mutation_rate = 0.0;
  Rng rng(5);
  EvalCounter evals;
  Population pop = initial_population(*graph_, 2, cfg, rng, evals);
  std::set<std::vector<Gene>> originals;
  for (const auto& ind : pop.members) originals.insert(ind.chromosome.genes);
  Time best = pop.best().makespan;
  for (int gen = 0; gen < 30; ++gen) {
    pop = next_generation(pop, cfg, *graph_, 2, rng, evals);
    for (const auto& ind : pop.members) ASSERT_TRUE(originals.count(ind.chromosome.genes));
    ASSERT_EQ(pop.best().makespan, best);
  }
}

TEST(GAConfig, Validation) {
  GAConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.popsize = 1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = GAConfig{};
  cfg.mutation_rate = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = GAConfig{};
  cfg.elite_fraction = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = GAConfig{};
  cfg.popsize = 7;
  cfg.elite_fraction = 0.1;
  EXPECT_EQ(cfg.elite_count(), 1u);
}

}  // namespace
}  // namespace tgsched
