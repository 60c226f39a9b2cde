//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <limits>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/moo/hypervolume.h"
#include "fuelgen/moo/nsga2.h"
#include "fuelgen/moo/pareto.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

namespace {

std::vector<Gene> unit_genes(int n) {
  std::vector<Gene> genes;
  for (int i = 0; i < n; ++i)
    genes.push_back({ "x" + std::to_string(i), GeneKind::kContinuous, 0, 1 });
  return genes;
}

Objectives zdt1(const Genome &x, std::uint64_t) {
  double s = 0;
  for (std::size_t i = 1; i < x.size(); ++i)
    s += x[i];
  const double g = 1 + 9 * s / (x.size() - 1);
  return { x[0], g * (1 - std::sqrt(x[0] / g)) };
}

MooIndividual member(double mae, Genome genome = {}) {
  MooIndividual m;
  m.objectives = { mae, 1.0, -0.5 };
  m.genome = std::move(genome);
  return m;
}

}  // namespace

TEST(Dominance, Examples) {
  std::vector<double> a { 1, 1, 1 }, b { 2, 1, 1 };
  EXPECT_TRUE(dominates(a, b));
  EXPECT_FALSE(dominates(b, a));
  std::vector<double> c { 1, 2 }, d { 2, 1 };
  EXPECT_FALSE(dominates(c, d));
  EXPECT_FALSE(dominates(d, c));
  EXPECT_FALSE(dominates(a, a));
}

TEST(NonDominatedSort, Examples) {
  auto fronts = non_dominated_sort({ { 1, 2 }, { 2, 1 }, { 2, 2 }, { 3, 3 } });
  ASSERT_EQ(fronts.size(), 3u);
  EXPECT_EQ(std::set<int>(fronts[0].begin(), fronts[0].end()),
            (std::set<int> { 0, 1 }));
  EXPECT_EQ(fronts[1], std::vector<int> { 2 });
  EXPECT_EQ(fronts[2], std::vector<int> { 3 });

  EXPECT_EQ(non_dominated_sort({ { 4, 4 } }).size(), 1u);
  auto twins = non_dominated_sort({ { 1, 3 }, { 1, 3 }, { 2, 4 } });
  ASSERT_EQ(twins.size(), 2u);
  EXPECT_EQ(twins[0].size(), 2u);
}

TEST(Crowding, Examples) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<Objectives> two { { 1, 2 }, { 2, 1 } };
  std::vector<int> both { 0, 1 };
  EXPECT_EQ(crowding_distance(two, both), (std::vector<double> { inf, inf }));

  std::vector<Objectives> line { { 0 }, { 1 }, { 2 } };
  std::vector<int> all3 { 0, 1, 2 };
  std::vector<double> cd = crowding_distance(line, all3);
  EXPECT_EQ(cd[0], inf);
  EXPECT_EQ(cd[2], inf);
  EXPECT_TRUE(std::isfinite(cd[1]));
  EXPECT_GT(cd[1], 0.0);

  std::vector<Objectives> same { { 1, 1 }, { 1, 1 }, { 1, 1 }, { 1, 1 } };
  std::vector<int> all4 { 0, 1, 2, 3 };
  std::vector<double> flat = crowding_distance(same, all4);
  int zeros = 0;
  for (double v: flat)
    zeros += v == 0.0;
  EXPECT_EQ(zeros, 2);
}

TEST(Hypervolume, Rectangles) {
  std::vector<double> ref { 2, 2 };
  EXPECT_DOUBLE_EQ(hypervolume({ { 1, 1 } }, ref), 1.0);
  EXPECT_DOUBLE_EQ(hypervolume({ { 0, 1 }, { 1, 0 } }, ref), 3.0);
  EXPECT_DOUBLE_EQ(hypervolume({ { 0, 1 }, { 1, 0 }, { 1, 1 } }, ref), 3.0);
  EXPECT_DOUBLE_EQ(hypervolume({ { 3, 0 } }, ref), 0.0);
  std::vector<double> ref3 { 1, 1, 1 };
  EXPECT_DOUBLE_EQ(hypervolume({ { 0, 0, 0 } }, ref3), 1.0);
  EXPECT_DOUBLE_EQ(hypervolume({ { 0, 0.5, 0.5 }, { 0.5, 0, 0.5 } }, ref3),
                   0.375);
}

TEST(Evolve, Zdt1ReachesAnalyticFront) {
  NsgaOptions opts = NsgaOptions::desk_scale();
  opts.generations = 100;
  opts.seed = 1;
  opts.reference = { 1.1, 1.1 };
  MooResult r = evolve(unit_genes(10), zdt1, opts);
  std::vector<Objectives> pts;
  for (const MooIndividual &m: r.front)
    pts.push_back(m.objectives);
  const double analytic = 0.1 + 2.0 / 3.0 + 0.11;
  EXPECT_GE(hypervolume(pts, opts.reference), 0.9 * analytic);

  double running = 0;
  for (const GenerationStats &s: r.history) {
    EXPECT_GE(std::max(running, s.hypervolume), running);
    running = std::max(running, s.hypervolume);
  }
  for (const MooIndividual &m: r.population) {
    for (double g: m.genome) {
      EXPECT_GE(g, 0.0);
      EXPECT_LE(g, 1.0);
    }
  }
}

TEST(Evolve, SeedDeterminism) {
  NsgaOptions opts = NsgaOptions::desk_scale();
  opts.seed = 9;
  opts.reference = { 1.1, 1.1 };
  MooResult a = evolve(unit_genes(4), zdt1, opts);
  MooResult b = evolve(unit_genes(4), zdt1, opts);
  ASSERT_EQ(a.front.size(), b.front.size());
  for (std::size_t i = 0; i < a.front.size(); ++i)
    EXPECT_EQ(a.front[i].genome, b.front[i].genome);
}

TEST(Evolve, FailedEvaluationIsDominated) {
  NsgaOptions opts = NsgaOptions::desk_scale();
  opts.generations = 3;
  opts.reference = { 1.1, 1.1 };
  MooResult r = evolve(unit_genes(3),
                       [](const Genome &x, std::uint64_t s) -> Objectives {
                         if (x[1] > 0.5)
                           throw std::runtime_error("failed fit");
                         return zdt1(x, s);
                       },
                       opts);
  for (const MooIndividual &m: r.front)
    EXPECT_TRUE(std::isfinite(m.objectives[0]));
}

TEST(SelectBest, MinimumMaeAndTieBreak) {
  EXPECT_EQ(select_best({ member(5.3, { 0 }), member(6.1, { 1 }),
                          member(5.0, { 2 }) })
                .genome,
            Genome { 2 });
  EXPECT_EQ(select_best({ member(7.0, { 4 }) }).genome, Genome { 4 });
  EXPECT_EQ(select_best({ member(5.0, { 3 }), member(5.0, { 1 }) }).genome,
            Genome { 1 });
  EXPECT_THROW(select_best({}), EmptyFrontError);
}
