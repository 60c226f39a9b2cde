//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/covae/train.h"
#include "fuelgen/regress/regressor.h"
#include "fuelgen/search/bounds.h"
#include "fuelgen/search/de.h"
#include "fuelgen/search/screen.h"
#include "fuelgen/util/error.h"

using namespace fuelgen;

namespace {

LatentBounds box(int dim, double lo, double hi) {
  LatentBounds b;
  b.lo = Eigen::VectorXd::Constant(dim, lo);
  b.hi = Eigen::VectorXd::Constant(dim, hi);
  return b;
}

CoVaeConfig small_covae() {
  CoVaeConfig cfg = CoVaeConfig::desk_scale();
  cfg.hidden_size = 12;
  cfg.latent_dim = 4;
  cfg.fc1_size = 8;
  cfg.fc2_size = 6;
  cfg.cond1_size = 4;
  cfg.cond2_size = 3;
  return cfg;
}

Regressor constant_regressor(int dim, double value) {
  Dataset d { Eigen::MatrixXd::Random(10, dim), Eigen::VectorXd(10) };
  d.y.setConstant(value);
  return fit_regressor(d, {});
}

}  // namespace

TEST(Bounds, ExtendsTenPercentPerSide) {
  Eigen::MatrixXd emb(1, 3);
  emb << -1.0, 0.3, 1.0;
  LatentBounds b = latent_bounds(emb, 0.10);
  EXPECT_NEAR(b.lo(0), -1.2, 1e-15);
  EXPECT_NEAR(b.hi(0), 1.2, 1e-15);
  LatentBounds exact = latent_bounds(emb, 0.0);
  EXPECT_EQ(exact.lo(0), -1.0);
  EXPECT_EQ(exact.hi(0), 1.0);
  EXPECT_TRUE(b.degenerate.empty());
}

TEST(Bounds, DegenerateDimensionWidened) {
  Eigen::MatrixXd emb(2, 3);
  emb << 0.0, 1.0, 2.0, 5.0, 5.0, 5.0;
  LatentBounds b = latent_bounds(emb, 0.10);
  EXPECT_EQ(b.degenerate, std::vector<int> { 1 });
  EXPECT_LT(b.lo(1), b.hi(1));
  EXPECT_NEAR(b.hi(1) - b.lo(1), 2 * kDegenerateWidening, 1e-12);
}

TEST(De, Sphere) {
  DeOptions o;
  o.population = 50;
  o.max_generations = 200;
  o.tol = 0;
  o.seed = 1;
  DeResult r = de_optimize([](const Eigen::VectorXd &x) { return -x.squaredNorm(); },
                           box(5, -5, 5), o);
  EXPECT_LT(-r.best_value, 1e-6);
  for (std::size_t i = 1; i < r.trace.size(); ++i)
    EXPECT_GE(r.trace[i], r.trace[i - 1]);
  EXPECT_TRUE((r.population.array() >= -5).all());
  EXPECT_TRUE((r.population.array() <= 5).all());
}

TEST(De, ShiftedSphere) {
  DeOptions o;
  o.population = 50;
  o.max_generations = 300;
  o.tol = 0;
  o.seed = 2;
  DeResult r = de_optimize(
      [](const Eigen::VectorXd &x) {
        return -(x.array() - 1.0).square().sum();
      },
      box(5, -5, 5), o);
  for (int i = 0; i < 5; ++i)
    EXPECT_NEAR(r.best(i), 1.0, 1e-4);
}

TEST(De, SeedDeterminismAndBudgetFlag) {
  DeOptions o;
  o.max_generations = 3;
  o.tol = 0;
  o.seed = 4;
  auto f = [](const Eigen::VectorXd &x) { return std::sin(x.sum()); };
  DeResult a = de_optimize(f, box(3, -1, 1), o);
  DeResult b = de_optimize(f, box(3, -1, 1), o);
  EXPECT_EQ(a.best, b.best);
  EXPECT_TRUE(a.budget_exhausted);
  EXPECT_EQ(o.population_for(3), 45);
  EXPECT_EQ(o.population_for(73), 200);
}

TEST(Screen, ConstantRegressorPrediction) {
  Regressor r = constant_regressor(4, 120.0);
  EXPECT_DOUBLE_EQ(predict_ron_latent(r, Eigen::VectorXd::Zero(4)), 120.0);
  EXPECT_DOUBLE_EQ(predict_ron_latent(r, Eigen::VectorXd::Ones(4)), 120.0);
  EXPECT_THROW(predict_ron_latent(r, Eigen::VectorXd::Ones(3)), ShapeError);
}

TEST(Screen, GateSemantics) {
  CoVaeModel m = make_model(small_covae());
  Regressor high = constant_regressor(4, 120.0);
  Regressor low = constant_regressor(4, 100.0);
  for (int i = 0; i < 20; ++i) {
    Eigen::VectorXd z = Eigen::VectorXd::Random(4) * 2;
    CandidateRecord a = validate_candidate(m, high, z, 110.0);
    CandidateRecord b = validate_candidate(m, low, z, 110.0);
    EXPECT_EQ(a.decoded, b.decoded);
    EXPECT_FALSE(b.accepted);
    if (!a.valid) {
      EXPECT_FALSE(a.accepted);
    } else {
      EXPECT_TRUE(check_valence(parse_smiles(a.decoded)).valid());
      ASSERT_TRUE(a.revalidated_ron.has_value());
      EXPECT_EQ(a.accepted, *a.revalidated_ron > 110.0);
    }
  }
}

TEST(Screen, AcceptedSetIsDuplicateFreePartition) {
  CoVaeModel m = make_model(small_covae());
  Regressor r = constant_regressor(4, 120.0);
  ScreenConfig cfg;
  cfg.de.max_generations = 5;
  cfg.runs = 2;
  cfg.seed = 3;
  std::vector<std::string> ron { "CCO" }, corpus { "CCO", "CC", "C" };
  ScreenResult s = screen(m, r, ron, corpus, cfg);
  std::set<std::string> seen;
  for (const CandidateRecord &c: s.accepted) {
    EXPECT_TRUE(seen.insert(c.canonical).second) << c.canonical;
    EXPECT_TRUE(c.valid);
    EXPECT_TRUE(c.accepted);
    EXPECT_TRUE(s.bounds.contains(c.z));
  }
  EXPECT_EQ(static_cast<int>(s.accepted.size()) + s.invalid
                + s.below_threshold + s.duplicates,
            s.harvested);
}
