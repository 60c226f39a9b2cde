//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/hpo/bayes_opt.h"
#include "fuelgen/hpo/gp.h"
#include "fuelgen/hpo/space.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x: v)
    out(i++) = x;
  return out;
}

HpoSpace unit_space(int dim) {
  std::vector<HpoAxis> axes;
  for (int i = 0; i < dim; ++i)
    axes.push_back({ "x" + std::to_string(i), 0.0, 1.0, false });
  return HpoSpace(axes);
}

}  // namespace

TEST(Gp, InterpolatesObservations) {
  auto rng = make_rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  Eigen::MatrixXd x(6, 2);
  Eigen::VectorXd y(6);
  for (int i = 0; i < 6; ++i) {
    x(i, 0) = u(rng);
    x(i, 1) = u(rng);
    y(i) = std::sin(5 * x(i, 0)) + x(i, 1);
  }
  GaussianProcess gp(x, y, { 0.2, 1e-10 });
  for (int i = 0; i < 6; ++i) {
    Eigen::VectorXd p = x.row(i).transpose();
    EXPECT_NEAR(gp.mean(p), y(i), 1e-6);
    EXPECT_NEAR(gp.variance(p), 0.0, 1e-6);
  }
}

TEST(Gp, VarianceGrowsAwayFromDatum) {
  Eigen::MatrixXd x(1, 1);
  x(0, 0) = 0.5;
  GaussianProcess gp(x, vec({ 1.0 }), { 0.2, 1e-10 });
  double prev = gp.variance(vec({ 0.5 }));
  for (double d = 0.05; d <= 0.5; d += 0.05) {
    const double right = gp.variance(vec({ 0.5 + d }));
    const double left = gp.variance(vec({ 0.5 - d }));
    EXPECT_GT(right, prev);
    EXPECT_NEAR(left, right, 1e-12);
    prev = right;
  }
}

TEST(Acquisition, UpperConfidenceBound) {
  Eigen::MatrixXd x(2, 1);
  x << 0.2, 0.8;
  GaussianProcess gp(x, vec({ 1.0, 3.0 }), { 0.2, 1e-10 });
  Eigen::VectorXd p = vec({ 0.5 });
  EXPECT_DOUBLE_EQ(acquisition(gp, p, 0.0), gp.mean(p));
  double prev = acquisition(gp, p, 0.0);
  for (double k = 0.5; k <= 5.0; k += 0.5) {
    const double a = acquisition(gp, p, k);
    EXPECT_GE(a, prev);
    prev = a;
  }
  EXPECT_NEAR(acquisition(gp, vec({ 0.8 }), 2.576), 3.0, 1e-4);
}

TEST(SuggestBatch, DistinctAndInBounds) {
  HpoSpace space = unit_space(2);
  std::vector<Observation> obs;
  auto rng = make_rng(4);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 5; ++i) {
    Eigen::VectorXd p = vec({ u(rng), u(rng) });
    obs.push_back({ p, space.to_native(p), -p.squaredNorm(), {}, "" });
  }
  HpoOptions opts;
  std::vector<Eigen::VectorXd> batch = suggest_batch(obs, space, 8, opts, 0);
  ASSERT_EQ(batch.size(), 8u);
  for (std::size_t i = 0; i < batch.size(); ++i) {
    EXPECT_TRUE((batch[i].array() >= 0).all() && (batch[i].array() <= 1).all());
    for (std::size_t j = 0; j < i; ++j)
      EXPECT_GT((batch[i] - batch[j]).norm(), 1e-9);
  }
}

TEST(SuggestBatch, IntegerAxesLandOnLattice) {
  HpoSpace space = HpoSpace::covae();
  std::vector<Observation> obs;
  auto rng = make_rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 4; ++i) {
    Eigen::VectorXd p(space.dim());
    for (int d = 0; d < space.dim(); ++d)
      p(d) = u(rng);
    p = space.snap(p);
    obs.push_back({ p, space.to_native(p), u(rng), {}, "" });
  }
  HpoOptions opts;
  opts.random_starts = 32;
  for (const Eigen::VectorXd &p: suggest_batch(obs, space, 4, opts, 1)) {
    Eigen::VectorXd native = space.to_native(p);
    for (int d = 0; d < space.dim(); ++d) {
      const HpoAxis &a = space.axes()[d];
      EXPECT_GE(native(d), a.lo);
      EXPECT_LE(native(d), a.hi);
      if (a.integer) {
        EXPECT_EQ(native(d), std::round(native(d))) << a.name;
      }
    }
  }
}

TEST(RunHpo, FindsQuadraticOptimum) {
  HpoSpace space = unit_space(1);
  HpoOptions opts;
  opts.budget = { 16, 5, 8 };
  opts.seed = 3;
  HpoResult r = run_hpo(space, opts, [](const Eigen::VectorXd &x) {
    return Evaluation { -(x(0) - 0.3) * (x(0) - 0.3), {} };
  });
  EXPECT_EQ(static_cast<int>(r.trace.size()), 16 + 5 * 8);
  EXPECT_NEAR(r.best.native(0), 0.3, 0.05);
  double running = -INFINITY;
  double best = -INFINITY;
  for (const Observation &o: r.trace) {
    const double next = std::max(running, o.score);
    EXPECT_GE(next, running);
    running = next;
    best = std::max(best, o.score);
  }
  EXPECT_EQ(r.best.score, best);
}

TEST(RunHpo, FailedEvaluationScoresNegativeInfinity) {
  HpoSpace space = unit_space(1);
  HpoOptions opts;
  opts.budget = { 4, 1, 2 };
  int calls = 0;
  HpoResult r = run_hpo(space, opts, [&calls](const Eigen::VectorXd &x) {
    if (++calls == 2)
      throw std::runtime_error("boom");
    return Evaluation { x(0), {} };
  });
  ASSERT_EQ(r.trace.size(), 6u);
  EXPECT_EQ(r.trace[1].score, -INFINITY);
  EXPECT_FALSE(r.trace[1].note.empty());
  EXPECT_TRUE(std::isfinite(r.best.score));
}

TEST(RunHpo, SeedDeterminism) {
  HpoSpace space = unit_space(2);
  HpoOptions opts;
  opts.budget = { 4, 2, 2 };
  opts.seed = 11;
  auto f = [](const Eigen::VectorXd &x) {
    return Evaluation { -x.squaredNorm(), {} };
  };
  HpoResult a = run_hpo(space, opts, f);
  HpoResult b = run_hpo(space, opts, f);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i)
    EXPECT_EQ(a.trace[i].unit, b.trace[i].unit);
}
