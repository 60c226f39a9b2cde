//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <cmath>
#include <random>
#include <regex>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/regress/cv.h"
#include "fuelgen/regress/gbt.h"
#include "fuelgen/regress/knn.h"
#include "fuelgen/regress/metrics.h"
#include "fuelgen/regress/regressor.h"
#include "fuelgen/regress/ridge.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

namespace {

Dataset linear_benchmark(int n, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  std::normal_distribution<double> noise(0, 0.1);
  Dataset d { Eigen::MatrixXd(n, 2), Eigen::VectorXd(n) };
  for (int i = 0; i < n; ++i) {
    d.x(i, 0) = u(rng);
    d.x(i, 1) = u(rng);
    d.y(i) = 3 * d.x(i, 0) - 2 * d.x(i, 1) + noise(rng);
  }
  return d;
}

RegMetrics metrics_of(const Dataset &d, const Eigen::VectorXd &pred) {
  return compute_metrics(std::span<const double>(d.y.data(), d.y.size()),
                         std::span<const double>(pred.data(), pred.size()));
}

}  // namespace

TEST(Metrics, ClosedForms) {
  std::vector<double> y { 1, 2, 3 }, same { 1, 2, 3 }, flat { 2, 2, 2 };
  RegMetrics perfect = compute_metrics(y, same);
  EXPECT_EQ(perfect.r2, 1.0);
  EXPECT_EQ(perfect.mae, 0.0);
  EXPECT_EQ(perfect.rmse, 0.0);
  RegMetrics m = compute_metrics(y, flat);
  EXPECT_NEAR(m.r2, 0.0, 1e-12);
  EXPECT_NEAR(m.mae, 0.6667, 1e-4);
  EXPECT_NEAR(m.rmse, 0.8165, 1e-4);
  EXPECT_THROW(compute_metrics(y, std::vector<double> { 1 }), ShapeError);
}

TEST(Metrics, MatchNaiveReference) {
  auto rng = make_rng(8);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> y(17), p(17);
    for (int i = 0; i < 17; ++i) {
      y[i] = nd(rng);
      p[i] = nd(rng);
    }
    double mean = 0;
    for (double v: y)
      mean += v;
    mean /= 17;
    double ss_res = 0, ss_tot = 0, abs = 0;
    for (int i = 0; i < 17; ++i) {
      ss_res += (y[i] - p[i]) * (y[i] - p[i]);
      ss_tot += (y[i] - mean) * (y[i] - mean);
      abs += std::abs(y[i] - p[i]);
    }
    RegMetrics m = compute_metrics(y, p);
    EXPECT_NEAR(m.r2, 1 - ss_res / ss_tot, 1e-12);
    EXPECT_NEAR(m.mae, abs / 17, 1e-12);
    EXPECT_NEAR(m.rmse, std::sqrt(ss_res / 17), 1e-12);
    EXPECT_LE(m.r2, 1.0);
    EXPECT_GE(m.rmse, m.mae);
  }
}

TEST(Metrics, ConstantLabelsFlagR2) {
  std::vector<double> y { 2, 2, 2 }, p { 1, 2, 3 };
  RegMetrics m = compute_metrics(y, p);
  EXPECT_FALSE(m.r2_defined);
}

TEST(Gbt, TwoPointStump) {
  Dataset d { Eigen::MatrixXd(2, 1), Eigen::VectorXd(2) };
  d.x << 0, 1;
  d.y << 0, 1;
  GbtModel m = fit_gbt(d, { 1, 1, 1.0, 1 });
  EXPECT_EQ(m.predict(d.x.row(0).transpose()), 0.0);
  EXPECT_EQ(m.predict(d.x.row(1).transpose()), 1.0);
}

TEST(Gbt, ConstantLabels) {
  Dataset d = linear_benchmark(30, 1);
  d.y.setConstant(87.5);
  GbtModel m = fit_gbt(d, {});
  for (int i = 0; i < d.size(); ++i)
    EXPECT_DOUBLE_EQ(m.predict(d.x.row(i).transpose()), 87.5);
}

TEST(Gbt, LinearBenchmark) {
  Dataset d = linear_benchmark(200, 42);
  GbtModel m = fit_gbt(d, {});
  Eigen::VectorXd pred(d.size());
  for (int i = 0; i < d.size(); ++i)
    pred(i) = m.predict(d.x.row(i).transpose());
  EXPECT_GT(metrics_of(d, pred).r2, 0.9);
  for (const RegressionTree &t: m.trees)
    EXPECT_LE(t.depth(), 3);
  for (std::size_t i = 1; i < m.train_loss.size(); ++i)
    EXPECT_LE(m.train_loss[i], m.train_loss[i - 1] + 1e-12);
}

TEST(Ridge, ExactLine) {
  Dataset d { Eigen::MatrixXd(2, 1), Eigen::VectorXd(2) };
  d.x << 1, 2;
  d.y << 1, 2;
  LinearModel m = fit_ridge(d, 0.0);
  EXPECT_NEAR(m.coef(0), 1.0, 1e-12);
  EXPECT_NEAR(m.intercept, 0.0, 1e-12);

  Dataset dup { Eigen::MatrixXd(2, 2), Eigen::VectorXd(2) };
  dup.x << 1, 1, 2, 2;
  dup.y << 1, 2;
  EXPECT_THROW(fit_ridge(dup, 0.0), SingularityError);
}

TEST(Ridge, ShrinksAndSolvesNormalEquations) {
  Dataset d = linear_benchmark(50, 7);
  double prev = INFINITY;
  for (double alpha: { 0.1, 1.0, 10.0, 100.0 }) {
    LinearModel m = fit_ridge(d, alpha);
    EXPECT_LE(m.coef.norm(), prev);
    prev = m.coef.norm();

    const Eigen::RowVectorXd mean = d.x.colwise().mean();
    const Eigen::MatrixXd xc = d.x.rowwise() - mean;
    const Eigen::VectorXd yc = d.y.array() - d.y.mean();
    Eigen::VectorXd r = (xc.transpose() * xc) * m.coef + alpha * m.coef
                        - xc.transpose() * yc;
    EXPECT_LT(r.norm(), 1e-8);
  }
}

TEST(Knn, NearestNeighborIsExact) {
  Dataset d = linear_benchmark(20, 3);
  KnnModel m(d, { 1, KnnWeights::kUniform, 2 });
  for (int i = 0; i < d.size(); ++i)
    EXPECT_EQ(m.predict(d.x.row(i).transpose()), d.y(i));
  EXPECT_THROW(KnnModel(d, { 21, KnnWeights::kUniform, 2 }), ValidationError);
}

TEST(Regressor, JsonRoundTrip) {
  Dataset d = linear_benchmark(40, 5);
  for (RegressorFamily f: { RegressorFamily::kGbt, RegressorFamily::kRidge,
                            RegressorFamily::kKnn }) {
    RegressorParams p;
    p.family = f;
    p.gbt.n_estimators = 10;
    Regressor r = fit_regressor(d, p);
    Regressor back = Regressor::from_json(r.to_json());
    EXPECT_EQ(back.family(), f);
    EXPECT_EQ(back.to_json(), r.to_json());
    for (int i = 0; i < d.size(); ++i) {
      Eigen::VectorXd x = d.x.row(i).transpose();
      EXPECT_EQ(back.predict(x), r.predict(x));
    }
  }
}

TEST(Cv, FoldsBalanced) {
  for (int n: { 12, 25, 103 }) {
    std::vector<int> fold = fold_assignment(n, 10, 1);
    std::vector<int> sizes(10, 0);
    for (int f: fold)
      ++sizes[f];
    auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    EXPECT_LE(*hi - *lo, 1);
  }
  EXPECT_THROW(fold_assignment(5, 10, 1), FoldError);
}

TEST(Cv, LeaveOneOut) {
  Dataset d = linear_benchmark(12, 9);
  RegressorParams p;
  p.family = RegressorFamily::kRidge;
  CvSummary s = kfold_cv(d, 12, p, 0);
  EXPECT_EQ(s.folds.size(), 12u);
}

TEST(Cv, TwinsGiveZeroError) {
  Dataset base = linear_benchmark(4, 10);
  Dataset d { Eigen::MatrixXd(24, 2), Eigen::VectorXd(24) };
  for (int i = 0; i < 24; ++i) {
    d.x.row(i) = base.x.row(i % 4);
    d.y(i) = base.y(i % 4);
  }
  RegressorParams p;
  p.family = RegressorFamily::kKnn;
  p.knn.k = 1;
  CvSummary s = kfold_cv(d, 10, p, 2);
  EXPECT_EQ(s.mean.mae, 0.0);
}

TEST(Cv, FormatsMeanPlusMinusStd) {
  Dataset d = linear_benchmark(60, 11);
  CvSummary s = kfold_cv(d, 10, {}, 0);
  const std::regex pattern(
      "R² = -?\\d+\\.\\d{3} ± \\d+\\.\\d{3}, MAE = \\d+\\.\\d{3} ± "
      "\\d+\\.\\d{3}, RMSE = \\d+\\.\\d{3} ± \\d+\\.\\d{3}");
  EXPECT_TRUE(std::regex_match(s.format(), pattern)) << s.format();

  double mean = 0, var = 0;
  for (const RegMetrics &m: s.folds)
    mean += m.mae / s.folds.size();
  for (const RegMetrics &m: s.folds)
    var += (m.mae - mean) * (m.mae - mean) / s.folds.size();
  EXPECT_NEAR(s.mean.mae, mean, 1e-12);
  EXPECT_NEAR(s.std.mae, std::sqrt(var), 1e-12);
}
