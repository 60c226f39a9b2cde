//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/cv.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

std::vector<int> fold_assignment(int n, int k, std::uint64_t seed) {
  if (k < 2 || k > n)
    throw FoldError("fold count " + std::to_string(k)
                    + " needs 2 <= k <= " + std::to_string(n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng = make_rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> fold(n);
  for (int pos = 0; pos < n; ++pos)
    fold[order[pos]] = pos % k;
  return fold;
}

namespace {
  std::pair<double, double> mean_std(const std::vector<double> &v) {
    if (v.empty()) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      return { nan, nan };
    }
    double mean = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double var = 0;
    for (double x: v)
      var += (x - mean) * (x - mean);
    return { mean, std::sqrt(var / v.size()) };
  }

  std::string pm(double mean, double std, int digits) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.*f ± %.*f", digits, mean, digits, std);
    return buf;
  }
}  // namespace

std::string CvSummary::format(int digits) const {
  return "R² = " + pm(mean.r2, std.r2, digits) + ", MAE = "
         + pm(mean.mae, std.mae, digits) + ", RMSE = "
         + pm(mean.rmse, std.rmse, digits);
}

CvSummary kfold_cv(const Dataset &data, int k, const RegressorParams &params,
                   std::uint64_t seed) {
  const std::vector<int> fold = fold_assignment(data.size(), k, seed);

  CvSummary s;
  s.k = k;
  std::vector<double> r2, mae, rmse;
  for (int f = 0; f < k; ++f) {
    std::vector<int> train, test;
    for (int i = 0; i < data.size(); ++i)
      (fold[i] == f ? test : train).push_back(i);
    if (test.empty() || train.empty())
      throw FoldError("fold " + std::to_string(f) + " is empty");

    Dataset held = data.subset(test);
    Regressor model = fit_regressor(data.subset(train), params);
    Eigen::VectorXd pred = model.predict_rows(held.x);
    RegMetrics m = compute_metrics(
        std::span<const double>(held.y.data(), held.y.size()),
        std::span<const double>(pred.data(), pred.size()));
    s.folds.push_back(m);
    if (m.r2_defined)
      r2.push_back(m.r2);
    mae.push_back(m.mae);
    rmse.push_back(m.rmse);
  }

  std::tie(s.mean.r2, s.std.r2) = mean_std(r2);
  std::tie(s.mean.mae, s.std.mae) = mean_std(mae);
  std::tie(s.mean.rmse, s.std.rmse) = mean_std(rmse);
  s.mean.r2_defined = s.std.r2_defined = !r2.empty();
  return s;
}

}  // namespace fuelgen
