//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/metrics.h"

#include <cmath>
#include <limits>

#include "fuelgen/util/error.h"

namespace fuelgen {

Dataset Dataset::subset(std::span<const int> rows) const {
  Dataset out;
  out.x.resize(static_cast<Eigen::Index>(rows.size()), x.cols());
  out.y.resize(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.x.row(static_cast<Eigen::Index>(i)) = x.row(rows[i]);
    out.y[static_cast<Eigen::Index>(i)] = y[rows[i]];
  }
  return out;
}

RegMetrics compute_metrics(std::span<const double> y,
                           std::span<const double> y_hat) {
  if (y.size() != y_hat.size() || y.empty())
    throw ShapeError("metrics need equal-length, non-empty vectors");

  const double n = static_cast<double>(y.size());
  double mean = 0;
  for (double v: y)
    mean += v;
  mean /= n;

  double abs_err = 0, ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - y_hat[i];
    abs_err += std::abs(r);
    ss_res += r * r;
    ss_tot += (y[i] - mean) * (y[i] - mean);
  }

  RegMetrics m;
  m.mae = abs_err / n;
  m.rmse = std::sqrt(ss_res / n);
  m.r2_defined = y.size() >= 2 && ss_tot > 0;
  m.r2 = m.r2_defined ? 1.0 - ss_res / ss_tot
                      : std::numeric_limits<double>::quiet_NaN();
  return m;
}

}  // namespace fuelgen
