//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_METRICS_H_
#define FUELGEN_REGRESS_METRICS_H_

#include <span>

#include <Eigen/Dense>

namespace fuelgen {

/// Feature rows with one label each.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;

  int size() const { return static_cast<int>(y.size()); }
  int features() const { return static_cast<int>(x.cols()); }
  Dataset subset(std::span<const int> rows) const;
};

struct RegMetrics {
  double r2 = 0;
  double mae = 0;
  double rmse = 0;
  // R^2 is NaN and this is false when y is constant or has one element.
  bool r2_defined = true;
};

/// Throws ShapeError on mismatched or empty inputs.
RegMetrics compute_metrics(std::span<const double> y,
                           std::span<const double> y_hat);

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_METRICS_H_
