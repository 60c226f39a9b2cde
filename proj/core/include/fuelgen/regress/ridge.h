//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_RIDGE_H_
#define FUELGEN_REGRESS_RIDGE_H_

#include <Eigen/Dense>

#include "fuelgen/regress/metrics.h"

namespace fuelgen {

struct LinearModel {
  Eigen::VectorXd coef;
  double intercept = 0;

  double predict(const Eigen::Ref<const Eigen::VectorXd> &x) const {
    return intercept + coef.dot(x);
  }
};

/// Minimizes |y - Xw - b|^2 + alpha |w|^2 with an unpenalized intercept.
/// Throws ValidationError for alpha < 0 and SingularityError when alpha is 0
/// and the centered design is rank deficient.
LinearModel fit_ridge(const Dataset &data, double alpha);

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_RIDGE_H_
