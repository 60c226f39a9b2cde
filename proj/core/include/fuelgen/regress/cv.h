//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_CV_H_
#define FUELGEN_REGRESS_CV_H_

#include <cstdint>
#include <string>
#include <vector>

#include "fuelgen/regress/regressor.h"

namespace fuelgen {

struct CvSummary {
  int k = 0;
  std::vector<RegMetrics> folds;
  // Population statistics over folds; R^2 over folds where it is defined.
  RegMetrics mean;
  RegMetrics std;

  /// "R² = 0.869 ± 0.102, MAE = ... ± ..., RMSE = ... ± ...".
  std::string format(int digits = 3) const;
};

/// Row i of a seeded shuffle goes to fold i mod k. Throws FoldError unless
/// 2 <= k <= n.
std::vector<int> fold_assignment(int n, int k, std::uint64_t seed);

CvSummary kfold_cv(const Dataset &data, int k, const RegressorParams &params,
                   std::uint64_t seed);

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_CV_H_
