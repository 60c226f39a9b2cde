//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_GBT_H_
#define FUELGEN_REGRESS_GBT_H_

#include <vector>

#include <Eigen/Dense>

#include "fuelgen/regress/metrics.h"

namespace fuelgen {

struct GbtParams {
  int n_estimators = 100;
  int max_depth = 3;
  double learning_rate = 0.1;
  int min_samples_leaf = 1;

  /// Throws ValidationError on non-positive sizes or rate.
  void validate() const;
};

struct TreeNode {
  // -1 marks a leaf.
  int feature = -1;
  double threshold = 0;
  int left = -1;
  int right = -1;
  double value = 0;
};

struct RegressionTree {
  // nodes[0] is the root; rows with x[feature] <= threshold go left.
  std::vector<TreeNode> nodes;

  double predict(const Eigen::Ref<const Eigen::VectorXd> &x) const;
  int depth() const;
};

struct GbtModel {
  double init = 0;
  double learning_rate = 0.1;
  int n_features = 0;
  std::vector<RegressionTree> trees;
  // Mean squared training error after the initial guess and each stage.
  std::vector<double> train_loss;
  // Set when all labels were identical.
  bool degenerate = false;

  double predict(const Eigen::Ref<const Eigen::VectorXd> &x) const;
};

/// Squared-error boosting with exact split search: every feature, every
/// midpoint between consecutive distinct values. Constant labels produce a
/// constant model and a warning. Throws ValidationError with fewer than two
/// samples.
GbtModel fit_gbt(const Dataset &data, const GbtParams &params);

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_GBT_H_
