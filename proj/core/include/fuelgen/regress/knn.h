//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_KNN_H_
#define FUELGEN_REGRESS_KNN_H_

#include <string_view>

#include <Eigen/Dense>

#include "fuelgen/regress/metrics.h"

namespace fuelgen {

enum class KnnWeights {
  kUniform,
  kDistance,
};

std::string_view knn_weights_name(KnnWeights w);
KnnWeights parse_knn_weights(std::string_view name);

struct KnnParams {
  int k = 5;
  KnnWeights weights = KnnWeights::kUniform;
  // Minkowski exponent, 1 or 2.
  int p = 2;
};

class KnnModel {
public:
  KnnModel() = default;
  /// Throws ValidationError unless 1 <= k <= n and p is 1 or 2.
  KnnModel(Dataset data, KnnParams params);

  /// Distance ties are broken by training order. With distance weights an
  /// exact match returns the mean label of the exact matches.
  double predict(const Eigen::Ref<const Eigen::VectorXd> &x) const;

  const Dataset &data() const { return data_; }
  const KnnParams &params() const { return params_; }

private:
  Dataset data_;
  KnnParams params_;
};

inline KnnModel fit_knn(const Dataset &data, const KnnParams &params) {
  return KnnModel(data, params);
}

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_KNN_H_
