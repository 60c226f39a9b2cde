//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/knn.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fuelgen/util/error.h"

namespace fuelgen {

std::string_view knn_weights_name(KnnWeights w) {
  return w == KnnWeights::kUniform ? "uniform" : "distance";
}

KnnWeights parse_knn_weights(std::string_view name) {
  if (name == "uniform")
    return KnnWeights::kUniform;
  if (name == "distance")
    return KnnWeights::kDistance;
  throw ValidationError("unknown neighbor weighting '" + std::string(name)
                        + "'");
}

KnnModel::KnnModel(Dataset data, KnnParams params)
    : data_(std::move(data)), params_(params) {
  if (params_.k < 1 || params_.k > data_.size())
    throw ValidationError("k must lie in [1, n]");
  if (params_.p != 1 && params_.p != 2)
    throw ValidationError("Minkowski exponent must be 1 or 2");
}

double KnnModel::predict(const Eigen::Ref<const Eigen::VectorXd> &x) const {
  if (x.size() != data_.features())
    throw ShapeError("feature count mismatch");

  const int n = data_.size();
  std::vector<double> dist(n);
  for (int i = 0; i < n; ++i) {
    auto diff = data_.x.row(i).transpose() - x;
    dist[i] = params_.p == 1 ? diff.cwiseAbs().sum() : diff.norm();
  }
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::partial_sort(idx.begin(), idx.begin() + params_.k, idx.end(),
                    [&](int a, int b) {
                      return dist[a] < dist[b]
                             || (dist[a] == dist[b] && a < b);
                    });

  if (params_.weights == KnnWeights::kUniform) {
    double sum = 0;
    for (int j = 0; j < params_.k; ++j)
      sum += data_.y[idx[j]];
    return sum / params_.k;
  }

  double exact = 0;
  int n_exact = 0;
  double num = 0, den = 0;
  for (int j = 0; j < params_.k; ++j) {
    const double d = dist[idx[j]];
    if (d == 0) {
      exact += data_.y[idx[j]];
      ++n_exact;
    } else {
      num += data_.y[idx[j]] / d;
      den += 1 / d;
    }
  }
  return n_exact > 0 ? exact / n_exact : num / den;
}

}  // namespace fuelgen
