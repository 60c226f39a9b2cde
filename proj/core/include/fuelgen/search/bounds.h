//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_SEARCH_BOUNDS_H_
#define FUELGEN_SEARCH_BOUNDS_H_

#include <vector>

#include <Eigen/Dense>

namespace fuelgen {

inline constexpr double kDegenerateWidening = 1e-6;

struct LatentBounds {
  Eigen::VectorXd lo;
  Eigen::VectorXd hi;
  // Dimensions whose data span was zero and were widened.
  std::vector<int> degenerate;

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const Eigen::VectorXd &z) const;
};

/// Per dimension, lo = min - extension * span and hi = max + extension *
/// span over the columns of `embeddings`. A zero span is widened by 1e-6 on
/// each side with a warning. Throws ValidationError with fewer than two
/// embeddings or a negative extension.
LatentBounds latent_bounds(const Eigen::MatrixXd &embeddings,
                           double extension = 0.10);

}  // namespace fuelgen

#endif  // FUELGEN_SEARCH_BOUNDS_H_
