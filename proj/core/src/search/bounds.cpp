//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/search/bounds.h"

#include <spdlog/spdlog.h>

#include "fuelgen/util/error.h"

namespace fuelgen {

bool LatentBounds::contains(const Eigen::VectorXd &z) const {
  return z.size() == lo.size() && (z.array() >= lo.array()).all()
         && (z.array() <= hi.array()).all();
}

LatentBounds latent_bounds(const Eigen::MatrixXd &embeddings,
                           double extension) {
  if (embeddings.cols() < 2)
    throw ValidationError("latent bounds need at least two embeddings");
  if (!(extension >= 0))
    throw ValidationError("bound extension must be nonnegative");
  if (!embeddings.allFinite())
    throw ValidationError("embeddings must be finite");

  LatentBounds b;
  const Eigen::VectorXd mn = embeddings.rowwise().minCoeff();
  const Eigen::VectorXd mx = embeddings.rowwise().maxCoeff();
  b.lo.resize(mn.size());
  b.hi.resize(mn.size());
  for (Eigen::Index i = 0; i < mn.size(); ++i) {
    const double span = mx[i] - mn[i];
    if (span > 0) {
      b.lo[i] = mn[i] - extension * span;
      b.hi[i] = mx[i] + extension * span;
    } else {
      spdlog::warn("latent dimension {} has zero span; widened by {}", i,
                   kDegenerateWidening);
      b.degenerate.push_back(static_cast<int>(i));
      b.lo[i] = mn[i] - kDegenerateWidening;
      b.hi[i] = mx[i] + kDegenerateWidening;
    }
  }
  return b;
}

}  // namespace fuelgen
