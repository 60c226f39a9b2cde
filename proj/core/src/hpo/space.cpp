//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/hpo/space.h"

#include <algorithm>
#include <cmath>

#include "fuelgen/util/error.h"

namespace fuelgen {

HpoSpace::HpoSpace(std::vector<HpoAxis> axes): axes_(std::move(axes)) {
  for (const HpoAxis &a: axes_) {
    if (!(a.lo < a.hi))
      throw ValidationError("axis " + a.name + " needs lo < hi");
  }
}

HpoSpace HpoSpace::covae() {
  return HpoSpace({
    { "num_layers", 2, 3 },
    { "hidden_size", 64, 256 },
    { "fc1_size", 50, 150 },
    { "fc2_size", 50, 150 },
    { "cond1_size", 10, 100 },
    { "cond2_size", 10, 100 },
    { "latent_dim", 32, 128 },
    { "batch_size", 64, 256 },
  });
}

Eigen::VectorXd HpoSpace::to_native(const Eigen::VectorXd &unit) const {
  if (unit.size() != dim())
    throw ShapeError("point dimension does not match the space");
  Eigen::VectorXd out(dim());
  for (int i = 0; i < dim(); ++i) {
    const HpoAxis &a = axes_[i];
    double v = a.lo + std::clamp(unit[i], 0.0, 1.0) * (a.hi - a.lo);
    if (a.integer)
      v = std::clamp(std::round(v), a.lo, a.hi);
    out[i] = v;
  }
  return out;
}

Eigen::VectorXd HpoSpace::to_unit(const Eigen::VectorXd &native) const {
  if (native.size() != dim())
    throw ShapeError("point dimension does not match the space");
  Eigen::VectorXd out(dim());
  for (int i = 0; i < dim(); ++i)
    out[i] = (native[i] - axes_[i].lo) / (axes_[i].hi - axes_[i].lo);
  return out;
}

Eigen::VectorXd HpoSpace::snap(const Eigen::VectorXd &unit) const {
  return to_unit(to_native(unit));
}

CoVaeConfig apply_covae_point(CoVaeConfig base,
                              const Eigen::VectorXd &native) {
  if (native.size() != 8)
    throw ShapeError("Co-VAE search point needs 8 coordinates");
  auto at = [&](int i) { return static_cast<int>(std::lround(native[i])); };
  base.num_layers = at(0);
  base.hidden_size = at(1);
  base.fc1_size = at(2);
  base.fc2_size = at(3);
  base.cond1_size = at(4);
  base.cond2_size = at(5);
  base.latent_dim = at(6);
  base.batch_size = at(7);
  return base;
}

}  // namespace fuelgen
