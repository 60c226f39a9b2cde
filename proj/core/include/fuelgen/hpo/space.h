//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_HPO_SPACE_H_
#define FUELGEN_HPO_SPACE_H_

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/covae/config.h"

namespace fuelgen {

struct HpoAxis {
  std::string name;
  double lo;
  double hi;
  bool integer = true;
};

/// Box of hyperparameters, each mapped affinely onto [0, 1].
class HpoSpace {
public:
  HpoSpace() = default;
  /// Throws ValidationError unless lo < hi on every axis.
  explicit HpoSpace(std::vector<HpoAxis> axes);

  /// Tuned Co-VAE ranges: layers 2-3, hidden 64-256, FC 50-150,
  /// conditioning 10-100, latent 32-128, batch 64-256.
  static HpoSpace covae();

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<HpoAxis> &axes() const { return axes_; }

  /// Native coordinates of a unit point, clamped, integer axes rounded.
  Eigen::VectorXd to_native(const Eigen::VectorXd &unit) const;
  Eigen::VectorXd to_unit(const Eigen::VectorXd &native) const;
  /// Unit point of the rounded native point.
  Eigen::VectorXd snap(const Eigen::VectorXd &unit) const;

private:
  std::vector<HpoAxis> axes_;
};

/// Overwrites the searched sizes of `base` with a native point of
/// HpoSpace::covae().
CoVaeConfig apply_covae_point(CoVaeConfig base, const Eigen::VectorXd &native);

}  // namespace fuelgen

#endif  // FUELGEN_HPO_SPACE_H_
