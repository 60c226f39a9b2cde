//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_HPO_GP_H_
#define FUELGEN_HPO_GP_H_

#include <Eigen/Dense>

namespace fuelgen {

struct GpOptions {
  // Squared-exponential length scale, shared by all unit-scaled axes.
  double length_scale = 0.2;
  double jitter = 1e-8;
};

struct GpPrediction {
  double mean;
  double variance;
};

/// Gaussian-process posterior with a unit-variance squared-exponential
/// kernel over standardized scores.
class GaussianProcess {
public:
  /// Rows of x are observation points. Needs at least one observation.
  /// When the Cholesky factorization fails, the jitter is raised tenfold up
  /// to 1e-4; beyond that SingularityError is thrown.
  GaussianProcess(Eigen::MatrixXd x, const Eigen::VectorXd &y,
                  GpOptions opts = {});

  GpPrediction predict(const Eigen::VectorXd &point) const;
  double mean(const Eigen::VectorXd &point) const {
    return predict(point).mean;
  }
  double variance(const Eigen::VectorXd &point) const {
    return predict(point).variance;
  }

  double jitter() const { return jitter_; }
  int size() const { return static_cast<int>(x_.rows()); }

private:
  double kernel(const Eigen::VectorXd &a, const Eigen::VectorXd &b) const;

  GpOptions opts_;
  Eigen::MatrixXd x_;
  double y_mean_ = 0;
  double y_scale_ = 1;
  double jitter_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::VectorXd alpha_;
};

/// Upper confidence bound mean + kappa * stddev.
double acquisition(const GaussianProcess &gp, const Eigen::VectorXd &point,
                   double kappa);

}  // namespace fuelgen

#endif  // FUELGEN_HPO_GP_H_
