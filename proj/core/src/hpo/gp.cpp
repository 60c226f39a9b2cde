//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/hpo/gp.h"

#include <algorithm>
#include <cmath>

#include "fuelgen/util/error.h"

namespace fuelgen {

namespace {
  constexpr double kMaxJitter = 1e-4;
}  // namespace

GaussianProcess::GaussianProcess(Eigen::MatrixXd x, const Eigen::VectorXd &y,
                                 GpOptions opts)
    : opts_(opts), x_(std::move(x)), jitter_(opts.jitter) {
  const Eigen::Index n = x_.rows();
  if (n < 1 || y.size() != n)
    throw ValidationError("GP needs at least one observation per score");
  if (!y.allFinite() || !x_.allFinite())
    throw ValidationError("GP observations must be finite");

  y_mean_ = y.mean();
  double var = (y.array() - y_mean_).square().mean();
  y_scale_ = var > 1e-24 ? std::sqrt(var) : 1.0;
  Eigen::VectorXd ys = (y.array() - y_mean_) / y_scale_;

  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j)
      k(i, j) = k(j, i) = kernel(x_.row(i), x_.row(j));
  }

  for (;;) {
    Eigen::MatrixXd kj = k;
    kj.diagonal().array() += jitter_;
    llt_.compute(kj);
    if (llt_.info() == Eigen::Success
        && llt_.matrixL().toDenseMatrix().diagonal().minCoeff() > 0)
      break;
    jitter_ *= 10;
    if (jitter_ > kMaxJitter)
      throw SingularityError("GP kernel matrix is numerically singular");
  }
  alpha_ = llt_.solve(ys);
}

double GaussianProcess::kernel(const Eigen::VectorXd &a,
                               const Eigen::VectorXd &b) const {
  const double l = opts_.length_scale;
  return std::exp(-0.5 * (a - b).squaredNorm() / (l * l));
}

GpPrediction GaussianProcess::predict(const Eigen::VectorXd &point) const {
  if (point.size() != x_.cols())
    throw ShapeError("GP query dimension mismatch");
  Eigen::VectorXd ks(x_.rows());
  for (Eigen::Index i = 0; i < x_.rows(); ++i)
    ks[i] = kernel(x_.row(i), point);
  Eigen::VectorXd v = llt_.matrixL().solve(ks);
  double var = std::max(0.0, 1.0 - v.squaredNorm());
  return { y_mean_ + y_scale_ * ks.dot(alpha_), y_scale_ * y_scale_ * var };
}

double acquisition(const GaussianProcess &gp, const Eigen::VectorXd &point,
                   double kappa) {
  GpPrediction p = gp.predict(point);
  return p.mean + kappa * std::sqrt(p.variance);
}

}  // namespace fuelgen
