//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/ridge.h"

#include "fuelgen/util/error.h"

namespace fuelgen {

LinearModel fit_ridge(const Dataset &data, double alpha) {
  if (!(alpha >= 0))
    throw ValidationError("ridge alpha must be nonnegative");
  if (data.size() < 1 || data.x.rows() != data.y.size())
    throw ValidationError("ridge needs aligned, non-empty data");

  const Eigen::RowVectorXd x_mean = data.x.colwise().mean();
  const double y_mean = data.y.mean();
  const Eigen::MatrixXd xc = data.x.rowwise() - x_mean;
  const Eigen::VectorXd yc = data.y.array() - y_mean;

  if (alpha == 0) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xc);
    if (qr.rank() < xc.cols())
      throw SingularityError("unpenalized design matrix is rank deficient");
  }

  Eigen::MatrixXd gram = xc.transpose() * xc;
  gram.diagonal().array() += alpha;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  if (ldlt.info() != Eigen::Success)
    throw SingularityError("ridge normal equations could not be factored");

  LinearModel model;
  model.coef = ldlt.solve(xc.transpose() * yc);
  model.intercept = y_mean - x_mean.dot(model.coef);
  return model;
}

}  // namespace fuelgen
