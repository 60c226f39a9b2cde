//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_LOSS_H_
#define FUELGEN_COVAE_LOSS_H_

#include <optional>
#include <span>

#include <Eigen/Dense>

#include "fuelgen/covae/config.h"

namespace fuelgen {

struct LatentStats {
  Eigen::VectorXd mu;
  Eigen::VectorXd log_var;
};

/// total = bce + beta * kld + l_ron. bce and kld are batch means of the
/// per-molecule sums; l_ron is the mean absolute error over labeled
/// molecules only (0 when none is labeled).
struct LossBreakdown {
  double bce = 0;
  double kld = 0;
  double l_ron = 0;
  double beta = 0;
  double total = 0;
  int labeled = 0;
};

/// beta_cap * min(epoch / beta_ramp_epochs, 1).
double beta_schedule(int epoch, const CoVaeConfig &cfg);

/// z = mu + exp(log_var / 2) * noise. Throws ShapeError on size mismatch.
Eigen::VectorXd reparameterize(const LatentStats &stats,
                               const Eigen::VectorXd &noise);

/// -1/2 sum(1 + log_var - mu^2 - exp(log_var)) for one molecule.
double kl_divergence(const Eigen::VectorXd &mu, const Eigen::VectorXd &log_var);

/// Loss of already computed network outputs. Reconstruction uses summed
/// elementwise binary cross-entropy, or categorical cross-entropy per row
/// when `output` is kSoftmax. Throws DomainError when a probability is not
/// strictly inside (0, 1) and ShapeError on inconsistent sizes.
LossBreakdown compute_loss(std::span<const Eigen::MatrixXd> pred_probs,
                           std::span<const Eigen::MatrixXd> targets,
                           std::span<const LatentStats> stats,
                           std::span<const double> pred_ron,
                           std::span<const std::optional<double>> ron_labels,
                           double beta,
                           DecoderOutput output = DecoderOutput::kSigmoid);

/// accuracy + validity + 5 / ron_mae. Throws DomainError unless
/// ron_mae > 0.
double composite_score(double recon_accuracy, double validity, double ron_mae);

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_LOSS_H_
