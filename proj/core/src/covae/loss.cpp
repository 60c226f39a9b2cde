//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/loss.h"

#include <algorithm>
#include <cmath>

#include "fuelgen/util/error.h"

namespace fuelgen {

double beta_schedule(int epoch, const CoVaeConfig &cfg) {
  if (cfg.beta_ramp_epochs <= 0)
    return cfg.beta_cap;
  double ramp = static_cast<double>(std::max(epoch, 0)) / cfg.beta_ramp_epochs;
  return cfg.beta_cap * std::min(ramp, 1.0);
}

Eigen::VectorXd reparameterize(const LatentStats &stats,
                               const Eigen::VectorXd &noise) {
  if (stats.mu.size() != stats.log_var.size()
      || stats.mu.size() != noise.size())
    throw ShapeError("reparameterize: dimension mismatch");
  return stats.mu
         + ((0.5 * stats.log_var.array()).exp() * noise.array()).matrix();
}

double kl_divergence(const Eigen::VectorXd &mu,
                     const Eigen::VectorXd &log_var) {
  return -0.5
         * (1.0 + log_var.array() - mu.array().square() - log_var.array().exp())
               .sum();
}

LossBreakdown compute_loss(std::span<const Eigen::MatrixXd> pred_probs,
                           std::span<const Eigen::MatrixXd> targets,
                           std::span<const LatentStats> stats,
                           std::span<const double> pred_ron,
                           std::span<const std::optional<double>> ron_labels,
                           double beta, DecoderOutput output) {
  const std::size_t n = pred_probs.size();
  if (n == 0 || targets.size() != n || stats.size() != n
      || pred_ron.size() != n || ron_labels.size() != n)
    throw ShapeError("compute_loss: inconsistent batch sizes");

  LossBreakdown loss;
  loss.beta = beta;
  double abs_err = 0;
  for (std::size_t b = 0; b < n; ++b) {
    const Eigen::MatrixXd &p = pred_probs[b];
    const Eigen::MatrixXd &y = targets[b];
    if (p.rows() != y.rows() || p.cols() != y.cols())
      throw ShapeError("compute_loss: prediction/target shape mismatch");
    if (!((p.array() > 0.0).all() && (p.array() < 1.0).all()))
      throw DomainError("predicted probability outside (0, 1)");

    if (output == DecoderOutput::kSigmoid) {
      loss.bce -= (y.array() * p.array().log()
                   + (1.0 - y.array()) * (1.0 - p.array()).log())
                      .sum();
    } else {
      loss.bce -= (y.array() * p.array().log()).sum();
    }
    loss.kld += kl_divergence(stats[b].mu, stats[b].log_var);
    if (ron_labels[b]) {
      abs_err += std::abs(pred_ron[b] - *ron_labels[b]);
      ++loss.labeled;
    }
  }
  loss.bce /= static_cast<double>(n);
  loss.kld /= static_cast<double>(n);
  loss.l_ron = loss.labeled > 0 ? abs_err / loss.labeled : 0.0;
  loss.total = loss.bce + beta * loss.kld + loss.l_ron;
  return loss;
}

double composite_score(double recon_accuracy, double validity,
                       double ron_mae) {
  if (!(ron_mae > 0))
    throw DomainError("composite score requires a positive RON MAE");
  return recon_accuracy + validity + 5.0 / ron_mae;
}

}  // namespace fuelgen
