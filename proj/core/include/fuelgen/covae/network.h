//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_NETWORK_H_
#define FUELGEN_COVAE_NETWORK_H_

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/covae/loss.h"
#include "fuelgen/covae/model.h"
#include "fuelgen/encoding/onehot.h"

namespace fuelgen {

/// Training examples plus optional RON labels (same length).
struct Batch {
  std::vector<TokenSeq> tokens;
  std::vector<std::optional<double>> ron;

  int size() const { return static_cast<int>(tokens.size()); }
};

struct LossAndGradient {
  LossBreakdown loss;
  Eigen::VectorXd gradient;
};

/// Forward pass of the full objective for fixed reparameterization noise
/// (latent_dim x batch). The decoder is teacher-forced: step t reads the
/// one-hot target of step t-1, step 0 reads zeros.
LossBreakdown batch_loss(const CoVaeModel &model, const Batch &batch,
                         const Eigen::MatrixXd &noise, double beta);

/// batch_loss plus its exact gradient with respect to every parameter,
/// by backpropagation through time and through the reparameterization.
LossAndGradient batch_gradient(const CoVaeModel &model, const Batch &batch,
                               const Eigen::MatrixXd &noise, double beta);

/// Throws ShapeError when a matrix is not kSequenceLength x vocab size.
std::vector<LatentStats> encode(const CoVaeModel &model,
                                std::span<const OneHotMatrix> inputs);

/// Latent means, one column per sequence.
Eigen::MatrixXd encode_means(const CoVaeModel &model,
                             std::span<const TokenSeq> inputs);

/// Per-position output probabilities under greedy decoding: step t reads
/// the one-hot argmax of step t-1. Throws ShapeError on a wrong latent size.
Eigen::MatrixXd decode(const CoVaeModel &model, const Eigen::VectorXd &z);

/// Greedy token sequences for each column of `z`.
std::vector<TokenSeq> greedy_decode(const CoVaeModel &model,
                                    const Eigen::MatrixXd &z);

/// Property head on one latent mean, in RON units.
double predict_ron_head(const CoVaeModel &model, const Eigen::VectorXd &mu);

Eigen::VectorXd predict_ron_head(const CoVaeModel &model,
                                 const Eigen::MatrixXd &mu);

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_NETWORK_H_
