//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_TRAIN_H_
#define FUELGEN_COVAE_TRAIN_H_

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/covae/model.h"

namespace fuelgen {

/// Adaptive-moment SGD with bias correction.
class AdamOptimizer {
public:
  explicit AdamOptimizer(std::size_t size, double learning_rate,
                         double beta1 = 0.9, double beta2 = 0.999,
                         double epsilon = 1e-8);

  void step(Eigen::VectorXd &params, const Eigen::VectorXd &grad);
  long steps() const { return t_; }

private:
  double lr_, beta1_, beta2_, eps_;
  long t_ = 0;
  Eigen::VectorXd m_, v_;
};

struct TrainingSet {
  std::vector<TokenSeq> corpus;
  // Aligned with corpus; only labeled molecules contribute to the RON loss.
  std::vector<std::optional<double>> ron;
  std::vector<TokenSeq> val_corpus;
  std::vector<TokenSeq> val_ron_tokens;
  std::vector<double> val_ron_labels;
};

struct MetricsRow {
  int epoch;
  double beta;
  double bce;
  double kld;
  double l_ron;
  double total;
  // NaN when the corresponding validation set is empty.
  double val_recon_accuracy;
  double val_char_accuracy;
  double val_ron_mae;
};

using EpochCallback = std::function<void(const MetricsRow &)>;

/// Builds a model and initializes it from cfg.seed.
CoVaeModel make_model(const CoVaeConfig &cfg, Vocab vocab = {});

/// Trains for cfg.epochs epochs. Each epoch shuffles the corpus, draws
/// reparameterization noise and takes one Adam step per mini-batch, with
/// beta = beta_schedule(epoch). Everything random derives from cfg.seed, so
/// identical inputs give a bitwise identical parameter trajectory.
///
/// The head's RON offset and scale are set from the mean and standard
/// deviation of the training labels before the first step.
///
/// Throws DivergenceError when a batch loss or gradient becomes non-finite.
std::vector<MetricsRow> train(CoVaeModel &model, const TrainingSet &data,
                              const EpochCallback &on_epoch = {});

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_TRAIN_H_
