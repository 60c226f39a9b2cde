//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/train.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "fuelgen/covae/evaluate.h"
#include "fuelgen/covae/loss.h"
#include "fuelgen/covae/network.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

AdamOptimizer::AdamOptimizer(std::size_t size, double learning_rate,
                             double beta1, double beta2, double epsilon)
    : lr_(learning_rate), beta1_(beta1), beta2_(beta2), eps_(epsilon),
      m_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size))),
      v_(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size))) { }

void AdamOptimizer::step(Eigen::VectorXd &params,
                         const Eigen::VectorXd &grad) {
  ++t_;
  m_ = beta1_ * m_ + (1.0 - beta1_) * grad;
  v_ = beta2_ * v_ + (1.0 - beta2_) * grad.cwiseProduct(grad);
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  params.array() -= lr_ * (m_.array() / c1)
                    / ((v_.array() / c2).sqrt() + eps_);
}

CoVaeModel make_model(const CoVaeConfig &cfg, Vocab vocab) {
  CoVaeModel model(cfg, std::move(vocab));
  std::mt19937_64 rng(cfg.seed);
  model.init_uniform(rng);
  return model;
}

namespace {
  void set_ron_scaling(CoVaeModel &model,
                       const std::vector<std::optional<double>> &labels) {
    double sum = 0, sq = 0;
    int n = 0;
    for (const auto &y: labels) {
      if (!y)
        continue;
      sum += *y;
      sq += *y * *y;
      ++n;
    }
    model.ron_offset = n > 0 ? sum / n : 0.0;
    double var = n > 1 ? sq / n - model.ron_offset * model.ron_offset : 0.0;
    model.ron_scale = var > 1e-12 ? std::sqrt(var) : 1.0;
  }
}  // namespace

std::vector<MetricsRow> train(CoVaeModel &model, const TrainingSet &data,
                              const EpochCallback &on_epoch) {
  const CoVaeConfig &cfg = model.config();
  if (data.corpus.empty())
    throw ValidationError("training corpus is empty");
  if (data.ron.size() != data.corpus.size())
    throw ValidationError("RON labels must align with the training corpus");

  set_ron_scaling(model, data.ron);

  // Stream 1 of the seed drives shuffling and noise; stream 0 is used for
  // initialization by make_model.
  std::seed_seq seq { static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32), 1u };
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  AdamOptimizer adam(model.params().size(), cfg.learning_rate);

  const int n = static_cast<int>(data.corpus.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<MetricsRow> history;

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    const double beta = beta_schedule(epoch, cfg);
    std::shuffle(order.begin(), order.end(), rng);

    double bce = 0, kld = 0, ron_err = 0;
    int ron_count = 0;
    for (int start = 0; start < n; start += cfg.batch_size) {
      const int end = std::min(n, start + cfg.batch_size);
      Batch batch;
      for (int i = start; i < end; ++i) {
        batch.tokens.push_back(data.corpus[order[i]]);
        batch.ron.push_back(data.ron[order[i]]);
      }
      Eigen::MatrixXd noise(cfg.latent_dim, batch.size());
      for (Eigen::Index j = 0; j < noise.cols(); ++j) {
        for (Eigen::Index i = 0; i < noise.rows(); ++i)
          noise(i, j) = normal(rng);
      }

      LossAndGradient lg = batch_gradient(model, batch, noise, beta);
      if (!std::isfinite(lg.loss.total) || !lg.gradient.allFinite())
        throw DivergenceError("non-finite loss at epoch "
                              + std::to_string(epoch));
      adam.step(model.params(), lg.gradient);

      bce += lg.loss.bce * batch.size();
      kld += lg.loss.kld * batch.size();
      ron_err += lg.loss.l_ron * lg.loss.labeled;
      ron_count += lg.loss.labeled;
    }

    MetricsRow row;
    row.epoch = epoch;
    row.beta = beta;
    row.bce = bce / n;
    row.kld = kld / n;
    row.l_ron = ron_count > 0 ? ron_err / ron_count : 0.0;
    row.total = row.bce + beta * row.kld + row.l_ron;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    row.val_recon_accuracy = nan;
    row.val_char_accuracy = nan;
    row.val_ron_mae = nan;
    if (!data.val_corpus.empty()) {
      ReconstructionResult rec = reconstruction_accuracy(model,
                                                         data.val_corpus);
      row.val_recon_accuracy = rec.exact;
      row.val_char_accuracy = rec.per_char;
    }
    if (!data.val_ron_tokens.empty())
      row.val_ron_mae = head_mae(model, data.val_ron_tokens,
                                 data.val_ron_labels);
    history.push_back(row);
    if (on_epoch)
      on_epoch(row);
  }
  return history;
}

}  // namespace fuelgen
