//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/model.h"

#include <cmath>
#include <utility>

namespace fuelgen {

ParamLayout::ParamLayout(const CoVaeConfig &cfg, int vocab_size) {
  const int h = cfg.hidden_size;
  for (int l = 0; l < cfg.num_layers; ++l)
    encoder_lstm.push_back(add_lstm("encoder.lstm" + std::to_string(l),
                                    l == 0 ? vocab_size : h, h));
  encoder_fc1 = add_dense("encoder.fc1", cfg.fc1_size, h);
  encoder_fc2 = add_dense("encoder.fc2", cfg.fc2_size, cfg.fc1_size);
  encoder_mu = add_dense("encoder.mu", cfg.latent_dim, cfg.fc2_size);
  encoder_logvar = add_dense("encoder.logvar", cfg.latent_dim, cfg.fc2_size);

  decoder_fc2 = add_dense("decoder.fc2", cfg.fc2_size, cfg.latent_dim);
  decoder_fc1 = add_dense("decoder.fc1", cfg.fc1_size, cfg.fc2_size);
  decoder_init = add_dense("decoder.init", cfg.num_layers * h, cfg.fc1_size);
  for (int l = 0; l < cfg.num_layers; ++l)
    decoder_lstm.push_back(add_lstm("decoder.lstm" + std::to_string(l),
                                    l == 0 ? vocab_size + cfg.fc1_size : h,
                                    h));
  decoder_out = add_dense("decoder.out", vocab_size, h);

  head_fc1 = add_dense("head.fc1", cfg.cond1_size, cfg.latent_dim);
  head_fc2 = add_dense("head.fc2", cfg.cond2_size, cfg.cond1_size);
  head_out = add_dense("head.out", 1, cfg.cond2_size);
}

int ParamLayout::add(std::string name, int rows, int cols, int fan_in) {
  blocks_.push_back({ std::move(name), rows, cols, total_, fan_in });
  total_ += blocks_.back().size();
  return static_cast<int>(blocks_.size()) - 1;
}

DenseIds ParamLayout::add_dense(const std::string &prefix, int out, int in) {
  DenseIds ids;
  ids.weight = add(prefix + ".w", out, in, in);
  ids.bias = add(prefix + ".b", out, 1, in);
  return ids;
}

LstmIds ParamLayout::add_lstm(const std::string &prefix, int in, int hidden) {
  LstmIds ids;
  ids.w_input = add(prefix + ".w_ih", 4 * hidden, in, in);
  ids.w_hidden = add(prefix + ".w_hh", 4 * hidden, hidden, hidden);
  ids.bias = add(prefix + ".b", 4 * hidden, 1, hidden);
  return ids;
}

namespace {
  const CoVaeConfig &validated(const CoVaeConfig &cfg) {
    cfg.validate();
    return cfg;
  }
}  // namespace

CoVaeModel::CoVaeModel(const CoVaeConfig &cfg, Vocab vocab)
    : cfg_(validated(cfg)), vocab_(std::move(vocab)), layout_(cfg_, vocab_.size()),
      params_(Eigen::VectorXd::Zero(
          static_cast<Eigen::Index>(layout_.total_size()))) { }

MatrixMap CoVaeModel::block(int id) {
  return block_of(params_, layout_.blocks()[id]);
}

ConstMatrixMap CoVaeModel::block(int id) const {
  const ParamBlock &b = layout_.blocks()[id];
  return ConstMatrixMap(params_.data() + b.offset, b.rows, b.cols);
}

void CoVaeModel::init_uniform(std::mt19937_64 &rng) {
  for (const ParamBlock &b: layout_.blocks()) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(b.fan_in));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (std::size_t i = 0; i < b.size(); ++i)
      params_[static_cast<Eigen::Index>(b.offset + i)] = dist(rng);
  }
  const Eigen::Index h = cfg_.hidden_size;
  for (const auto *stack: { &layout_.encoder_lstm, &layout_.decoder_lstm }) {
    for (const LstmIds &ids: *stack)
      block(ids.bias).middleRows(h, h).setOnes();
  }
  block(layout_.encoder_logvar.bias).setConstant(kInitialLogVar);
}

}  // namespace fuelgen
