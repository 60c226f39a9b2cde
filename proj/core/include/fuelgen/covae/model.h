//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_MODEL_H_
#define FUELGEN_COVAE_MODEL_H_

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/covae/config.h"
#include "fuelgen/encoding/vocab.h"

namespace fuelgen {

// Initial encoder log-variance. A near-deterministic start lets the decoder
// learn to read the latent before sampling noise dominates it.
inline constexpr double kInitialLogVar = -6.0;

struct ParamBlock {
  std::string name;
  int rows;
  int cols;
  std::size_t offset;
  // Initialization half-width is 1 / sqrt(fan_in).
  int fan_in;

  std::size_t size() const { return static_cast<std::size_t>(rows) * cols; }
};

/// Weight and bias block ids of a dense layer y = W x + b.
struct DenseIds {
  int weight;
  int bias;
};

/// Block ids of one LSTM layer; gate rows are ordered input, forget, cell,
/// output.
struct LstmIds {
  int w_input;
  int w_hidden;
  int bias;
};

/// Flat parameter layout. Blocks are stored column-major, back to back, in
/// this order:
///
///   encoder.lstm{l}.{w_ih, w_hh, b}   l = 0..layers-1
///   encoder.fc1.{w, b}                hidden -> fc1
///   encoder.fc2.{w, b}                fc1 -> fc2
///   encoder.mu.{w, b}                 fc2 -> latent
///   encoder.logvar.{w, b}             fc2 -> latent
///   decoder.fc2.{w, b}                latent -> fc2
///   decoder.fc1.{w, b}                fc2 -> fc1
///   decoder.init.{w, b}               fc1 -> layers * hidden
///   decoder.lstm{l}.{w_ih, w_hh, b}
///   decoder.out.{w, b}                hidden -> vocab
///   head.fc1.{w, b}                   latent -> cond1
///   head.fc2.{w, b}                   cond1 -> cond2
///   head.out.{w, b}                   cond2 -> 1
class ParamLayout {
public:
  ParamLayout(const CoVaeConfig &cfg, int vocab_size);

  const std::vector<ParamBlock> &blocks() const { return blocks_; }
  std::size_t total_size() const { return total_; }

  std::vector<LstmIds> encoder_lstm;
  DenseIds encoder_fc1, encoder_fc2, encoder_mu, encoder_logvar;
  DenseIds decoder_fc2, decoder_fc1, decoder_init;
  std::vector<LstmIds> decoder_lstm;
  DenseIds decoder_out;
  DenseIds head_fc1, head_fc2, head_out;

private:
  int add(std::string name, int rows, int cols, int fan_in);
  DenseIds add_dense(const std::string &prefix, int out, int in);
  LstmIds add_lstm(const std::string &prefix, int in, int hidden);

  std::vector<ParamBlock> blocks_;
  std::size_t total_ = 0;
};

using MatrixMap = Eigen::Map<Eigen::MatrixXd>;
using ConstMatrixMap = Eigen::Map<const Eigen::MatrixXd>;

/// All Co-VAE parameters plus the fixed affine map that puts the property
/// head's output in RON units: ron = ron_offset + ron_scale * head(mu).
class CoVaeModel {
public:
  CoVaeModel(const CoVaeConfig &cfg, Vocab vocab = {});

  const CoVaeConfig &config() const { return cfg_; }
  const Vocab &vocab() const { return vocab_; }
  const ParamLayout &layout() const { return layout_; }
  int vocab_size() const { return vocab_.size(); }
  int latent_dim() const { return cfg_.latent_dim; }

  Eigen::VectorXd &params() { return params_; }
  const Eigen::VectorXd &params() const { return params_; }

  MatrixMap block(int id);
  ConstMatrixMap block(int id) const;

  /// Uniform in +-1/sqrt(fan_in) for every block, except that LSTM
  /// forget-gate biases start at one and the log-variance bias at
  /// kInitialLogVar.
  void init_uniform(std::mt19937_64 &rng);
  void set_zero() { params_.setZero(); }

  double ron_offset = 0.0;
  double ron_scale = 1.0;

private:
  CoVaeConfig cfg_;
  Vocab vocab_;
  ParamLayout layout_;
  Eigen::VectorXd params_;
};

/// View of a flat gradient vector with the same layout as a model.
inline MatrixMap block_of(Eigen::VectorXd &flat, const ParamBlock &b) {
  return MatrixMap(flat.data() + b.offset, b.rows, b.cols);
}

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_MODEL_H_
