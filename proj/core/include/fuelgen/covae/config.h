//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_CONFIG_H_
#define FUELGEN_COVAE_CONFIG_H_

#include <cstdint>
#include <string_view>

namespace fuelgen {

enum class DecoderOutput {
  // Independent sigmoid per one-hot element, summed binary cross-entropy.
  kSigmoid,
  // Softmax per position, categorical cross-entropy.
  kSoftmax,
};

std::string_view decoder_output_name(DecoderOutput output);
DecoderOutput parse_decoder_output(std::string_view name);

struct CoVaeConfig {
  int num_layers = 2;
  int hidden_size = 151;
  int fc1_size = 84;
  int fc2_size = 72;
  int cond1_size = 49;
  int cond2_size = 19;
  int latent_dim = 73;
  int batch_size = 172;
  double learning_rate = 1e-3;
  int epochs = 300;
  int beta_ramp_epochs = 75;
  double beta_cap = 0.25;
  std::uint64_t seed = 0;
  DecoderOutput output = DecoderOutput::kSigmoid;
  // Sizes outside the tuned ranges are rejected unless this is set.
  bool allow_out_of_range = false;

  /// Best configuration found by the full-scale search.
  static CoVaeConfig paper_scale();
  /// Small network for single-core runs: out of the tuned ranges, softmax
  /// output, small batches and a light KL weight.
  static CoVaeConfig desk_scale();

  /// Throws ValidationError on non-positive sizes, beta_cap outside (0, 1],
  /// or (unless allow_out_of_range) sizes outside the tuned ranges:
  /// layers 2-3, hidden 64-256, FC 50-150, conditioning 10-100,
  /// latent 32-128, batch 64-256.
  void validate() const;

  bool operator==(const CoVaeConfig &) const = default;
};

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_CONFIG_H_
