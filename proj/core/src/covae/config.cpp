//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/config.h"

#include <string>

#include "fuelgen/util/error.h"

namespace fuelgen {

std::string_view decoder_output_name(DecoderOutput output) {
  return output == DecoderOutput::kSigmoid ? "sigmoid" : "softmax";
}

DecoderOutput parse_decoder_output(std::string_view name) {
  if (name == "sigmoid")
    return DecoderOutput::kSigmoid;
  if (name == "softmax")
    return DecoderOutput::kSoftmax;
  throw ValidationError("unknown decoder output '" + std::string(name) + "'");
}

CoVaeConfig CoVaeConfig::paper_scale() {
  return CoVaeConfig {};
}

CoVaeConfig CoVaeConfig::desk_scale() {
  CoVaeConfig cfg;
  cfg.hidden_size = 48;
  cfg.fc1_size = 48;
  cfg.fc2_size = 32;
  cfg.cond1_size = 24;
  cfg.cond2_size = 12;
  cfg.latent_dim = 16;
  cfg.batch_size = 2;
  cfg.epochs = 40;
  cfg.beta_ramp_epochs = 20;
  // With only thousands of updates a full-weight KL term collapses the
  // posterior before the decoder learns to use it.
  cfg.beta_cap = 0.01;
  cfg.output = DecoderOutput::kSoftmax;
  cfg.allow_out_of_range = true;
  return cfg;
}

namespace {
  void check_range(std::string_view name, int value, int lo, int hi,
                   bool enforce) {
    if (value <= 0)
      throw ValidationError(std::string(name) + " must be positive");
    if (enforce && (value < lo || value > hi))
      throw ValidationError(std::string(name) + " = " + std::to_string(value)
                            + " outside [" + std::to_string(lo) + ", "
                            + std::to_string(hi) + "]");
  }
}  // namespace

void CoVaeConfig::validate() const {
  const bool enforce = !allow_out_of_range;
  check_range("num_layers", num_layers, 2, 3, enforce);
  check_range("hidden_size", hidden_size, 64, 256, enforce);
  check_range("fc1_size", fc1_size, 50, 150, enforce);
  check_range("fc2_size", fc2_size, 50, 150, enforce);
  check_range("cond1_size", cond1_size, 10, 100, enforce);
  check_range("cond2_size", cond2_size, 10, 100, enforce);
  check_range("latent_dim", latent_dim, 32, 128, enforce);
  check_range("batch_size", batch_size, 64, 256, enforce);
  if (!(learning_rate > 0))
    throw ValidationError("learning_rate must be positive");
  if (epochs < 0 || beta_ramp_epochs < 0)
    throw ValidationError("epoch counts must be non-negative");
  if (!(beta_cap > 0 && beta_cap <= 1))
    throw ValidationError("beta_cap must lie in (0, 1]");
}

}  // namespace fuelgen
