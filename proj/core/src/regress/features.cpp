//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/features.h"

#include <spdlog/spdlog.h>

#include "fuelgen/covae/network.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

FeatureSet extract_features(const CoVaeModel &model,
                            std::span<const RonRecord> records) {
  FeatureSet out;
  std::vector<TokenSeq> tokens;
  std::vector<double> labels;
  for (const RonRecord &r: records) {
    if (!(r.ron >= kMinRon && r.ron <= kMaxRon))
      throw ValidationError("RON label " + std::to_string(r.ron) + " of "
                            + r.smiles + " is outside [0, 150]");
    try {
      tokens.push_back(encode_tokens(r.smiles, model.vocab()));
    } catch (const Error &e) {
      EncodingError err(r.smiles + ": " + e.what());
      spdlog::warn("skipping unencodable record {}", err.what());
      out.skipped.push_back(err.what());
      continue;
    }
    labels.push_back(r.ron);
    out.smiles.push_back(r.smiles);
  }

  out.data.y = Eigen::Map<Eigen::VectorXd>(
      labels.data(), static_cast<Eigen::Index>(labels.size()));
  if (tokens.empty()) {
    out.data.x.resize(0, model.latent_dim());
    return out;
  }
  out.data.x = encode_means(model, tokens).transpose();
  return out;
}

}  // namespace fuelgen
