//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/covae/evaluate.h"

#include <cmath>
#include <random>

#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/covae/network.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

ReconstructionResult reconstruction_accuracy(const CoVaeModel &model,
                                             std::span<const TokenSeq> set) {
  if (set.empty())
    throw ValidationError("reconstruction accuracy of an empty set");

  std::vector<TokenSeq> decoded = greedy_decode(model,
                                                encode_means(model, set));
  int exact = 0;
  long chars = 0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (decoded[i] == set[i])
      ++exact;
    for (int t = 0; t < kSequenceLength; ++t)
      chars += decoded[i][t] == set[i][t] ? 1 : 0;
  }
  const double n = static_cast<double>(set.size());
  return { exact / n, static_cast<double>(chars) / (n * kSequenceLength) };
}

std::vector<std::string> reconstruct(const CoVaeModel &model,
                                     std::span<const TokenSeq> set) {
  std::vector<std::string> out;
  if (set.empty())
    return out;
  for (const TokenSeq &seq: greedy_decode(model, encode_means(model, set)))
    out.push_back(decode_tokens(seq, model.vocab()));
  return out;
}

bool is_valid_molecule(const std::string &smiles) {
  try {
    return check_valence(parse_smiles(smiles)).valid();
  } catch (const SyntaxError &) {
    return false;
  }
}

double prior_validity(const CoVaeModel &model, int n, std::uint64_t seed) {
  if (n < 1)
    throw ValidationError("prior_validity needs at least one sample");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd z(model.latent_dim(), n);
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    for (Eigen::Index i = 0; i < z.rows(); ++i)
      z(i, j) = normal(rng);
  }

  int valid = 0;
  for (const TokenSeq &seq: greedy_decode(model, z))
    valid += is_valid_molecule(decode_tokens(seq, model.vocab())) ? 1 : 0;
  return static_cast<double>(valid) / n;
}

double head_mae(const CoVaeModel &model, std::span<const TokenSeq> tokens,
                std::span<const double> labels) {
  if (tokens.size() != labels.size() || tokens.empty())
    throw ValidationError("head_mae needs matching, non-empty inputs");
  Eigen::VectorXd pred = predict_ron_head(model, encode_means(model, tokens));
  double err = 0;
  for (std::size_t i = 0; i < labels.size(); ++i)
    err += std::abs(pred[static_cast<Eigen::Index>(i)] - labels[i]);
  return err / static_cast<double>(labels.size());
}

}  // namespace fuelgen
