//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_EVALUATE_H_
#define FUELGEN_COVAE_EVALUATE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fuelgen/covae/model.h"

namespace fuelgen {

struct ReconstructionResult {
  // Fraction of molecules whose greedy decode of mu equals the input string.
  double exact = 0;
  // Fraction of matching positions over all kSequenceLength slots.
  double per_char = 0;
};

/// Throws ValidationError on an empty set.
ReconstructionResult reconstruction_accuracy(const CoVaeModel &model,
                                             std::span<const TokenSeq> set);

/// Greedy decodes of the latent means of `set`, as strings.
std::vector<std::string> reconstruct(const CoVaeModel &model,
                                     std::span<const TokenSeq> set);

/// True when `smiles` parses and passes the valence check.
bool is_valid_molecule(const std::string &smiles);

/// Fraction of n standard-normal latent draws whose greedy decode is a valid
/// molecule. Throws ValidationError when n < 1.
double prior_validity(const CoVaeModel &model, int n, std::uint64_t seed);

/// Mean absolute error of the property head on labeled molecules.
double head_mae(const CoVaeModel &model, std::span<const TokenSeq> tokens,
                std::span<const double> labels);

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_EVALUATE_H_
