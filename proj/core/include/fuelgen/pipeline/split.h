//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_PIPELINE_SPLIT_H_
#define FUELGEN_PIPELINE_SPLIT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fuelgen/pipeline/config.h"
#include "fuelgen/regress/features.h"

namespace fuelgen {

struct SplitResult {
  std::vector<std::string> corpus_train;
  std::vector<std::string> corpus_val;
  std::vector<std::string> corpus_test;
  std::vector<RonRecord> ron_train;
  std::vector<RonRecord> ron_val;
  std::vector<RonRecord> ron_test;
  // RON training molecules absent from the corpus, added to corpus_train.
  int injected = 0;
  // Strata that could not supply their allocation.
  std::vector<std::string> warnings;
};

/// Stratified, seeded split of canonical inputs.
///
/// The RON table is split first, stratified by heavy-atom count, into
/// ron_val and ron_test molecules. The corpus is stratified by heavy-atom
/// count and primary functional group. Corpus members that are RON
/// validation or test molecules are pinned to the matching corpus split, so
/// no held-out RON molecule is trained on. Remaining validation and test
/// quotas are allocated proportionally per stratum, with remainders
/// assigned to strata in seeded random order. All lists are sorted.
///
/// Throws ValidationError when the holdouts exceed the RON table.
SplitResult split_dataset(std::span<const std::string> corpus,
                          std::span<const RonRecord> ron,
                          const SplitConfig &cfg, std::uint64_t seed);

}  // namespace fuelgen

#endif  // FUELGEN_PIPELINE_SPLIT_H_
