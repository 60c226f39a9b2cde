//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_FEATURES_H_
#define FUELGEN_REGRESS_FEATURES_H_

#include <span>
#include <string>
#include <vector>

#include "fuelgen/covae/model.h"
#include "fuelgen/regress/metrics.h"

namespace fuelgen {

inline constexpr double kMinRon = 0.0;
inline constexpr double kMaxRon = 150.0;

struct RonRecord {
  std::string smiles;
  double ron;
};

struct FeatureSet {
  Dataset data;
  // SMILES of the encoded records, aligned with data rows.
  std::vector<std::string> smiles;
  // "smiles: reason" for every record that could not be encoded.
  std::vector<std::string> skipped;
};

/// Encoder means as features, one row per encodable record. Unencodable
/// records are logged and skipped. Throws ValidationError for labels outside
/// [0, 150].
FeatureSet extract_features(const CoVaeModel &model,
                            std::span<const RonRecord> records);

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_FEATURES_H_
