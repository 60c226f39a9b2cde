//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_COVAE_CHECKPOINT_H_
#define FUELGEN_COVAE_CHECKPOINT_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "fuelgen/covae/model.h"

namespace fuelgen {

inline constexpr std::string_view kCheckpointFormat = "fuelgen-covae";
inline constexpr std::string_view kCheckpointVersion = "1.0.0";

struct CheckpointInfo {
  int epoch = 0;
  // Textual engine state, empty when not recorded.
  std::string rng_state;
};

/// Container layout: one line of JSON metadata terminated by '\n', followed
/// by param_count 64-bit IEEE doubles in little-endian byte order, in the
/// block order listed under "layout".
std::string serialize_checkpoint(const CoVaeModel &model,
                                 const CheckpointInfo &info = {});

/// Throws VersionError on a foreign format or a different major version and
/// ValidationError on a truncated or inconsistent payload.
CoVaeModel deserialize_checkpoint(std::string_view bytes,
                                  CheckpointInfo *info = nullptr);

void save_checkpoint(const std::filesystem::path &path,
                     const CoVaeModel &model, const CheckpointInfo &info = {});

/// Throws MissingArtifactError when the file does not exist.
CoVaeModel load_checkpoint(const std::filesystem::path &path,
                           CheckpointInfo *info = nullptr);

/// Major component of a semantic version string; -1 when malformed.
int major_version(std::string_view version);

}  // namespace fuelgen

#endif  // FUELGEN_COVAE_CHECKPOINT_H_
