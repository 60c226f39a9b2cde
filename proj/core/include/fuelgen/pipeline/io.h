//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_PIPELINE_IO_H_
#define FUELGEN_PIPELINE_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "fuelgen/covae/train.h"
#include "fuelgen/regress/features.h"
#include "fuelgen/search/screen.h"

namespace fuelgen {

/// First whitespace-separated field of each non-blank line.
std::vector<std::string> read_smi(const std::filesystem::path &path);
void write_smi(const std::filesystem::path &path,
               std::span<const std::string> smiles);

/// Requires a `smiles,ron` header. Throws ValidationError listing every
/// unparsable, out-of-range or duplicated record.
std::vector<RonRecord> read_ron_csv(const std::filesystem::path &path);
void write_ron_csv(const std::filesystem::path &path,
                   std::span<const RonRecord> records);

void write_metrics_csv(const std::filesystem::path &path,
                       std::span<const MetricsRow> rows);

void write_candidates_csv(const std::filesystem::path &path,
                          std::span<const CandidateRecord> rows);

/// Companion to the candidate table: decoded string and latent vector per
/// row, in the same order, so both gate steps can be replayed.
void write_candidate_latents(const std::filesystem::path &path,
                             std::span<const CandidateRecord> rows);

/// Histogram of (carbons, oxygens) over the candidates.
void write_element_distribution(const std::filesystem::path &path,
                                std::span<const CandidateRecord> rows);

/// Linear-interpolation quantile, q in [0, 1]. Throws on empty input.
double quantile(std::vector<double> values, double q);

/// Exclusive lock on an output directory, held for the object's lifetime.
class OutputLock {
public:
  /// Throws IoError when another process holds the lock.
  explicit OutputLock(const std::filesystem::path &dir);
  ~OutputLock();
  OutputLock(const OutputLock &) = delete;
  OutputLock &operator=(const OutputLock &) = delete;

private:
  std::filesystem::path path_;
};

}  // namespace fuelgen

#endif  // FUELGEN_PIPELINE_IO_H_
