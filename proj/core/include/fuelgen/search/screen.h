//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_SEARCH_SCREEN_H_
#define FUELGEN_SEARCH_SCREEN_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/covae/model.h"
#include "fuelgen/regress/regressor.h"
#include "fuelgen/search/de.h"

namespace fuelgen {

struct ScreenConfig {
  double threshold = 110.0;
  double extension = 0.10;
  DeOptions de;
  int runs = 1;
  std::uint64_t seed = 0;

  /// Throws ValidationError unless threshold > 0, extension >= 0, runs >= 1.
  void validate() const;
};

enum class Novelty {
  kInRonTable,
  kInCorpus,
  kNovel,
};

std::string_view novelty_name(Novelty n);

struct CandidateRecord {
  Eigen::VectorXd z;
  std::string decoded;
  // Empty when the decode is invalid.
  std::string canonical;
  double first_pass_ron = 0;
  std::optional<double> revalidated_ron;
  bool valid = false;
  bool accepted = false;
  Novelty novelty = Novelty::kNovel;
  int heavy_atoms = 0;
  int oxygens = 0;
  int rings = 0;
  std::string functional_groups;
};

/// The regressor applied to z as a feature vector.
double predict_ron_latent(const Regressor &reg, const Eigen::VectorXd &z);

/// Two-step gate. Step 1 greedy-decodes z and requires a parse and valence
/// pass. Step 2 re-encodes the decoded string to its mean, predicts again and
/// accepts when that prediction exceeds the threshold. Novelty is left as
/// kNovel.
CandidateRecord validate_candidate(const CoVaeModel &covae,
                                   const Regressor &reg,
                                   const Eigen::VectorXd &z, double threshold);

struct ScreenResult {
  // Unique by canonical SMILES, sorted by revalidated RON descending, then
  // canonical SMILES.
  std::vector<CandidateRecord> accepted;
  LatentBounds bounds;
  // Final-population members above the threshold on the first pass.
  int harvested = 0;
  int invalid = 0;
  int below_threshold = 0;
  int duplicates = 0;
  // Best predicted value per run.
  std::vector<double> run_best;
};

/// Bounds come from the encoder means of `corpus`. Each of cfg.runs DE runs
/// uses its own seed; every final-population member predicted above the
/// threshold is validated. Novelty compares canonical SMILES against the
/// RON table first, then the corpus.
ScreenResult screen(const CoVaeModel &covae, const Regressor &reg,
                    std::span<const std::string> ron_smiles,
                    std::span<const std::string> corpus,
                    const ScreenConfig &cfg);

}  // namespace fuelgen

#endif  // FUELGEN_SEARCH_SCREEN_H_
