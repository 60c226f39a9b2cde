//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_PIPELINE_COMMANDS_H_
#define FUELGEN_PIPELINE_COMMANDS_H_

#include <string>
#include <string_view>
#include <vector>

#include "fuelgen/pipeline/config.h"

namespace fuelgen {

/// Fixed artifact names inside the output directory.
namespace artifacts {
  inline constexpr const char *kEnumerated = "enumerated.smi";
  inline constexpr const char *kCurated = "curated.smi";
  inline constexpr const char *kRejects = "curation_rejects.csv";
  inline constexpr const char *kRonTable = "ron.csv";
  inline constexpr const char *kCorpusTrain = "corpus_train.smi";
  inline constexpr const char *kCorpusVal = "corpus_val.smi";
  inline constexpr const char *kCorpusTest = "corpus_test.smi";
  inline constexpr const char *kRonTrain = "ron_train.csv";
  inline constexpr const char *kRonVal = "ron_val.csv";
  inline constexpr const char *kRonTest = "ron_test.csv";
  inline constexpr const char *kCheckpoint = "covae.ckpt";
  inline constexpr const char *kCovaeMetrics = "covae_metrics.csv";
  inline constexpr const char *kCovaeEval = "covae_eval.json";
  inline constexpr const char *kHpoTrace = "hpo_trace.csv";
  inline constexpr const char *kHpoBest = "hpo_best.conf";
  inline constexpr const char *kRegressor = "regressor.json";
  inline constexpr const char *kRegressorMetrics = "regressor_metrics.csv";
  inline constexpr const char *kRegressorCv = "regressor_cv.csv";
  inline constexpr const char *kMooHistory = "regressor_hpo_history.csv";
  inline constexpr const char *kMooFront = "regressor_pareto.csv";
  inline constexpr const char *kMooBest = "regressor_best.conf";
  inline constexpr const char *kCandidates = "candidates.csv";
  inline constexpr const char *kCandidateLatents = "candidate_latents.csv";
  inline constexpr const char *kElements = "element_distribution.csv";
  inline constexpr const char *kScreenSummary = "screen_summary.json";
  inline constexpr const char *kRunSummary = "run_summary.json";
}  // namespace artifacts

struct CommandInfo {
  std::string name;
  std::string help;
};

const std::vector<CommandInfo> &commands();

/// Runs one subcommand against cfg.out_dir under its lock. Throws the
/// library's Error subclasses on failure.
void run_command(std::string_view name, const PipelineConfig &cfg);

}  // namespace fuelgen

#endif  // FUELGEN_PIPELINE_COMMANDS_H_
