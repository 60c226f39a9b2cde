//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_PIPELINE_CONFIG_H_
#define FUELGEN_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fuelgen/chem/curate.h"
#include "fuelgen/covae/config.h"
#include "fuelgen/hpo/bayes_opt.h"
#include "fuelgen/moo/nsga2.h"
#include "fuelgen/regress/regressor.h"
#include "fuelgen/search/screen.h"

namespace fuelgen {

/// Environment variable naming the default output directory.
inline constexpr const char *kOutputRootEnv = "FUELGEN_OUTPUT_ROOT";

/// Flat dotted-key configuration read from "key = value" lines. Blank lines
/// and lines starting with '#' are ignored.
class KeyValueConfig {
public:
  /// Throws ValidationError naming the offending line numbers.
  static KeyValueConfig parse(std::string_view text);
  static KeyValueConfig load(const std::filesystem::path &path);

  void set(const std::string &key, const std::string &value) {
    values_[key] = value;
  }
  const std::map<std::string, std::string> &values() const { return values_; }
  std::string dump() const;

private:
  std::map<std::string, std::string> values_;
};

struct SplitConfig {
  double train = 0.95;
  double val = 0.025;
  double test = 0.025;
  int ron_val = 10;
  int ron_test = 10;

  /// Throws ValidationError unless fractions are nonnegative and sum to 1.
  void validate() const;
};

struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path ron_table;
  std::filesystem::path out_dir;
  std::uint64_t seed = 0;

  int enumerate_max_heavy = 6;
  CurationRules rules;
  // Number of molecules the synthetic labeler draws from the corpus.
  int label_count = 200;
  SplitConfig split;

  CoVaeConfig covae = CoVaeConfig::paper_scale();
  int prior_samples = 1000;

  HpoOptions hpo;
  int hpo_epochs = 300;

  RegressorParams regressor;
  int cv_folds = 10;
  NsgaOptions nsga = NsgaOptions::paper_scale();

  ScreenConfig screen;
  // When set, the threshold is this quantile of the RON table labels.
  std::optional<double> threshold_quantile;

  static PipelineConfig paper_scale();
  static PipelineConfig desk_scale();

  /// Throws ValidationError for unknown keys or unparsable values.
  void apply(const KeyValueConfig &kv);
  KeyValueConfig to_key_values() const;
  void validate() const;
};

/// A configurable value, addressable by its dotted key.
struct ConfigField {
  std::string key;
  std::string help;
  std::function<std::string(const PipelineConfig &)> get;
  std::function<void(PipelineConfig &, const std::string &)> set;
};

const std::vector<ConfigField> &config_fields();

}  // namespace fuelgen

#endif  // FUELGEN_PIPELINE_CONFIG_H_
