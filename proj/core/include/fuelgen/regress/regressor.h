//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_REGRESS_REGRESSOR_H_
#define FUELGEN_REGRESS_REGRESSOR_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <Eigen/Dense>

#include "fuelgen/regress/gbt.h"
#include "fuelgen/regress/knn.h"
#include "fuelgen/regress/ridge.h"

namespace fuelgen {

inline constexpr std::string_view kRegressorFormat = "fuelgen-regressor";
inline constexpr std::string_view kRegressorVersion = "1.0.0";

enum class RegressorFamily {
  kGbt,
  kRidge,
  kKnn,
};

std::string_view family_name(RegressorFamily f);
RegressorFamily parse_family(std::string_view name);

struct RegressorParams {
  RegressorFamily family = RegressorFamily::kGbt;
  GbtParams gbt;
  double ridge_alpha = 1.0;
  KnnParams knn;
};

class Regressor {
public:
  using Model = std::variant<GbtModel, LinearModel, KnnModel>;

  Regressor() = default;
  Regressor(Model model, int n_features);

  RegressorFamily family() const;
  int n_features() const { return n_features_; }
  const Model &model() const { return model_; }

  /// Throws ShapeError on a feature-count mismatch.
  double predict(const Eigen::Ref<const Eigen::VectorXd> &x) const;
  Eigen::VectorXd predict_rows(const Eigen::MatrixXd &x) const;

  std::string to_json() const;
  /// Throws VersionError on a foreign format or major version.
  static Regressor from_json(std::string_view text);

private:
  Model model_;
  int n_features_ = 0;
};

Regressor fit_regressor(const Dataset &data, const RegressorParams &params);

void save_regressor(const std::filesystem::path &path, const Regressor &r);
/// Throws MissingArtifactError when the file does not exist.
Regressor load_regressor(const std::filesystem::path &path);

}  // namespace fuelgen

#endif  // FUELGEN_REGRESS_REGRESSOR_H_
