//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/regress/regressor.h"

#include <fstream>
#include <iterator>

#include <nlohmann/json.hpp>

#include "fuelgen/covae/checkpoint.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

using nlohmann::json;

std::string_view family_name(RegressorFamily f) {
  switch (f) {
  case RegressorFamily::kGbt:
    return "gbt";
  case RegressorFamily::kRidge:
    return "ridge";
  case RegressorFamily::kKnn:
    return "knn";
  }
  return "unknown";
}

RegressorFamily parse_family(std::string_view name) {
  for (auto f: { RegressorFamily::kGbt, RegressorFamily::kRidge,
                 RegressorFamily::kKnn }) {
    if (family_name(f) == name)
      return f;
  }
  throw ValidationError("unknown regressor family '" + std::string(name)
                        + "'");
}

Regressor::Regressor(Model model, int n_features)
    : model_(std::move(model)), n_features_(n_features) { }

RegressorFamily Regressor::family() const {
  return static_cast<RegressorFamily>(model_.index());
}

double Regressor::predict(const Eigen::Ref<const Eigen::VectorXd> &x) const {
  if (x.size() != n_features_)
    throw ShapeError("regressor expects " + std::to_string(n_features_)
                     + " features, got " + std::to_string(x.size()));
  return std::visit([&](const auto &m) { return m.predict(x); }, model_);
}

Eigen::VectorXd Regressor::predict_rows(const Eigen::MatrixXd &x) const {
  Eigen::VectorXd out(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    out[i] = predict(x.row(i).transpose());
  return out;
}

namespace {
  json vec_to_json(const Eigen::VectorXd &v) {
    return std::vector<double>(v.data(), v.data() + v.size());
  }

  Eigen::VectorXd vec_from_json(const json &j) {
    auto v = j.get<std::vector<double>>();
    return Eigen::Map<Eigen::VectorXd>(v.data(),
                                       static_cast<Eigen::Index>(v.size()));
  }

  json model_json(const GbtModel &m) {
    json trees = json::array();
    for (const RegressionTree &t: m.trees) {
      json nodes = json::array();
      for (const TreeNode &n: t.nodes)
        nodes.push_back({ n.feature, n.threshold, n.left, n.right, n.value });
      trees.push_back(std::move(nodes));
    }
    return { { "init", m.init }, { "learning_rate", m.learning_rate },
             { "degenerate", m.degenerate }, { "trees", trees } };
  }

  json model_json(const LinearModel &m) {
    return { { "coef", vec_to_json(m.coef) }, { "intercept", m.intercept } };
  }

  json model_json(const KnnModel &m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.data().x.rows(); ++i)
      rows.push_back(vec_to_json(m.data().x.row(i).transpose()));
    return { { "k", m.params().k },
             { "weights", std::string(knn_weights_name(m.params().weights)) },
             { "p", m.params().p },
             { "x", rows },
             { "y", vec_to_json(m.data().y) } };
  }

  GbtModel gbt_from_json(const json &j, int n_features) {
    GbtModel m;
    m.init = j.at("init").get<double>();
    m.learning_rate = j.at("learning_rate").get<double>();
    m.degenerate = j.at("degenerate").get<bool>();
    m.n_features = n_features;
    for (const json &t: j.at("trees")) {
      RegressionTree tree;
      for (const json &n: t) {
        TreeNode node { n.at(0).get<int>(), n.at(1).get<double>(),
                        n.at(2).get<int>(), n.at(3).get<int>(),
                        n.at(4).get<double>() };
        const int size = static_cast<int>(t.size());
        if (node.feature >= n_features
            || (node.feature >= 0
                && (node.left <= 0 || node.left >= size || node.right <= 0
                    || node.right >= size)))
          throw ValidationError("malformed tree node");
        tree.nodes.push_back(node);
      }
      if (tree.nodes.empty())
        throw ValidationError("empty tree");
      m.trees.push_back(std::move(tree));
    }
    return m;
  }

  KnnModel knn_from_json(const json &j, int n_features) {
    Dataset d;
    const json &rows = j.at("x");
    d.x.resize(static_cast<Eigen::Index>(rows.size()), n_features);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Eigen::VectorXd r = vec_from_json(rows[i]);
      if (r.size() != n_features)
        throw ValidationError("neighbor row has the wrong width");
      d.x.row(static_cast<Eigen::Index>(i)) = r;
    }
    d.y = vec_from_json(j.at("y"));
    KnnParams p { j.at("k").get<int>(),
                  parse_knn_weights(j.at("weights").get<std::string>()),
                  j.at("p").get<int>() };
    return KnnModel(std::move(d), p);
  }
}  // namespace

std::string Regressor::to_json() const {
  json j = {
    { "format", kRegressorFormat },
    { "format_version", kRegressorVersion },
    { "family", std::string(family_name(family())) },
    { "n_features", n_features_ },
    { "model", std::visit([](const auto &m) { return model_json(m); },
                          model_) },
  };
  return j.dump() + "\n";
}

Regressor Regressor::from_json(std::string_view text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw ValidationError("regressor file is not valid JSON");
  if (j.value("format", "") != kRegressorFormat)
    throw VersionError("not a regressor file");
  std::string version = j.value("format_version", "");
  if (major_version(version) != major_version(kRegressorVersion))
    throw VersionError("regressor format version " + version
                       + " is incompatible with "
                       + std::string(kRegressorVersion));
  try {
    const int nf = j.at("n_features").get<int>();
    const json &m = j.at("model");
    switch (parse_family(j.at("family").get<std::string>())) {
    case RegressorFamily::kGbt:
      return Regressor(gbt_from_json(m, nf), nf);
    case RegressorFamily::kRidge: {
      LinearModel lm { vec_from_json(m.at("coef")),
                       m.at("intercept").get<double>() };
      if (lm.coef.size() != nf)
        throw ValidationError("coefficient count mismatch");
      return Regressor(std::move(lm), nf);
    }
    case RegressorFamily::kKnn:
      return Regressor(knn_from_json(m, nf), nf);
    }
  } catch (const json::exception &e) {
    throw ValidationError(std::string("malformed regressor file: ")
                          + e.what());
  }
  throw ValidationError("unreachable regressor family");
}

Regressor fit_regressor(const Dataset &data, const RegressorParams &params) {
  switch (params.family) {
  case RegressorFamily::kGbt:
    return Regressor(fit_gbt(data, params.gbt), data.features());
  case RegressorFamily::kRidge:
    return Regressor(fit_ridge(data, params.ridge_alpha), data.features());
  case RegressorFamily::kKnn:
    return Regressor(fit_knn(data, params.knn), data.features());
  }
  throw ValidationError("unknown regressor family");
}

void save_regressor(const std::filesystem::path &path, const Regressor &r) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << r.to_json();
  if (!out)
    throw IoError("failed writing " + path.string());
}

Regressor load_regressor(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MissingArtifactError("missing regressor " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return Regressor::from_json(text);
}

}  // namespace fuelgen
