//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/pipeline/config.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fuelgen/util/csv.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

namespace {
  std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
      return "";
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
  }

  int to_int(const std::string &v) {
    long long x = parse_int(v);
    if (x < INT32_MIN || x > INT32_MAX)
      throw ValidationError("integer out of range: " + v);
    return static_cast<int>(x);
  }

  bool to_bool(const std::string &v) {
    if (v == "true" || v == "1")
      return true;
    if (v == "false" || v == "0")
      return false;
    throw ValidationError("not a boolean: '" + v + "'");
  }

  std::string from_bool(bool b) { return b ? "true" : "false"; }

  template <class M>
  ConfigField int_field(std::string key, std::string help, M member) {
    return { std::move(key), std::move(help),
             [member](const PipelineConfig &c) {
               return std::to_string(member(c));
             },
             [member](PipelineConfig &c, const std::string &v) {
               member(c) = to_int(v);
             } };
  }

  template <class M>
  ConfigField double_field(std::string key, std::string help, M member) {
    return { std::move(key), std::move(help),
             [member](const PipelineConfig &c) {
               return format_double(member(c));
             },
             [member](PipelineConfig &c, const std::string &v) {
               member(c) = parse_double(v);
             } };
  }

  std::vector<ConfigField> make_fields() {
    using C = PipelineConfig;
    std::vector<ConfigField> f;
    f.push_back({ "paths.corpus", "input corpus (.smi)",
                  [](const C &c) { return c.corpus.string(); },
                  [](C &c, const std::string &v) { c.corpus = v; } });
    f.push_back({ "paths.ron_table", "RON table (smiles,ron)",
                  [](const C &c) { return c.ron_table.string(); },
                  [](C &c, const std::string &v) { c.ron_table = v; } });
    f.push_back({ "paths.out_dir", "output directory",
                  [](const C &c) { return c.out_dir.string(); },
                  [](C &c, const std::string &v) { c.out_dir = v; } });
    f.push_back({ "seed", "global seed",
                  [](const C &c) { return std::to_string(c.seed); },
                  [](C &c, const std::string &v) {
                    long long s = parse_int(v);
                    if (s < 0)
                      throw ValidationError("seed must be nonnegative");
                    c.seed = static_cast<std::uint64_t>(s);
                  } });

    f.push_back(int_field("enumerate.max_heavy_atoms",
                          "largest enumerated molecule",
                          [](auto &c) -> auto & { return c.enumerate_max_heavy; }));
    f.push_back({ "curate.elements", "allowed element symbols",
                  [](const C &c) {
                    std::string s;
                    for (Element e: c.rules.allowed_elements)
                      s += element_symbol(e);
                    return s;
                  },
                  [](C &c, const std::string &v) {
                    c.rules.allowed_elements.clear();
                    for (char ch: v) {
                      if (ch == 'C')
                        c.rules.allowed_elements.push_back(Element::kCarbon);
                      else if (ch == 'O')
                        c.rules.allowed_elements.push_back(Element::kOxygen);
                      else
                        throw ValidationError(std::string("unsupported "
                                                          "element ")
                                              + ch);
                    }
                  } });
    f.push_back(int_field("curate.max_heavy_atoms", "heavy-atom limit",
                          [](auto &c) -> auto & {
                            return c.rules.max_heavy_atoms;
                          }));
    f.push_back(int_field("curate.max_rings", "ring limit",
                          [](auto &c) -> auto & { return c.rules.max_rings; }));
    f.push_back(int_field("curate.max_smiles_length", "SMILES length limit",
                          [](auto &c) -> auto & {
                            return c.rules.max_smiles_length;
                          }));
    f.push_back(int_field("label.count", "molecules given synthetic labels",
                          [](auto &c) -> auto & { return c.label_count; }));

    f.push_back(double_field("split.train", "corpus training fraction",
                             [](auto &c) -> auto & { return c.split.train; }));
    f.push_back(double_field("split.val", "corpus validation fraction",
                             [](auto &c) -> auto & { return c.split.val; }));
    f.push_back(double_field("split.test", "corpus test fraction",
                             [](auto &c) -> auto & { return c.split.test; }));
    f.push_back(int_field("split.ron_val", "RON validation molecules",
                          [](auto &c) -> auto & { return c.split.ron_val; }));
    f.push_back(int_field("split.ron_test", "RON test molecules",
                          [](auto &c) -> auto & { return c.split.ron_test; }));

    f.push_back(int_field("covae.num_layers", "recurrent layers",
                          [](auto &c) -> auto & { return c.covae.num_layers; }));
    f.push_back(int_field("covae.hidden_size", "recurrent hidden size",
                          [](auto &c) -> auto & { return c.covae.hidden_size; }));
    f.push_back(int_field("covae.fc1_size", "first FC layer",
                          [](auto &c) -> auto & { return c.covae.fc1_size; }));
    f.push_back(int_field("covae.fc2_size", "second FC layer",
                          [](auto &c) -> auto & { return c.covae.fc2_size; }));
    f.push_back(int_field("covae.cond1_size", "first property-head layer",
                          [](auto &c) -> auto & { return c.covae.cond1_size; }));
    f.push_back(int_field("covae.cond2_size", "second property-head layer",
                          [](auto &c) -> auto & { return c.covae.cond2_size; }));
    f.push_back(int_field("covae.latent_dim", "latent dimension",
                          [](auto &c) -> auto & { return c.covae.latent_dim; }));
    f.push_back(int_field("covae.batch_size", "mini-batch size",
                          [](auto &c) -> auto & { return c.covae.batch_size; }));
    f.push_back(double_field("covae.learning_rate", "Adam step size",
                             [](auto &c) -> auto & {
                               return c.covae.learning_rate;
                             }));
    f.push_back(int_field("covae.epochs", "training epochs",
                          [](auto &c) -> auto & { return c.covae.epochs; }));
    f.push_back(int_field("covae.beta_ramp_epochs", "KL weight ramp length",
                          [](auto &c) -> auto & {
                            return c.covae.beta_ramp_epochs;
                          }));
    f.push_back(double_field("covae.beta_cap", "final KL weight",
                             [](auto &c) -> auto & { return c.covae.beta_cap; }));
    f.push_back({ "covae.output", "decoder output: sigmoid or softmax",
                  [](const C &c) {
                    return std::string(decoder_output_name(c.covae.output));
                  },
                  [](C &c, const std::string &v) {
                    c.covae.output = parse_decoder_output(v);
                  } });
    f.push_back({ "covae.allow_out_of_range",
                  "accept sizes outside the tuned ranges",
                  [](const C &c) {
                    return from_bool(c.covae.allow_out_of_range);
                  },
                  [](C &c, const std::string &v) {
                    c.covae.allow_out_of_range = to_bool(v);
                  } });
    f.push_back(int_field("covae.prior_samples",
                          "latent draws for the validity estimate",
                          [](auto &c) -> auto & { return c.prior_samples; }));

    f.push_back(int_field("hpo.init", "random initial evaluations",
                          [](auto &c) -> auto & { return c.hpo.budget.init; }));
    f.push_back(int_field("hpo.batches", "guided batches",
                          [](auto &c) -> auto & { return c.hpo.budget.batches; }));
    f.push_back(int_field("hpo.batch_size", "points per batch",
                          [](auto &c) -> auto & {
                            return c.hpo.budget.batch_size;
                          }));
    f.push_back(double_field("hpo.kappa", "confidence-bound weight",
                             [](auto &c) -> auto & { return c.hpo.kappa; }));
    f.push_back(int_field("hpo.epochs", "training epochs per evaluation",
                          [](auto &c) -> auto & { return c.hpo_epochs; }));

    f.push_back({ "regressor.family", "gbt, ridge or knn",
                  [](const C &c) {
                    return std::string(family_name(c.regressor.family));
                  },
                  [](C &c, const std::string &v) {
                    c.regressor.family = parse_family(v);
                  } });
    f.push_back(int_field("regressor.n_estimators", "boosting stages",
                          [](auto &c) -> auto & {
                            return c.regressor.gbt.n_estimators;
                          }));
    f.push_back(int_field("regressor.max_depth", "tree depth",
                          [](auto &c) -> auto & {
                            return c.regressor.gbt.max_depth;
                          }));
    f.push_back(double_field("regressor.learning_rate", "boosting shrinkage",
                             [](auto &c) -> auto & {
                               return c.regressor.gbt.learning_rate;
                             }));
    f.push_back(int_field("regressor.min_samples_leaf", "smallest leaf",
                          [](auto &c) -> auto & {
                            return c.regressor.gbt.min_samples_leaf;
                          }));
    f.push_back(double_field("regressor.alpha", "ridge penalty",
                             [](auto &c) -> auto & {
                               return c.regressor.ridge_alpha;
                             }));
    f.push_back(int_field("regressor.k", "neighbors",
                          [](auto &c) -> auto & { return c.regressor.knn.k; }));
    f.push_back({ "regressor.weights", "uniform or distance",
                  [](const C &c) {
                    return std::string(
                        knn_weights_name(c.regressor.knn.weights));
                  },
                  [](C &c, const std::string &v) {
                    c.regressor.knn.weights = parse_knn_weights(v);
                  } });
    f.push_back(int_field("regressor.p", "Minkowski exponent",
                          [](auto &c) -> auto & { return c.regressor.knn.p; }));
    f.push_back(int_field("regressor.cv_folds", "cross-validation folds",
                          [](auto &c) -> auto & { return c.cv_folds; }));

    f.push_back(int_field("nsga.population", "population size",
                          [](auto &c) -> auto & { return c.nsga.population; }));
    f.push_back(int_field("nsga.generations", "generations",
                          [](auto &c) -> auto & { return c.nsga.generations; }));

    f.push_back(double_field("search.threshold", "acceptance RON threshold",
                             [](auto &c) -> auto & {
                               return c.screen.threshold;
                             }));
    f.push_back({ "search.threshold_quantile",
                  "derive the threshold from this quantile of RON labels; "
                  "'none' disables",
                  [](const C &c) {
                    return c.threshold_quantile
                               ? format_double(*c.threshold_quantile)
                               : std::string("none");
                  },
                  [](C &c, const std::string &v) {
                    if (v == "none" || v.empty())
                      c.threshold_quantile.reset();
                    else
                      c.threshold_quantile = parse_double(v);
                  } });
    f.push_back(double_field("search.extension", "bound extension per side",
                             [](auto &c) -> auto & {
                               return c.screen.extension;
                             }));
    f.push_back(int_field("search.runs", "independent optimizer runs",
                          [](auto &c) -> auto & { return c.screen.runs; }));
    f.push_back(int_field("search.population",
                          "population size, 0 for the default rule",
                          [](auto &c) -> auto & {
                            return c.screen.de.population;
                          }));
    f.push_back(int_field("search.max_generations", "generation budget",
                          [](auto &c) -> auto & {
                            return c.screen.de.max_generations;
                          }));
    f.push_back(double_field("search.tol", "relative convergence tolerance",
                             [](auto &c) -> auto & { return c.screen.de.tol; }));
    f.push_back(double_field("search.crossover", "crossover rate",
                             [](auto &c) -> auto & {
                               return c.screen.de.crossover;
                             }));
    return f;
  }
}  // namespace

const std::vector<ConfigField> &config_fields() {
  static const std::vector<ConfigField> fields = make_fields();
  return fields;
}

KeyValueConfig KeyValueConfig::parse(std::string_view text) {
  KeyValueConfig kv;
  std::vector<std::string> bad;
  std::istringstream in { std::string(text) };
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    const auto eq = t.find('=');
    std::string key = eq == std::string::npos ? "" : trim(t.substr(0, eq));
    if (key.empty()) {
      bad.push_back("line " + std::to_string(no) + ": '" + t + "'");
      continue;
    }
    kv.set(key, trim(t.substr(eq + 1)));
  }
  if (!bad.empty()) {
    std::string msg = "malformed config lines:";
    for (const std::string &b: bad)
      msg += " " + b + ";";
    throw ValidationError(msg);
  }
  return kv;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path &path) {
  std::string text;
  for (const std::string &line: read_lines(path))
    text += line + "\n";
  return parse(text);
}

std::string KeyValueConfig::dump() const {
  std::string out;
  for (const auto &[k, v]: values_)
    out += k + " = " + v + "\n";
  return out;
}

void SplitConfig::validate() const {
  if (train < 0 || val < 0 || test < 0
      || std::abs(train + val + test - 1.0) > 1e-9)
    throw ValidationError("split fractions must be nonnegative and sum to 1");
  if (ron_val < 0 || ron_test < 0)
    throw ValidationError("RON holdout counts must be nonnegative");
}

PipelineConfig PipelineConfig::paper_scale() { return {}; }

PipelineConfig PipelineConfig::desk_scale() {
  PipelineConfig c;
  c.covae = CoVaeConfig::desk_scale();
  c.prior_samples = 200;
  c.hpo.budget = HpoBudget::desk_scale();
  c.hpo_epochs = 10;
  c.nsga = NsgaOptions::desk_scale();
  c.screen.runs = 8;
  c.screen.de.max_generations = 100;
  c.threshold_quantile = 0.9;
  return c;
}

void PipelineConfig::apply(const KeyValueConfig &kv) {
  const auto &fields = config_fields();
  std::vector<std::string> errors;
  for (const auto &[key, value]: kv.values()) {
    auto it = std::find_if(fields.begin(), fields.end(),
                           [&](const ConfigField &f) { return f.key == key; });
    if (it == fields.end()) {
      errors.push_back("unknown key " + key);
      continue;
    }
    try {
      it->set(*this, value);
    } catch (const Error &e) {
      errors.push_back(key + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::string msg = "invalid configuration:";
    for (const std::string &e: errors)
      msg += " " + e + ";";
    throw ValidationError(msg);
  }
}

KeyValueConfig PipelineConfig::to_key_values() const {
  KeyValueConfig kv;
  for (const ConfigField &f: config_fields())
    kv.set(f.key, f.get(*this));
  return kv;
}

void PipelineConfig::validate() const {
  rules.validate();
  split.validate();
  covae.validate();
  screen.validate();
  if (enumerate_max_heavy < 1 || label_count < 1 || prior_samples < 1
      || hpo_epochs < 1 || cv_folds < 2)
    throw ValidationError("counts must be positive and cv_folds at least 2");
  if (threshold_quantile
      && !(*threshold_quantile >= 0 && *threshold_quantile <= 1))
    throw ValidationError("threshold quantile must lie in [0, 1]");
}

}  // namespace fuelgen
