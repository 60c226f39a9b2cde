//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_HPO_BAYES_OPT_H_
#define FUELGEN_HPO_BAYES_OPT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/hpo/gp.h"
#include "fuelgen/hpo/space.h"

namespace fuelgen {

struct HpoBudget {
  int init = 16;
  int batches = 40;
  int batch_size = 8;

  static HpoBudget paper_scale() { return {}; }
  static HpoBudget desk_scale() { return { 8, 8, 4 }; }
  int total() const { return init + batches * batch_size; }
};

struct HpoOptions {
  HpoBudget budget;
  double kappa = 2.576;
  int random_starts = 256;
  GpOptions gp;
  std::uint64_t seed = 0;
};

struct Evaluation {
  double score;
  // Auxiliary values written to the trace, one per HpoTrace metric name.
  std::vector<double> metrics;
};

struct Observation {
  Eigen::VectorXd unit;
  Eigen::VectorXd native;
  double score;
  std::vector<double> metrics;
  // Failure reason when the evaluator threw; score is then -inf.
  std::string note;
};

/// Receives a native point on the integer lattice.
using Evaluator = std::function<Evaluation(const Eigen::VectorXd &native)>;
using ObservationCallback = std::function<void(const Observation &)>;

struct HpoResult {
  Observation best;
  std::vector<Observation> trace;
};

/// Picks q distinct unit points. Each maximizes the UCB acquisition of a GP
/// fitted to the finite observations plus, for earlier picks in the batch,
/// a lie equal to the worst observed score. The maximizer scores
/// opts.random_starts uniform points and refines the best few with a compass
/// search. Without finite observations the picks are uniform draws.
std::vector<Eigen::VectorXd>
suggest_batch(const std::vector<Observation> &observed, const HpoSpace &space,
              int q, const HpoOptions &opts, std::uint64_t stream);

/// Random initial design followed by GP-guided batches. `resume` holds
/// observations from an earlier, interrupted run with the same options; they
/// are kept and the run continues where it stopped. A throwing evaluator is
/// recorded with score -inf and its message.
HpoResult run_hpo(const HpoSpace &space, const HpoOptions &opts,
                  const Evaluator &evaluator,
                  std::vector<Observation> resume = {},
                  const ObservationCallback &on_observation = {});

/// Baseline with the same budget: every point uniform at random.
HpoResult run_random_search(const HpoSpace &space, const HpoOptions &opts,
                            const Evaluator &evaluator);

/// CSV columns: iteration, one per axis, the metric names, then `score_name`.
void write_trace(const std::filesystem::path &path, const HpoSpace &space,
                 const std::vector<std::string> &metric_names,
                 const std::string &score_name,
                 const std::vector<Observation> &trace);

std::vector<Observation> read_trace(const std::filesystem::path &path,
                                    const HpoSpace &space,
                                    const std::vector<std::string>
                                        &metric_names,
                                    const std::string &score_name);

}  // namespace fuelgen

#endif  // FUELGEN_HPO_BAYES_OPT_H_
