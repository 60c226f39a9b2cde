//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_SEARCH_DE_H_
#define FUELGEN_SEARCH_DE_H_

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "fuelgen/search/bounds.h"

namespace fuelgen {

struct DeOptions {
  // Explicit population size; 0 means min(multiplier * dim, max_population).
  int population = 0;
  int population_multiplier = 15;
  int max_population = 200;
  // F is drawn once per generation from [f_lo, f_hi).
  double f_lo = 0.5;
  double f_hi = 1.0;
  double crossover = 0.7;
  int max_generations = 1000;
  // Stops when stddev(values) <= atol + tol * |mean(values)|.
  double tol = 0.01;
  double atol = 0.0;
  // Replace members as soon as a trial wins; otherwise once per generation.
  bool immediate = true;
  std::uint64_t seed = 0;

  int population_for(int dim) const;
};

struct DeResult {
  Eigen::VectorXd best;
  double best_value;
  // Best-so-far objective after initialization and after each generation.
  std::vector<double> trace;
  int generations = 0;
  bool converged = false;
  // Stopped by max_generations before converging; best is best-so-far.
  bool budget_exhausted = false;
  // Final population, one member per column, with objective values.
  Eigen::MatrixXd population;
  Eigen::VectorXd values;
};

using DeObjective = std::function<double(const Eigen::VectorXd &)>;

/// Maximizes `objective` over the box with rand/1/bin differential
/// evolution: Latin hypercube initialization, mutant a + F (b - c) from three
/// distinct members other than the target, binomial crossover with one
/// forced coordinate, clipping to the box and greedy selection.
DeResult de_optimize(const DeObjective &objective, const LatentBounds &bounds,
                     const DeOptions &opts);

}  // namespace fuelgen

#endif  // FUELGEN_SEARCH_DE_H_
