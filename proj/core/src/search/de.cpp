//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/search/de.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

int DeOptions::population_for(int dim) const {
  if (population > 0)
    return population;
  return std::min(population_multiplier * dim, max_population);
}

namespace {
  // Minimized energy; non-finite objective values rank last.
  double energy(const DeObjective &f, const Eigen::VectorXd &x) {
    const double v = f(x);
    return std::isfinite(v) ? -v : std::numeric_limits<double>::infinity();
  }
}  // namespace

DeResult de_optimize(const DeObjective &objective, const LatentBounds &bounds,
                     const DeOptions &opts) {
  const int dim = bounds.dim();
  const int np = opts.population_for(dim);
  if (dim < 1 || np < 4)
    throw ValidationError("differential evolution needs a population of at "
                          "least 4");
  if (!(opts.f_lo > 0 && opts.f_lo <= opts.f_hi) || opts.crossover < 0
      || opts.crossover > 1 || opts.max_generations < 0)
    throw ValidationError("invalid differential evolution options");

  std::mt19937_64 rng = make_rng(opts.seed, { 0xde });
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Eigen::ArrayXd width = bounds.hi - bounds.lo;

  Eigen::MatrixXd pop(dim, np);
  std::vector<int> perm(np);
  for (int j = 0; j < dim; ++j) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < np; ++i)
      pop(j, i) = bounds.lo[j] + (perm[i] + u(rng)) / np * width[j];
  }

  Eigen::VectorXd e(np);
  for (int i = 0; i < np; ++i)
    e[i] = energy(objective, pop.col(i));

  DeResult r;
  Eigen::Index best_i;
  e.minCoeff(&best_i);
  r.best = pop.col(best_i);
  double best_e = e[best_i];
  r.trace.push_back(-best_e);

  std::uniform_int_distribution<int> pick(0, np - 1);
  std::uniform_int_distribution<int> pick_dim(0, dim - 1);
  Eigen::MatrixXd next = pop;
  Eigen::VectorXd next_e = e;

  for (int gen = 1; gen <= opts.max_generations; ++gen) {
    const double f = opts.f_lo + (opts.f_hi - opts.f_lo) * u(rng);
    for (int i = 0; i < np; ++i) {
      int a, b, c;
      do { a = pick(rng); } while (a == i);
      do { b = pick(rng); } while (b == i || b == a);
      do { c = pick(rng); } while (c == i || c == a || c == b);

      Eigen::VectorXd trial = pop.col(i);
      const int forced = pick_dim(rng);
      for (int j = 0; j < dim; ++j) {
        if (j == forced || u(rng) < opts.crossover) {
          const double v = pop(j, a) + f * (pop(j, b) - pop(j, c));
          trial[j] = std::clamp(v, bounds.lo[j], bounds.hi[j]);
        }
      }
      const double te = energy(objective, trial);
      if (te <= e[i]) {
        if (opts.immediate) {
          pop.col(i) = trial;
          e[i] = te;
        } else {
          next.col(i) = trial;
          next_e[i] = te;
        }
        if (te < best_e) {
          best_e = te;
          r.best = trial;
        }
      }
    }
    if (!opts.immediate) {
      pop = next;
      e = next_e;
    }
    r.generations = gen;
    r.trace.push_back(-best_e);

    if (e.allFinite()) {
      const double mean = e.mean();
      const double sd = std::sqrt((e.array() - mean).square().mean());
      if (sd <= opts.atol + opts.tol * std::abs(mean)) {
        r.converged = true;
        break;
      }
    }
  }

  r.budget_exhausted = !r.converged;
  r.best_value = -best_e;
  r.population = std::move(pop);
  r.values = -e;
  return r;
}

}  // namespace fuelgen
