//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_MOO_NSGA2_H_
#define FUELGEN_MOO_NSGA2_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "fuelgen/moo/pareto.h"

namespace fuelgen {

enum class GeneKind {
  kContinuous,
  kInteger,
  // Index in [0, hi]; lo must be 0.
  kCategorical,
};

struct Gene {
  std::string name;
  GeneKind kind;
  double lo;
  double hi;
};

using Genome = std::vector<double>;

struct MooIndividual {
  Genome genome;
  Objectives objectives;
  // 1 for the non-dominated front.
  int rank = 0;
  double crowding = 0;
};

struct NsgaOptions {
  int population = 100;
  int generations = 20;
  double crossover_prob = 0.9;
  double eta_crossover = 15;
  double eta_mutation = 20;
  // Per-gene mutation probability; non-positive means 1 / genome length.
  double mutation_rate = 0;
  std::uint64_t seed = 0;
  // Hypervolume reference; empty means derived from the initial population.
  Objectives reference;

  static NsgaOptions paper_scale() { return {}; }
  static NsgaOptions desk_scale() {
    NsgaOptions o;
    o.population = 24;
    o.generations = 10;
    return o;
  }
};

/// Must be pure given (genome, seed). A throwing evaluator scores +inf on
/// every objective.
using MooEvaluator =
    std::function<Objectives(const Genome &genome, std::uint64_t seed)>;

struct GenerationStats {
  int generation;
  double best_f1;
  int front_size;
  double hypervolume;
};

struct MooResult {
  std::vector<MooIndividual> front;
  std::vector<MooIndividual> population;
  std::vector<GenerationStats> history;
  Objectives reference;
};

/// Throws ValidationError for empty or inconsistent gene bounds.
void validate_genes(const std::vector<Gene> &genes);

/// Elitist NSGA-II. Generation 0 is the random initial population; each of
/// the following generations breeds a full offspring population by binary
/// tournament on (rank, crowding), simulated-binary crossover and polynomial
/// mutation on numeric genes (integers rounded), uniform crossover and
/// resampling on categorical genes, then keeps the best half of parents and
/// offspring. Evaluation seeds derive from (seed, generation, index).
MooResult evolve(const std::vector<Gene> &genes, const MooEvaluator &evaluator,
                 const NsgaOptions &opts);

/// Member with the smallest first objective; ties go to the first member
/// after sorting by objectives then genome. Throws EmptyFrontError.
MooIndividual select_best(const std::vector<MooIndividual> &front);

/// CSV columns: generation,best_mae,front_size,hypervolume.
void write_history(const std::filesystem::path &path,
                   const std::vector<GenerationStats> &history);

}  // namespace fuelgen

#endif  // FUELGEN_MOO_NSGA2_H_
