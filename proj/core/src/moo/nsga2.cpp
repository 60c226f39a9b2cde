//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/moo/nsga2.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <spdlog/spdlog.h>

#include "fuelgen/moo/hypervolume.h"
#include "fuelgen/util/csv.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

void validate_genes(const std::vector<Gene> &genes) {
  if (genes.empty())
    throw ValidationError("genome needs at least one gene");
  for (const Gene &g: genes) {
    if (!(g.lo <= g.hi))
      throw ValidationError("gene " + g.name + " needs lo <= hi");
    if (g.kind == GeneKind::kCategorical && (g.lo != 0 || g.hi < 0))
      throw ValidationError("categorical gene " + g.name
                            + " must index from 0");
  }
}

namespace {
  constexpr double kInf = std::numeric_limits<double>::infinity();

  class Variation {
  public:
    Variation(const std::vector<Gene> &genes, const NsgaOptions &opts)
        : genes_(genes), opts_(opts),
          rng_(make_rng(opts.seed, { 0x5eed })),
          mutation_rate_(opts.mutation_rate > 0
                             ? opts.mutation_rate
                             : 1.0 / static_cast<double>(genes.size())) { }

    Genome random_genome() {
      Genome g(genes_.size());
      for (std::size_t i = 0; i < genes_.size(); ++i) {
        const Gene &gene = genes_[i];
        if (gene.kind == GeneKind::kContinuous)
          g[i] = gene.lo + uniform() * (gene.hi - gene.lo);
        else
          g[i] = random_int(gene);
      }
      return g;
    }

    int tournament(const std::vector<MooIndividual> &pop) {
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(pop.size()) - 1);
      const int a = pick(rng_);
      int b = pick(rng_);
      if (pop.size() > 1) {
        while (b == a)
          b = pick(rng_);
      }
      const MooIndividual &x = pop[a], &y = pop[b];
      if (x.rank != y.rank)
        return x.rank < y.rank ? a : b;
      if (x.crowding != y.crowding)
        return x.crowding > y.crowding ? a : b;
      return a;
    }

    void crossover(Genome &c1, Genome &c2) {
      if (uniform() > opts_.crossover_prob)
        return;
      for (std::size_t i = 0; i < genes_.size(); ++i) {
        if (uniform() > 0.5)
          continue;
        if (genes_[i].kind == GeneKind::kCategorical)
          std::swap(c1[i], c2[i]);
        else
          sbx(genes_[i], c1[i], c2[i]);
      }
    }

    void mutate(Genome &g) {
      for (std::size_t i = 0; i < genes_.size(); ++i) {
        if (uniform() >= mutation_rate_)
          continue;
        if (genes_[i].kind == GeneKind::kCategorical)
          g[i] = random_int(genes_[i]);
        else
          polynomial(genes_[i], g[i]);
      }
      for (std::size_t i = 0; i < genes_.size(); ++i)
        g[i] = repair(genes_[i], g[i]);
    }

  private:
    double uniform() { return std::uniform_real_distribution<double>()(rng_); }

    double random_int(const Gene &g) {
      std::uniform_int_distribution<long> d(std::lround(std::ceil(g.lo)),
                                            std::lround(std::floor(g.hi)));
      return static_cast<double>(d(rng_));
    }

    static double repair(const Gene &g, double v) {
      v = std::clamp(v, g.lo, g.hi);
      if (g.kind != GeneKind::kContinuous)
        v = std::clamp(std::round(v), std::ceil(g.lo), std::floor(g.hi));
      return v;
    }

    // Bounded simulated-binary crossover.
    void sbx(const Gene &g, double &x1, double &x2) {
      if (std::abs(x1 - x2) < 1e-14 || g.hi <= g.lo)
        return;
      const double eta = opts_.eta_crossover;
      const double y1 = std::min(x1, x2), y2 = std::max(x1, x2);
      const double r = uniform();
      auto betaq = [&](double beta) {
        const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
        return r <= 1.0 / alpha
                   ? std::pow(r * alpha, 1.0 / (eta + 1.0))
                   : std::pow(1.0 / (2.0 - r * alpha), 1.0 / (eta + 1.0));
      };
      const double span = y2 - y1;
      double c1 = 0.5 * ((y1 + y2) - betaq(1.0 + 2.0 * (y1 - g.lo) / span)
                                         * span);
      double c2 = 0.5 * ((y1 + y2) + betaq(1.0 + 2.0 * (g.hi - y2) / span)
                                         * span);
      c1 = std::clamp(c1, g.lo, g.hi);
      c2 = std::clamp(c2, g.lo, g.hi);
      if (uniform() < 0.5)
        std::swap(c1, c2);
      x1 = c1;
      x2 = c2;
    }

    void polynomial(const Gene &g, double &x) {
      const double range = g.hi - g.lo;
      if (range <= 0)
        return;
      const double eta = opts_.eta_mutation;
      const double d1 = (x - g.lo) / range, d2 = (g.hi - x) / range;
      const double r = uniform();
      const double pw = 1.0 / (eta + 1.0);
      double dq;
      if (r < 0.5) {
        double v = 2.0 * r + (1.0 - 2.0 * r) * std::pow(1.0 - d1, eta + 1.0);
        dq = std::pow(v, pw) - 1.0;
      } else {
        double v = 2.0 * (1.0 - r)
                   + 2.0 * (r - 0.5) * std::pow(1.0 - d2, eta + 1.0);
        dq = 1.0 - std::pow(v, pw);
      }
      x = std::clamp(x + dq * range, g.lo, g.hi);
    }

    const std::vector<Gene> &genes_;
    const NsgaOptions &opts_;
    std::mt19937_64 rng_;
    double mutation_rate_;
  };

  std::vector<MooIndividual> evaluate_all(std::vector<Genome> genomes,
                                          const MooEvaluator &evaluator,
                                          const NsgaOptions &opts,
                                          int generation,
                                          std::size_t &arity) {
    std::vector<MooIndividual> out(genomes.size());
    std::vector<std::size_t> failed;
    for (std::size_t i = 0; i < genomes.size(); ++i) {
      out[i].genome = std::move(genomes[i]);
      const std::uint64_t seed =
          make_rng(opts.seed, { static_cast<std::uint64_t>(generation), i,
                                1 })();
      try {
        Objectives f = evaluator(out[i].genome, seed);
        if (arity == 0)
          arity = f.size();
        if (f.size() != arity || f.empty())
          throw ShapeError("evaluator returned a different objective count");
        for (double &v: f) {
          if (std::isnan(v))
            v = kInf;
        }
        out[i].objectives = std::move(f);
      } catch (const std::exception &e) {
        spdlog::warn("evaluation failed in generation {}: {}", generation,
                     e.what());
        failed.push_back(i);
      }
    }
    if (arity == 0)
      arity = 1;
    for (std::size_t i: failed)
      out[i].objectives.assign(arity, kInf);
    return out;
  }

  std::vector<Objectives> objectives_of(const std::vector<MooIndividual> &p) {
    std::vector<Objectives> out;
    out.reserve(p.size());
    for (const MooIndividual &m: p)
      out.push_back(m.objectives);
    return out;
  }

  void assign_rank_crowding(std::vector<MooIndividual> &pop) {
    const std::vector<Objectives> objs = objectives_of(pop);
    const auto fronts = non_dominated_sort(objs);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
      const std::vector<double> cd = crowding_distance(objs, fronts[f]);
      for (std::size_t j = 0; j < fronts[f].size(); ++j) {
        pop[fronts[f][j]].rank = static_cast<int>(f) + 1;
        pop[fronts[f][j]].crowding = cd[j];
      }
    }
  }

  std::vector<MooIndividual> select_survivors(std::vector<MooIndividual> all,
                                              std::size_t n) {
    const std::vector<Objectives> objs = objectives_of(all);
    std::vector<MooIndividual> next;
    for (const std::vector<int> &front: non_dominated_sort(objs)) {
      if (next.size() + front.size() <= n) {
        for (int i: front)
          next.push_back(all[i]);
        continue;
      }
      const std::vector<double> cd = crowding_distance(objs, front);
      std::vector<std::size_t> order(front.size());
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) {
                         return cd[a] > cd[b];
                       });
      for (std::size_t j = 0; next.size() < n; ++j)
        next.push_back(all[front[order[j]]]);
      break;
    }
    assign_rank_crowding(next);
    return next;
  }

  std::vector<MooIndividual> first_front(const std::vector<MooIndividual> &p) {
    std::vector<MooIndividual> out;
    for (const MooIndividual &m: p) {
      if (m.rank == 1)
        out.push_back(m);
    }
    return out;
  }

  Objectives derive_reference(const std::vector<MooIndividual> &pop,
                              std::size_t arity) {
    Objectives lo(arity, kInf), hi(arity, -kInf);
    for (const MooIndividual &m: pop) {
      for (std::size_t k = 0; k < arity; ++k) {
        if (std::isfinite(m.objectives[k])) {
          lo[k] = std::min(lo[k], m.objectives[k]);
          hi[k] = std::max(hi[k], m.objectives[k]);
        }
      }
    }
    Objectives ref(arity);
    for (std::size_t k = 0; k < arity; ++k)
      ref[k] = std::isfinite(hi[k]) ? hi[k] + 0.1 * (hi[k] - lo[k]) + 1e-9
                                    : 1.0;
    return ref;
  }

  GenerationStats stats_of(int generation,
                           const std::vector<MooIndividual> &front,
                           const Objectives &ref) {
    GenerationStats s { generation, kInf, static_cast<int>(front.size()), 0 };
    for (const MooIndividual &m: front)
      s.best_f1 = std::min(s.best_f1, m.objectives[0]);
    s.hypervolume = hypervolume(objectives_of(front), ref);
    return s;
  }
}  // namespace

MooResult evolve(const std::vector<Gene> &genes, const MooEvaluator &evaluator,
                 const NsgaOptions &opts) {
  validate_genes(genes);
  if (opts.population < 2 || opts.generations < 0)
    throw ValidationError("population must be at least 2");

  const std::size_t n = static_cast<std::size_t>(opts.population);
  Variation var(genes, opts);
  std::size_t arity = opts.reference.size();

  std::vector<Genome> initial;
  for (std::size_t i = 0; i < n; ++i)
    initial.push_back(var.random_genome());
  std::vector<MooIndividual> pop = evaluate_all(std::move(initial), evaluator,
                                                opts, 0, arity);
  assign_rank_crowding(pop);

  MooResult result;
  result.reference = opts.reference.empty() ? derive_reference(pop, arity)
                                            : opts.reference;
  result.history.push_back(stats_of(0, first_front(pop), result.reference));

  for (int gen = 1; gen <= opts.generations; ++gen) {
    std::vector<Genome> children;
    while (children.size() < n) {
      Genome c1 = pop[var.tournament(pop)].genome;
      Genome c2 = pop[var.tournament(pop)].genome;
      var.crossover(c1, c2);
      var.mutate(c1);
      var.mutate(c2);
      children.push_back(std::move(c1));
      if (children.size() < n)
        children.push_back(std::move(c2));
    }
    std::vector<MooIndividual> offspring = evaluate_all(
        std::move(children), evaluator, opts, gen, arity);

    std::vector<MooIndividual> all = std::move(pop);
    all.insert(all.end(), std::make_move_iterator(offspring.begin()),
               std::make_move_iterator(offspring.end()));
    pop = select_survivors(std::move(all), n);
    result.history.push_back(stats_of(gen, first_front(pop),
                                      result.reference));
  }

  result.front = first_front(pop);
  result.population = std::move(pop);
  return result;
}

MooIndividual select_best(const std::vector<MooIndividual> &front) {
  if (front.empty())
    throw EmptyFrontError("cannot select from an empty front");
  std::vector<MooIndividual> sorted = front;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MooIndividual &a, const MooIndividual &b) {
                     if (a.objectives != b.objectives)
                       return a.objectives < b.objectives;
                     return a.genome < b.genome;
                   });
  return sorted.front();
}

void write_history(const std::filesystem::path &path,
                   const std::vector<GenerationStats> &history) {
  CsvTable t;
  t.header = { "generation", "best_mae", "front_size", "hypervolume" };
  for (const GenerationStats &s: history)
    t.rows.push_back({ std::to_string(s.generation), format_double(s.best_f1),
                       std::to_string(s.front_size),
                       format_double(s.hypervolume) });
  write_csv(path, t);
}

}  // namespace fuelgen
