//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "fuelgen/chem/canonical.h"
#include "fuelgen/chem/enumerate.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/covae/network.h"
#include "fuelgen/covae/train.h"
#include "fuelgen/encoding/vocab.h"
#include "fuelgen/moo/pareto.h"
#include "fuelgen/regress/gbt.h"
#include "fuelgen/util/random.h"

using namespace fuelgen;

namespace {

const std::vector<std::string> &corpus() {
  static const std::vector<std::string> all = enumerate_molecules(6);
  return all;
}

void BM_ParseSmiles(benchmark::State &state) {
  const auto &smiles = corpus();
  std::size_t i = 0;
  for (auto _: state) {
    benchmark::DoNotOptimize(parse_smiles(smiles[i]));
    i = (i + 1) % smiles.size();
  }
}
BENCHMARK(BM_ParseSmiles);

void BM_Canonicalize(benchmark::State &state) {
  std::vector<MolGraph> graphs;
  for (const std::string &s: corpus())
    graphs.push_back(parse_smiles(s));
  std::size_t i = 0;
  for (auto _: state) {
    benchmark::DoNotOptimize(canonicalize(graphs[i]));
    i = (i + 1) % graphs.size();
  }
}
BENCHMARK(BM_Canonicalize);

void BM_CoVaeGradient(benchmark::State &state) {
  CoVaeConfig cfg = CoVaeConfig::desk_scale();
  const CoVaeModel model = make_model(cfg);
  Batch batch;
  for (int i = 0; i < state.range(0); ++i) {
    batch.tokens.push_back(encode_tokens(corpus()[i * 7], model.vocab()));
    batch.ron.push_back(i % 2 ? std::optional<double>(90.0) : std::nullopt);
  }
  auto rng = make_rng(1);
  std::normal_distribution<double> n01;
  Eigen::MatrixXd noise(model.latent_dim(), batch.size());
  for (Eigen::Index k = 0; k < noise.size(); ++k)
    noise(k) = n01(rng);
  for (auto _: state)
    benchmark::DoNotOptimize(batch_gradient(model, batch, noise, 0.01));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CoVaeGradient)->Arg(2)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FitGbt(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  auto rng = make_rng(2);
  std::normal_distribution<double> n01;
  Dataset d { Eigen::MatrixXd(n, 16), Eigen::VectorXd(n) };
  for (Eigen::Index k = 0; k < d.x.size(); ++k)
    d.x(k) = n01(rng);
  d.y = d.x.col(0) * 2 - d.x.col(3);
  for (auto _: state)
    benchmark::DoNotOptimize(fit_gbt(d, {}));
}
BENCHMARK(BM_FitGbt)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_NonDominatedSort(benchmark::State &state) {
  auto rng = make_rng(3);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<Objectives> pop(state.range(0));
  for (Objectives &o: pop)
    o = { u(rng), u(rng), u(rng) };
  for (auto _: state)
    benchmark::DoNotOptimize(non_dominated_sort(pop));
}
BENCHMARK(BM_NonDominatedSort)->Arg(100)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
