//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/pipeline/split.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

namespace {
  enum Part { kTrain = 0, kVal = 1, kTest = 2 };

  // Proportional allocation of `quota` val and test slots over strata.
  std::vector<Part> allocate(const std::map<std::string, std::vector<int>>
                                 &strata,
                             int pool, std::array<int, 2> quota,
                             std::mt19937_64 &rng, int total,
                             std::vector<std::string> &warnings) {
    std::vector<Part> part(total, kTrain);
    std::vector<std::string> keys;
    std::vector<std::vector<int>> members;
    for (const auto &[k, m]: strata) {
      keys.push_back(k);
      members.push_back(m);
      std::shuffle(members.back().begin(), members.back().end(), rng);
    }
    const int ns = static_cast<int>(keys.size());

    std::vector<std::array<int, 2>> take(ns, { 0, 0 });
    std::vector<int> room(ns);
    for (int s = 0; s < ns; ++s) {
      const int n = static_cast<int>(members[s].size());
      for (int p = 0; p < 2; ++p)
        take[s][p] = pool > 0 ? static_cast<int>(
                                    static_cast<long long>(quota[p]) * n / pool)
                              : 0;
      room[s] = n - take[s][0] - take[s][1];
    }

    std::vector<int> order(ns);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    int cursor = 0;
    for (int p = 0; p < 2; ++p) {
      int rest = quota[p];
      for (int s = 0; s < ns; ++s)
        rest -= take[s][p];
      while (rest > 0) {
        int tried = 0;
        while (tried < ns && room[order[cursor % ns]] == 0) {
          ++cursor;
          ++tried;
        }
        if (tried == ns) {
          warnings.push_back("no stratum can supply the remaining "
                             + std::to_string(rest) + " slots");
          break;
        }
        const int s = order[cursor % ns];
        ++take[s][p];
        --room[s];
        --rest;
        ++cursor;
      }
    }

    for (int s = 0; s < ns; ++s) {
      int i = 0;
      for (; i < take[s][0]; ++i)
        part[members[s][i]] = kVal;
      for (; i < take[s][0] + take[s][1]; ++i)
        part[members[s][i]] = kTest;
    }
    return part;
  }

  MolGraph parse_member(const std::string &smiles) {
    try {
      return parse_smiles(smiles);
    } catch (const SyntaxError &e) {
      throw ValidationError("split input " + smiles
                            + " does not parse: " + e.what());
    }
  }
}  // namespace

SplitResult split_dataset(std::span<const std::string> corpus,
                          std::span<const RonRecord> ron,
                          const SplitConfig &cfg, std::uint64_t seed) {
  cfg.validate();
  if (!ron.empty() && cfg.ron_val + cfg.ron_test >= static_cast<int>(ron.size()))
    throw ValidationError("RON holdouts (" + std::to_string(cfg.ron_val) + "+"
                          + std::to_string(cfg.ron_test)
                          + ") must be fewer than the "
                          + std::to_string(ron.size()) + " RON molecules");

  SplitResult out;
  std::mt19937_64 rng = make_rng(seed, { 0x5b1 });

  // RON table, stratified by heavy-atom count.
  std::map<std::string, std::vector<int>> ron_strata;
  for (int i = 0; i < static_cast<int>(ron.size()); ++i) {
    const int heavy = parse_member(ron[i].smiles).num_atoms();
    char key[16];
    std::snprintf(key, sizeof key, "%04d", heavy);
    ron_strata[key].push_back(i);
  }
  const std::vector<Part> ron_part =
      allocate(ron_strata, static_cast<int>(ron.size()),
               { cfg.ron_val, cfg.ron_test }, rng,
               static_cast<int>(ron.size()), out.warnings);
  std::unordered_map<std::string, Part> pinned;
  for (std::size_t i = 0; i < ron.size(); ++i) {
    switch (ron_part[i]) {
    case kTrain:
      out.ron_train.push_back(ron[i]);
      break;
    case kVal:
      out.ron_val.push_back(ron[i]);
      pinned[ron[i].smiles] = kVal;
      break;
    case kTest:
      out.ron_test.push_back(ron[i]);
      pinned[ron[i].smiles] = kTest;
      break;
    }
  }

  // Corpus, stratified by heavy atoms and primary functional group.
  const int n = static_cast<int>(corpus.size());
  int n_val = static_cast<int>(std::llround(n * cfg.val));
  int n_test = static_cast<int>(std::llround(n * cfg.test));
  n_test = std::min(n_test, n - n_val);

  std::map<std::string, std::vector<int>> strata;
  std::vector<Part> part(n, kTrain);
  std::array<int, 2> pinned_count { 0, 0 };
  int pool = 0;
  for (int i = 0; i < n; ++i) {
    auto it = pinned.find(corpus[i]);
    if (it != pinned.end()) {
      part[i] = it->second;
      ++pinned_count[it->second - 1];
      continue;
    }
    MolGraph g = parse_member(corpus[i]);
    char key[16];
    std::snprintf(key, sizeof key, "%04d/", g.num_atoms());
    strata[key + std::string(primary_functional_group(
                                 classify_functional_groups(g)))]
        .push_back(i);
    ++pool;
  }
  std::array<int, 2> quota { std::max(0, n_val - pinned_count[0]),
                             std::max(0, n_test - pinned_count[1]) };
  for (int p = 0; p < 2; ++p) {
    if (pinned_count[p] > (p == 0 ? n_val : n_test))
      out.warnings.push_back("held-out RON molecules exceed the corpus "
                             + std::string(p == 0 ? "validation" : "test")
                             + " quota");
  }
  const std::vector<Part> pool_part = allocate(strata, pool, quota, rng, n,
                                               out.warnings);
  for (int i = 0; i < n; ++i) {
    if (part[i] == kTrain)
      part[i] = pool_part[i];
  }

  std::unordered_set<std::string> in_corpus(corpus.begin(), corpus.end());
  for (int i = 0; i < n; ++i) {
    (part[i] == kTrain ? out.corpus_train
     : part[i] == kVal ? out.corpus_val
                       : out.corpus_test)
        .push_back(corpus[i]);
  }
  for (const RonRecord &r: out.ron_train) {
    if (!in_corpus.contains(r.smiles)) {
      out.corpus_train.push_back(r.smiles);
      ++out.injected;
    }
  }

  for (auto *v: { &out.corpus_train, &out.corpus_val, &out.corpus_test })
    std::sort(v->begin(), v->end());
  for (auto *v: { &out.ron_train, &out.ron_val, &out.ron_test })
    std::sort(v->begin(), v->end(), [](const RonRecord &a, const RonRecord &b) {
      return a.smiles < b.smiles;
    });
  for (const std::string &w: out.warnings)
    spdlog::warn("split: {}", w);
  return out;
}

}  // namespace fuelgen
