//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/chem/canonical.h"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "fuelgen/chem/smiles.h"

namespace fuelgen {
namespace {
  int count_distinct(const std::vector<int> &ranks) {
    if (ranks.empty())
      return 0;
    return *std::max_element(ranks.begin(), ranks.end()) + 1;
  }

  template <class Key>
  std::vector<int> dense_rank(const std::vector<Key> &keys) {
    std::vector<int> order(keys.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return keys[a] < keys[b]; });

    std::vector<int> ranks(keys.size());
    int rank = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i > 0 && keys[order[i - 1]] < keys[order[i]])
        ++rank;
      ranks[order[i]] = rank;
    }
    return ranks;
  }

  bool better(const std::string &candidate, const std::string &best) {
    if (best.empty())
      return true;
    if (candidate.size() != best.size())
      return candidate.size() < best.size();
    return candidate < best;
  }

  class Canonicalizer {
  public:
    explicit Canonicalizer(const MolGraph &g): g_(g) { }

    std::string run() {
      search(initial_ranks(g_));
      return best_;
    }

  private:
    void search(std::vector<int> ranks) {
      ranks = refine_ranks(g_, std::move(ranks));
      const int n = g_.num_atoms();
      if (count_distinct(ranks) == n) {
        int start = static_cast<int>(
            std::min_element(ranks.begin(), ranks.end()) - ranks.begin());
        std::string smiles = write_smiles(g_, start, ranks);
        if (better(smiles, best_))
          best_ = std::move(smiles);
        return;
      }

      std::vector<int> size(n, 0);
      for (int r: ranks)
        ++size[r];
      int tied = 0;
      while (size[tied] < 2)
        ++tied;

      for (int pick = 0; pick < n; ++pick) {
        if (ranks[pick] != tied)
          continue;
        std::vector<int> next(n);
        for (int i = 0; i < n; ++i)
          next[i] = 2 * ranks[i] + (ranks[i] == tied && i != pick ? 1 : 0);
        search(std::move(next));
      }
    }

    const MolGraph &g_;
    std::string best_;
  };
}  // namespace

std::vector<int> initial_ranks(const MolGraph &g) {
  std::vector<std::tuple<int, int, int>> keys;
  keys.reserve(g.num_atoms());
  for (int i = 0; i < g.num_atoms(); ++i)
    keys.emplace_back(static_cast<int>(g.element(i)), g.degree(i),
                      g.bond_order_sum(i));
  return dense_rank(keys);
}

std::vector<int> refine_ranks(const MolGraph &g, std::vector<int> ranks) {
  using Key = std::pair<int, std::vector<std::pair<int, int>>>;

  ranks = dense_rank(ranks);
  int classes = count_distinct(ranks);
  std::vector<Key> keys(g.num_atoms());
  while (classes < g.num_atoms()) {
    for (int i = 0; i < g.num_atoms(); ++i) {
      keys[i].first = ranks[i];
      auto &sig = keys[i].second;
      sig.clear();
      for (const Neighbor &nei: g.neighbors(i))
        sig.emplace_back(ranks[nei.atom], nei.order);
      std::sort(sig.begin(), sig.end());
    }
    std::vector<int> next = dense_rank(keys);
    int next_classes = count_distinct(next);
    ranks = std::move(next);
    if (next_classes == classes)
      break;
    classes = next_classes;
  }
  return ranks;
}

std::string canonicalize(const MolGraph &g) {
  if (g.num_atoms() == 0)
    return {};
  return Canonicalizer(g).run();
}

std::string canonical_smiles(std::string_view smiles) {
  return canonicalize(parse_smiles(smiles));
}

}  // namespace fuelgen
