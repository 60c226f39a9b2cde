//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/moo/pareto.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "fuelgen/util/error.h"

namespace fuelgen {

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw ShapeError("objective vectors differ in length");
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i])
      return false;
    strict = strict || a[i] < b[i];
  }
  return strict;
}

std::vector<std::vector<int>>
non_dominated_sort(const std::vector<Objectives> &population) {
  const int n = static_cast<int>(population.size());
  std::vector<std::vector<int>> dominated(n);
  std::vector<int> count(n, 0);
  std::vector<std::vector<int>> fronts;
  std::vector<int> current;

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      if (p == q)
        continue;
      if (dominates(population[p], population[q]))
        dominated[p].push_back(q);
      else if (dominates(population[q], population[p]))
        ++count[p];
    }
    if (count[p] == 0)
      current.push_back(p);
  }

  while (!current.empty()) {
    std::vector<int> next;
    for (int p: current) {
      for (int q: dominated[p]) {
        if (--count[q] == 0)
          next.push_back(q);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(const std::vector<Objectives> &population,
                                      std::span<const int> front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n == 0)
    return dist;
  constexpr double inf = std::numeric_limits<double>::infinity();
  const std::size_t m = population[front[0]].size();

  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < m; ++k) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return population[front[a]][k]
                              < population[front[b]][k];
                     });
    dist[order.front()] = inf;
    dist[order.back()] = inf;
    const double range = population[front[order.back()]][k]
                         - population[front[order.front()]][k];
    if (!(range > 0) || !std::isfinite(range))
      continue;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double gap = population[front[order[i + 1]]][k]
                         - population[front[order[i - 1]]][k];
      dist[order[i]] += gap / range;
    }
  }
  return dist;
}

}  // namespace fuelgen
