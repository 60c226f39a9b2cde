//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_MOO_PARETO_H_
#define FUELGEN_MOO_PARETO_H_

#include <span>
#include <vector>

namespace fuelgen {

using Objectives = std::vector<double>;

/// Minimization: a <= b componentwise with at least one strict inequality.
bool dominates(std::span<const double> a, std::span<const double> b);

/// Fast non-dominated sort. Each front lists population indices in
/// ascending order; front 0 is the non-dominated set.
std::vector<std::vector<int>>
non_dominated_sort(const std::vector<Objectives> &population);

/// Crowding distance of each member of `front`, in front order. Boundary
/// members of every objective get infinity; objectives with zero or
/// non-finite range contribute nothing.
std::vector<double> crowding_distance(const std::vector<Objectives> &population,
                                      std::span<const int> front);

}  // namespace fuelgen

#endif  // FUELGEN_MOO_PARETO_H_
