//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_MOO_HYPERVOLUME_H_
#define FUELGEN_MOO_HYPERVOLUME_H_

#include <span>
#include <vector>

#include "fuelgen/moo/pareto.h"

namespace fuelgen {

/// Lebesgue measure of the region dominated by `points` and bounded by
/// `ref` (minimization), by recursive slicing along the last objective.
/// Points that do not strictly dominate ref in every objective are ignored.
double hypervolume(const std::vector<Objectives> &points,
                   std::span<const double> ref);

}  // namespace fuelgen

#endif  // FUELGEN_MOO_HYPERVOLUME_H_
