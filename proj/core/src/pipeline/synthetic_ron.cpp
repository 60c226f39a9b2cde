//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/pipeline/synthetic_ron.h"

#include <algorithm>

#include "fuelgen/chem/properties.h"

namespace fuelgen {

double synthetic_ron(const MolGraph &g, const SyntheticRonOracle &oracle) {
  const double v = oracle.base
                   + oracle.per_branch_point * branch_points(g)
                   + oracle.per_oxygen * g.count(Element::kOxygen)
                   + oracle.per_double_bond * count_bonds_of_order(g, 2)
                   + oracle.per_chain_atom * longest_chain(g);
  return std::clamp(v, 0.0, 150.0);
}

}  // namespace fuelgen
