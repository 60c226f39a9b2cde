//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_PIPELINE_SYNTHETIC_RON_H_
#define FUELGEN_PIPELINE_SYNTHETIC_RON_H_

#include "fuelgen/chem/mol_graph.h"

namespace fuelgen {

/// Deterministic stand-in label for end-to-end runs. Not a chemistry model.
struct SyntheticRonOracle {
  double base = 40;
  double per_branch_point = 12;
  double per_oxygen = 15;
  double per_double_bond = 8;
  double per_chain_atom = -3;
};

/// base + coefficients . (branch points, oxygens, double bonds, longest
/// chain), clipped to [0, 150].
double synthetic_ron(const MolGraph &g, const SyntheticRonOracle &oracle = {});

}  // namespace fuelgen

#endif  // FUELGEN_PIPELINE_SYNTHETIC_RON_H_
