//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_CHEM_ENUMERATE_H_
#define FUELGEN_CHEM_ENUMERATE_H_

#include <string>
#include <vector>

#include "fuelgen/chem/curate.h"

namespace fuelgen {

inline constexpr int kMaxEnumeratedHeavyAtoms = 7;

/// Every valid CHO molecule with 1..max_heavy heavy atoms that also passes
/// `rules`, as sorted canonical SMILES.
///
/// Molecules are grown one atom at a time: a connected graph always has a
/// non-cut atom whose removal leaves a valid graph with no more rings, so
/// attaching a new atom to 1-3 existing atoms in every valence-feasible way
/// reaches every graph of the next size. Duplicates are removed by
/// canonical form.
///
/// Throws CapacityError when max_heavy > 7 and ValidationError when < 1.
std::vector<std::string> enumerate_molecules(int max_heavy,
                                             const CurationRules &rules = {});

}  // namespace fuelgen

#endif  // FUELGEN_CHEM_ENUMERATE_H_
