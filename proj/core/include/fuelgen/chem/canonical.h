//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_CHEM_CANONICAL_H_
#define FUELGEN_CHEM_CANONICAL_H_

#include <string>
#include <string_view>
#include <vector>

#include "fuelgen/chem/mol_graph.h"

namespace fuelgen {

/// Iterative neighborhood refinement of atom classes. Starting from
/// `ranks`, each round re-ranks atoms by (rank, sorted neighbor
/// (rank, bond order) list) until the partition stops splitting. The result
/// is a dense ranking 0..k-1 that is invariant under atom relabeling.
std::vector<int> refine_ranks(const MolGraph &g, std::vector<int> ranks);

/// Dense ranking by (element, degree, bond-order sum), carbon first.
std::vector<int> initial_ranks(const MolGraph &g);

/// Canonical SMILES of a connected graph.
///
/// Ranks are refined to an equitable partition; remaining ties are broken by
/// individualizing each member of the first tied class in turn and refining
/// again. Every discrete ranking reached this way yields one serialization
/// (start at rank 0, neighbors in rank order) and the shortest string, then
/// the lexicographically smallest, is returned. The set of explored
/// rankings depends only on the graph's structure, so isomorphic graphs
/// produce identical strings.
std::string canonicalize(const MolGraph &g);

/// parse_smiles followed by canonicalize. Throws SyntaxError.
std::string canonical_smiles(std::string_view smiles);

}  // namespace fuelgen

#endif  // FUELGEN_CHEM_CANONICAL_H_
