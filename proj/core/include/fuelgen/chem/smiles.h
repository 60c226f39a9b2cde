//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_CHEM_SMILES_H_
#define FUELGEN_CHEM_SMILES_H_

#include <random>
#include <span>
#include <string>
#include <string_view>

#include "fuelgen/chem/mol_graph.h"

namespace fuelgen {

/// Parses the CHO SMILES subset:
///
///   smiles        := chain
///   chain         := branched_atom (bond? branched_atom)*
///   branched_atom := atom ring_bond* branch*
///   ring_bond     := bond? digit
///   branch        := '(' bond? chain ')'
///   atom := 'C' | 'O'     bond := '=' | '#'     digit := '1'..'9'
///
/// A ring digit opens a closure on first use and closes it on the next;
/// digits may be reused once closed. Both ends may carry a bond symbol only
/// if they agree. Ring bonds that would duplicate an existing bond or bond
/// an atom to itself are rejected.
///
/// Throws SyntaxError for anything outside this grammar, including the empty
/// string and explicit hydrogens. Valence is not checked here.
MolGraph parse_smiles(std::string_view smiles);

/// Writes a SMILES string for a connected graph by depth-first traversal
/// from `start`, visiting neighbors in ascending `priority` order. The last
/// child of each atom continues the main chain; earlier children become
/// branches. Ring-closure bond symbols are written on the opening digit and
/// each closure uses the lowest free digit.
std::string write_smiles(const MolGraph &g, int start,
                         std::span<const int> priority);

/// A random valid serialization: random start atom, random neighbor order.
std::string random_smiles(const MolGraph &g, std::mt19937_64 &rng);

}  // namespace fuelgen

#endif  // FUELGEN_CHEM_SMILES_H_
