//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_CHEM_PROPERTIES_H_
#define FUELGEN_CHEM_PROPERTIES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuelgen/chem/mol_graph.h"

namespace fuelgen {

struct ValenceViolation {
  int atom;
  int bond_order_sum;
  int allowed;

  bool operator==(const ValenceViolation &) const = default;
};

struct ValenceReport {
  std::vector<ValenceViolation> violations;

  bool valid() const { return violations.empty(); }
};

ValenceReport check_valence(const MolGraph &g);

/// Cycle rank |bonds| - |atoms| + 1 of a connected graph.
int ring_count(const MolGraph &g);

enum class FunctionalGroup : std::uint8_t {
  kAlcohol,
  kEther,
  kAldehyde,
  kKetone,
  kCarboxylOrEster,
  kAlkene,
  kAlkyne,
  kRing,
  kSaturatedHydrocarbon,
};

inline constexpr int kNumFunctionalGroups = 9;

/// Bit set over FunctionalGroup.
class FunctionalGroups {
public:
  void insert(FunctionalGroup g) { bits_ |= bit(g); }
  bool contains(FunctionalGroup g) const { return (bits_ & bit(g)) != 0; }
  bool empty() const { return bits_ == 0; }
  int size() const;

  std::vector<FunctionalGroup> to_vector() const;
  // Tags joined by ';' in enum order; empty string when no tag applies.
  std::string to_string() const;

  bool operator==(const FunctionalGroups &) const = default;

private:
  static constexpr std::uint16_t bit(FunctionalGroup g) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(g));
  }

  std::uint16_t bits_ = 0;
};

std::string_view functional_group_name(FunctionalGroup g);

/// Rule-based tagging:
///   carboxyl/ester  C(=O) bearing a single-bonded O
///   aldehyde        other C=O carbon with at least one H
///   ketone          other C=O carbon without H
///   alcohol         O-H on a carbon that is not a carboxyl carbon
///   ether           C-O-C where neither carbon is a carboxyl carbon
///   alkene, alkyne  any C=C, C#C
///   ring            cycle rank > 0
///   saturated-hydrocarbon  no oxygen and no multiple bonds
FunctionalGroups classify_functional_groups(const MolGraph &g);

/// Highest-priority tag used as a stratification key, or "none".
std::string_view primary_functional_group(const FunctionalGroups &groups);

/// Number of atoms on the longest simple path (brute force; small graphs).
int longest_chain(const MolGraph &g);

/// Atoms with three or more heavy neighbors.
int branch_points(const MolGraph &g);

int count_bonds_of_order(const MolGraph &g, int order);

}  // namespace fuelgen

#endif  // FUELGEN_CHEM_PROPERTIES_H_
