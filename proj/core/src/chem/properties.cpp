//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/chem/properties.h"

#include <algorithm>
#include <array>

namespace fuelgen {

ValenceReport check_valence(const MolGraph &g) {
  ValenceReport report;
  for (int i = 0; i < g.num_atoms(); ++i) {
    int sum = g.bond_order_sum(i);
    int allowed = max_valence(g.element(i));
    if (sum > allowed)
      report.violations.push_back({ i, sum, allowed });
  }
  return report;
}

int ring_count(const MolGraph &g) {
  if (g.num_atoms() == 0)
    return 0;
  return g.num_bonds() - g.num_atoms() + 1;
}

int FunctionalGroups::size() const {
  return __builtin_popcount(bits_);
}

std::vector<FunctionalGroup> FunctionalGroups::to_vector() const {
  std::vector<FunctionalGroup> out;
  for (int i = 0; i < kNumFunctionalGroups; ++i) {
    auto g = static_cast<FunctionalGroup>(i);
    if (contains(g))
      out.push_back(g);
  }
  return out;
}

std::string FunctionalGroups::to_string() const {
  std::string out;
  for (FunctionalGroup g: to_vector()) {
    if (!out.empty())
      out += ';';
    out += functional_group_name(g);
  }
  return out;
}

std::string_view functional_group_name(FunctionalGroup g) {
  switch (g) {
  case FunctionalGroup::kAlcohol:
    return "alcohol";
  case FunctionalGroup::kEther:
    return "ether";
  case FunctionalGroup::kAldehyde:
    return "aldehyde";
  case FunctionalGroup::kKetone:
    return "ketone";
  case FunctionalGroup::kCarboxylOrEster:
    return "carboxyl/ester";
  case FunctionalGroup::kAlkene:
    return "alkene";
  case FunctionalGroup::kAlkyne:
    return "alkyne";
  case FunctionalGroup::kRing:
    return "ring";
  case FunctionalGroup::kSaturatedHydrocarbon:
    return "saturated-hydrocarbon";
  }
  return "unknown";
}

namespace {
  bool has_carbonyl(const MolGraph &g, int carbon) {
    for (const Neighbor &nei: g.neighbors(carbon)) {
      if (nei.order == 2 && g.element(nei.atom) == Element::kOxygen)
        return true;
    }
    return false;
  }

  bool has_single_oxygen(const MolGraph &g, int carbon) {
    for (const Neighbor &nei: g.neighbors(carbon)) {
      if (nei.order == 1 && g.element(nei.atom) == Element::kOxygen)
        return true;
    }
    return false;
  }

  bool is_carboxyl_carbon(const MolGraph &g, int atom) {
    return g.element(atom) == Element::kCarbon && has_carbonyl(g, atom)
           && has_single_oxygen(g, atom);
  }
}  // namespace

FunctionalGroups classify_functional_groups(const MolGraph &g) {
  FunctionalGroups groups;
  bool any_oxygen = false;
  bool any_multiple = false;

  for (int i = 0; i < g.num_atoms(); ++i) {
    if (g.element(i) == Element::kCarbon) {
      if (!has_carbonyl(g, i))
        continue;
      if (has_single_oxygen(g, i))
        groups.insert(FunctionalGroup::kCarboxylOrEster);
      else if (g.implicit_hydrogens(i) >= 1)
        groups.insert(FunctionalGroup::kAldehyde);
      else
        groups.insert(FunctionalGroup::kKetone);
      continue;
    }

    any_oxygen = true;
    auto nei = g.neighbors(i);
    bool all_single_carbon = std::all_of(
        nei.begin(), nei.end(), [&](const Neighbor &n) {
          return n.order == 1 && g.element(n.atom) == Element::kCarbon
                 && !is_carboxyl_carbon(g, n.atom);
        });
    if (!all_single_carbon)
      continue;
    if (nei.size() == 1)
      groups.insert(FunctionalGroup::kAlcohol);
    else if (nei.size() == 2)
      groups.insert(FunctionalGroup::kEther);
  }

  for (const Bond &b: g.bonds()) {
    if (b.order > 1)
      any_multiple = true;
    if (g.element(b.src) != Element::kCarbon
        || g.element(b.dst) != Element::kCarbon)
      continue;
    if (b.order == 2)
      groups.insert(FunctionalGroup::kAlkene);
    else if (b.order == 3)
      groups.insert(FunctionalGroup::kAlkyne);
  }

  if (ring_count(g) > 0)
    groups.insert(FunctionalGroup::kRing);
  if (!any_oxygen && !any_multiple && g.num_atoms() > 0)
    groups.insert(FunctionalGroup::kSaturatedHydrocarbon);
  return groups;
}

std::string_view primary_functional_group(const FunctionalGroups &groups) {
  static constexpr std::array kPriority {
    FunctionalGroup::kCarboxylOrEster, FunctionalGroup::kAldehyde,
    FunctionalGroup::kKetone,          FunctionalGroup::kAlcohol,
    FunctionalGroup::kEther,           FunctionalGroup::kAlkyne,
    FunctionalGroup::kAlkene,          FunctionalGroup::kRing,
    FunctionalGroup::kSaturatedHydrocarbon,
  };
  for (FunctionalGroup g: kPriority) {
    if (groups.contains(g))
      return functional_group_name(g);
  }
  return "none";
}

namespace {
  int longest_from(const MolGraph &g, int atom, std::vector<char> &on_path) {
    on_path[atom] = 1;
    int best = 0;
    for (const Neighbor &nei: g.neighbors(atom)) {
      if (!on_path[nei.atom])
        best = std::max(best, longest_from(g, nei.atom, on_path));
    }
    on_path[atom] = 0;
    return best + 1;
  }
}  // namespace

int longest_chain(const MolGraph &g) {
  std::vector<char> on_path(g.num_atoms(), 0);
  int best = 0;
  for (int i = 0; i < g.num_atoms(); ++i)
    best = std::max(best, longest_from(g, i, on_path));
  return best;
}

int branch_points(const MolGraph &g) {
  int n = 0;
  for (int i = 0; i < g.num_atoms(); ++i)
    n += g.degree(i) >= 3 ? 1 : 0;
  return n;
}

int count_bonds_of_order(const MolGraph &g, int order) {
  return static_cast<int>(
      std::count_if(g.bonds().begin(), g.bonds().end(),
                    [order](const Bond &b) { return b.order == order; }));
}

}  // namespace fuelgen
