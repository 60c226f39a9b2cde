//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/chem/mol_graph.h"

#include <algorithm>
#include <stdexcept>

namespace fuelgen {

int MolGraph::add_atom(Element e) {
  atoms_.push_back(e);
  adj_.emplace_back();
  return num_atoms() - 1;
}

int MolGraph::add_bond(int src, int dst, int order) {
  if (src < 0 || dst < 0 || src >= num_atoms() || dst >= num_atoms())
    throw std::invalid_argument("bond endpoint out of range");
  if (src == dst)
    throw std::invalid_argument("self bond");
  if (order < 1 || order > 3)
    throw std::invalid_argument("bond order must be 1, 2 or 3");
  if (bond_order(src, dst) != 0)
    throw std::invalid_argument("duplicate bond");

  const int id = num_bonds();
  bonds_.push_back({ src, dst, order });
  adj_[src].push_back({ dst, order, id });
  adj_[dst].push_back({ src, order, id });
  return id;
}

int MolGraph::bond_order(int a, int b) const {
  for (const Neighbor &nei: adj_[a]) {
    if (nei.atom == b)
      return nei.order;
  }
  return 0;
}

int MolGraph::bond_order_sum(int atom) const {
  int sum = 0;
  for (const Neighbor &nei: adj_[atom])
    sum += nei.order;
  return sum;
}

int MolGraph::implicit_hydrogens(int atom) const {
  return max_valence(atoms_[atom]) - bond_order_sum(atom);
}

int MolGraph::count(Element e) const {
  return static_cast<int>(std::count(atoms_.begin(), atoms_.end(), e));
}

bool MolGraph::is_connected() const {
  if (atoms_.empty())
    return true;

  std::vector<char> seen(atoms_.size(), 0);
  std::vector<int> stack { 0 };
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (const Neighbor &nei: adj_[cur]) {
      if (!seen[nei.atom]) {
        seen[nei.atom] = 1;
        ++reached;
        stack.push_back(nei.atom);
      }
    }
  }
  return reached == num_atoms();
}

namespace {
  struct IsoState {
    const MolGraph &a;
    const MolGraph &b;
    std::vector<int> a_to_b;
    std::vector<char> b_used;

    bool compatible(int ia, int ib) const {
      if (a.element(ia) != b.element(ib) || a.degree(ia) != b.degree(ib)
          || a.bond_order_sum(ia) != b.bond_order_sum(ib))
        return false;
      for (const Neighbor &nei: a.neighbors(ia)) {
        int mapped = a_to_b[nei.atom];
        if (mapped >= 0 && b.bond_order(ib, mapped) != nei.order)
          return false;
      }
      return true;
    }

    bool extend(int ia) {
      if (ia == a.num_atoms())
        return true;
      for (int ib = 0; ib < b.num_atoms(); ++ib) {
        if (b_used[ib] || !compatible(ia, ib))
          continue;
        a_to_b[ia] = ib;
        b_used[ib] = 1;
        if (extend(ia + 1))
          return true;
        a_to_b[ia] = -1;
        b_used[ib] = 0;
      }
      return false;
    }
  };
}  // namespace

bool isomorphic(const MolGraph &a, const MolGraph &b) {
  if (a.num_atoms() != b.num_atoms() || a.num_bonds() != b.num_bonds())
    return false;
  if (a.count(Element::kOxygen) != b.count(Element::kOxygen))
    return false;

  // Edge-count parity plus mapped-neighbor consistency over all atoms
  // implies every edge of a maps onto an edge of b.
  IsoState state { a, b, std::vector<int>(a.num_atoms(), -1),
                   std::vector<char>(b.num_atoms(), 0) };
  return state.extend(0);
}

}  // namespace fuelgen
