//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_CHEM_MOL_GRAPH_H_
#define FUELGEN_CHEM_MOL_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

namespace fuelgen {

enum class Element : std::uint8_t {
  kCarbon,
  kOxygen,
};

constexpr char element_symbol(Element e) {
  return e == Element::kCarbon ? 'C' : 'O';
}

constexpr int max_valence(Element e) {
  return e == Element::kCarbon ? 4 : 2;
}

struct Bond {
  int src;
  int dst;
  int order;
};

struct Neighbor {
  int atom;
  int order;
  int bond;
};

/// Heavy-atom molecular graph over C and O. Hydrogens are implicit and
/// derived from the valence table on demand.
///
/// add_bond() rejects self-loops, out-of-range endpoints, duplicate atom
/// pairs and orders outside 1..3 by throwing std::invalid_argument, so a
/// MolGraph is always a simple graph. Connectivity is not enforced while
/// building; see is_connected().
class MolGraph {
public:
  int add_atom(Element e);
  int add_bond(int src, int dst, int order);

  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  int num_bonds() const { return static_cast<int>(bonds_.size()); }

  Element element(int atom) const { return atoms_[atom]; }
  const std::vector<Element> &atoms() const { return atoms_; }
  const std::vector<Bond> &bonds() const { return bonds_; }

  std::span<const Neighbor> neighbors(int atom) const { return adj_[atom]; }
  int degree(int atom) const { return static_cast<int>(adj_[atom].size()); }

  // 0 when the atoms are not bonded.
  int bond_order(int a, int b) const;
  int bond_order_sum(int atom) const;
  // Remaining valence filled by hydrogens; negative when over-valent.
  int implicit_hydrogens(int atom) const;

  int count(Element e) const;
  bool is_connected() const;

private:
  std::vector<Element> atoms_;
  std::vector<Bond> bonds_;
  std::vector<std::vector<Neighbor>> adj_;
};

/// Exact isomorphism test (element- and bond-order-preserving) by
/// backtracking. Intended for the small graphs handled here.
bool isomorphic(const MolGraph &a, const MolGraph &b);

}  // namespace fuelgen

#endif  // FUELGEN_CHEM_MOL_GRAPH_H_
