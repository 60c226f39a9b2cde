//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/chem/enumerate.h"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "fuelgen/chem/canonical.h"
#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/util/error.h"

namespace fuelgen {
namespace {
  struct Attachment {
    std::vector<int> atoms;
    std::vector<int> orders;
  };

  // All ways to bond a new atom of valence `valence` to a subset of
  // `n` existing atoms, adding at most `max_extra_rings` rings.
  std::vector<Attachment> attachments(int n, int valence,
                                      int max_extra_rings) {
    std::vector<Attachment> out;
    const int max_partners = std::min({ n, valence, max_extra_rings + 1 });
    std::vector<int> atoms;
    std::vector<int> orders;

    auto recurse = [&](auto &self, int next_atom, int used) -> void {
      if (!atoms.empty())
        out.push_back({ atoms, orders });
      if (static_cast<int>(atoms.size()) == max_partners)
        return;
      for (int a = next_atom; a < n; ++a) {
        for (int order = 1; order <= 3 && used + order <= valence; ++order) {
          atoms.push_back(a);
          orders.push_back(order);
          self(self, a + 1, used + order);
          atoms.pop_back();
          orders.pop_back();
        }
      }
    };
    recurse(recurse, 0, 0);
    return out;
  }
}  // namespace

std::vector<std::string> enumerate_molecules(int max_heavy,
                                             const CurationRules &rules) {
  if (max_heavy < 1)
    throw ValidationError("max_heavy must be at least 1");
  if (max_heavy > kMaxEnumeratedHeavyAtoms)
    throw CapacityError("enumeration is limited to "
                        + std::to_string(kMaxEnumeratedHeavyAtoms)
                        + " heavy atoms");
  rules.validate();

  std::vector<Element> elements;
  for (Element e: { Element::kCarbon, Element::kOxygen }) {
    if (std::find(rules.allowed_elements.begin(), rules.allowed_elements.end(),
                  e)
        != rules.allowed_elements.end())
      elements.push_back(e);
  }

  std::vector<std::string> result;
  // Graphs of the current size that satisfy valence and ring limits; length
  // and size limits are applied only to the output.
  std::vector<std::string> layer;
  for (Element e: elements)
    layer.emplace_back(1, element_symbol(e));

  for (int size = 1; size <= max_heavy; ++size) {
    for (const std::string &smiles: layer) {
      MolGraph g = parse_smiles(smiles);
      if (!check_rules(g, smiles, rules))
        result.push_back(smiles);
    }
    if (size == max_heavy)
      break;

    std::unordered_set<std::string> next;
    for (const std::string &smiles: layer) {
      const MolGraph parent = parse_smiles(smiles);
      const int n = parent.num_atoms();
      const int spare_rings = rules.max_rings - ring_count(parent);
      std::vector<int> free(n);
      for (int i = 0; i < n; ++i)
        free[i] = parent.implicit_hydrogens(i);

      for (Element e: elements) {
        for (const Attachment &att:
             attachments(n, max_valence(e), spare_rings)) {
          bool fits = true;
          for (std::size_t k = 0; k < att.atoms.size() && fits; ++k)
            fits = att.orders[k] <= free[att.atoms[k]];
          if (!fits)
            continue;

          MolGraph child = parent;
          int atom = child.add_atom(e);
          for (std::size_t k = 0; k < att.atoms.size(); ++k)
            child.add_bond(att.atoms[k], atom, att.orders[k]);
          next.insert(canonicalize(child));
        }
      }
    }
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end());
  }

  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace fuelgen
