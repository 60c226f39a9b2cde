//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_CHEM_CURATE_H_
#define FUELGEN_CHEM_CURATE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuelgen/chem/mol_graph.h"

namespace fuelgen {

struct CurationRules {
  std::vector<Element> allowed_elements { Element::kCarbon, Element::kOxygen };
  int max_heavy_atoms = 10;
  int max_rings = 2;
  int max_smiles_length = 23;

  // Throws ValidationError unless every bound is strictly positive and at
  // least one element is allowed.
  void validate() const;
};

enum class RejectReason {
  kSyntax,
  kDisallowedElement,
  kValence,
  kTooManyHeavyAtoms,
  kTooManyRings,
  kTooLong,
  kDuplicate,
};

std::string_view reject_reason_name(RejectReason reason);

struct CurationReject {
  std::string smiles;
  RejectReason reason;
};

struct CurationResult {
  // Sorted, duplicate-free canonical SMILES.
  std::vector<std::string> kept;
  // In input order.
  std::vector<CurationReject> rejects;
};

/// Rule check for an already parsed, connected graph whose canonical SMILES
/// is `canonical`. Returns the first failing rule, if any.
std::optional<RejectReason> check_rules(const MolGraph &g,
                                        std::string_view canonical,
                                        const CurationRules &rules);

/// Filters a SMILES stream down to canonical, rule-conforming, unique
/// molecules. Per-record failures are collected in `rejects`, never thrown.
CurationResult curate(std::span<const std::string> corpus,
                      const CurationRules &rules);

}  // namespace fuelgen

#endif  // FUELGEN_CHEM_CURATE_H_
