//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/chem/curate.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "fuelgen/chem/canonical.h"
#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

void CurationRules::validate() const {
  if (max_heavy_atoms <= 0 || max_rings <= 0 || max_smiles_length <= 0)
    throw ValidationError("curation bounds must be strictly positive");
  if (allowed_elements.empty())
    throw ValidationError("no allowed elements");
}

std::string_view reject_reason_name(RejectReason reason) {
  switch (reason) {
  case RejectReason::kSyntax:
    return "syntax_error";
  case RejectReason::kDisallowedElement:
    return "disallowed_element";
  case RejectReason::kValence:
    return "valence_violation";
  case RejectReason::kTooManyHeavyAtoms:
    return "too_many_heavy_atoms";
  case RejectReason::kTooManyRings:
    return "too_many_rings";
  case RejectReason::kTooLong:
    return "smiles_too_long";
  case RejectReason::kDuplicate:
    return "duplicate";
  }
  return "unknown";
}

std::optional<RejectReason> check_rules(const MolGraph &g,
                                        std::string_view canonical,
                                        const CurationRules &rules) {
  for (Element e: g.atoms()) {
    if (std::find(rules.allowed_elements.begin(), rules.allowed_elements.end(),
                  e)
        == rules.allowed_elements.end())
      return RejectReason::kDisallowedElement;
  }
  if (!check_valence(g).valid())
    return RejectReason::kValence;
  if (g.num_atoms() > rules.max_heavy_atoms)
    return RejectReason::kTooManyHeavyAtoms;
  if (ring_count(g) > rules.max_rings)
    return RejectReason::kTooManyRings;
  if (static_cast<int>(canonical.size()) > rules.max_smiles_length)
    return RejectReason::kTooLong;
  return std::nullopt;
}

namespace {
  // Letters other than the two supported atoms signal another element
  // (N, S, Cl, aromatic c, ...), which deserves its own reason code.
  bool mentions_other_element(std::string_view smiles) {
    return std::any_of(smiles.begin(), smiles.end(), [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) && c != 'C'
             && c != 'O';
    });
  }
}  // namespace

CurationResult curate(std::span<const std::string> corpus,
                      const CurationRules &rules) {
  rules.validate();

  CurationResult result;
  std::set<std::string> kept;
  for (const std::string &smiles: corpus) {
    MolGraph g;
    try {
      g = parse_smiles(smiles);
    } catch (const SyntaxError &) {
      result.rejects.push_back({ smiles, mentions_other_element(smiles)
                                             ? RejectReason::kDisallowedElement
                                             : RejectReason::kSyntax });
      continue;
    }

    if (!check_valence(g).valid()) {
      result.rejects.push_back({ smiles, RejectReason::kValence });
      continue;
    }
    std::string canonical = canonicalize(g);
    if (auto reason = check_rules(g, canonical, rules)) {
      result.rejects.push_back({ smiles, *reason });
      continue;
    }
    if (!kept.insert(std::move(canonical)).second)
      result.rejects.push_back({ smiles, RejectReason::kDuplicate });
  }

  result.kept.assign(kept.begin(), kept.end());
  return result;
}

}  // namespace fuelgen
