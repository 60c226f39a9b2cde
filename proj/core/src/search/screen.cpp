//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/search/screen.h"

#include <algorithm>
#include <map>

#include <spdlog/spdlog.h>

#include "fuelgen/chem/canonical.h"
#include "fuelgen/chem/properties.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/covae/network.h"
#include "fuelgen/search/bounds.h"
#include "fuelgen/util/error.h"
#include "fuelgen/util/random.h"

namespace fuelgen {

void ScreenConfig::validate() const {
  if (!(threshold > 0))
    throw ValidationError("screening threshold must be positive");
  if (!(extension >= 0))
    throw ValidationError("bound extension must be nonnegative");
  if (runs < 1)
    throw ValidationError("screening needs at least one run");
}

std::string_view novelty_name(Novelty n) {
  switch (n) {
  case Novelty::kInRonTable:
    return "in-ron-table";
  case Novelty::kInCorpus:
    return "in-corpus";
  case Novelty::kNovel:
    return "novel";
  }
  return "unknown";
}

double predict_ron_latent(const Regressor &reg, const Eigen::VectorXd &z) {
  return reg.predict(z);
}

CandidateRecord validate_candidate(const CoVaeModel &covae,
                                   const Regressor &reg,
                                   const Eigen::VectorXd &z,
                                   double threshold) {
  if (z.size() != covae.latent_dim())
    throw ShapeError("latent vector has the wrong dimension");

  CandidateRecord rec;
  rec.z = z;
  rec.first_pass_ron = predict_ron_latent(reg, z);
  rec.decoded = decode_tokens(greedy_decode(covae, z).front(), covae.vocab());

  MolGraph g;
  try {
    g = parse_smiles(rec.decoded);
  } catch (const SyntaxError &) {
    return rec;
  }
  if (!check_valence(g).valid())
    return rec;

  rec.valid = true;
  rec.canonical = canonicalize(g);
  rec.heavy_atoms = g.num_atoms();
  rec.oxygens = g.count(Element::kOxygen);
  rec.rings = ring_count(g);
  rec.functional_groups = classify_functional_groups(g).to_string();

  const TokenSeq tokens = encode_tokens(rec.decoded, covae.vocab());
  const Eigen::VectorXd mu = encode_means(covae, std::span(&tokens, 1)).col(0);
  rec.revalidated_ron = predict_ron_latent(reg, mu);
  rec.accepted = *rec.revalidated_ron > threshold;
  return rec;
}

namespace {
  std::unordered_set<std::string>
  canonical_set(std::span<const std::string> smiles) {
    std::unordered_set<std::string> out;
    for (const std::string &s: smiles) {
      try {
        out.insert(canonical_smiles(s));
      } catch (const Error &) {
        spdlog::warn("ignoring unparsable reference SMILES {}", s);
      }
    }
    return out;
  }
}  // namespace

ScreenResult screen(const CoVaeModel &covae, const Regressor &reg,
                    std::span<const std::string> ron_smiles,
                    std::span<const std::string> corpus,
                    const ScreenConfig &cfg) {
  cfg.validate();

  std::vector<TokenSeq> tokens;
  for (const std::string &s: corpus) {
    try {
      tokens.push_back(encode_tokens(s, covae.vocab()));
    } catch (const Error &e) {
      spdlog::warn("corpus entry {} not encodable: {}", s, e.what());
    }
  }

  ScreenResult result;
  result.bounds = latent_bounds(encode_means(covae, tokens), cfg.extension);

  const auto in_ron = canonical_set(ron_smiles);
  const auto in_corpus = canonical_set(corpus);
  std::map<std::string, CandidateRecord> unique;

  auto objective = [&](const Eigen::VectorXd &z) {
    return predict_ron_latent(reg, z);
  };
  for (int run = 0; run < cfg.runs; ++run) {
    DeOptions de = cfg.de;
    de.seed = make_rng(cfg.seed, { static_cast<std::uint64_t>(run) })();
    DeResult dr = de_optimize(objective, result.bounds, de);
    result.run_best.push_back(dr.best_value);

    for (Eigen::Index i = 0; i < dr.population.cols(); ++i) {
      if (!(dr.values[i] > cfg.threshold))
        continue;
      ++result.harvested;
      CandidateRecord rec = validate_candidate(covae, reg, dr.population.col(i),
                                               cfg.threshold);
      if (!rec.valid) {
        ++result.invalid;
        continue;
      }
      if (!rec.accepted) {
        ++result.below_threshold;
        continue;
      }
      auto [it, inserted] = unique.try_emplace(rec.canonical, rec);
      if (!inserted) {
        ++result.duplicates;
        if (*rec.revalidated_ron > *it->second.revalidated_ron)
          it->second = std::move(rec);
      }
    }
  }

  for (auto &[canon, rec]: unique) {
    rec.novelty = in_ron.contains(canon)      ? Novelty::kInRonTable
                  : in_corpus.contains(canon) ? Novelty::kInCorpus
                                              : Novelty::kNovel;
    result.accepted.push_back(std::move(rec));
  }
  std::stable_sort(result.accepted.begin(), result.accepted.end(),
                   [](const CandidateRecord &a, const CandidateRecord &b) {
                     if (*a.revalidated_ron != *b.revalidated_ron)
                       return *a.revalidated_ron > *b.revalidated_ron;
                     return a.canonical < b.canonical;
                   });
  return result;
}

}  // namespace fuelgen
