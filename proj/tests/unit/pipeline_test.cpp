//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fuelgen/chem/enumerate.h"
#include "fuelgen/chem/smiles.h"
#include "fuelgen/pipeline/commands.h"
#include "fuelgen/pipeline/config.h"
#include "fuelgen/pipeline/io.h"
#include "fuelgen/pipeline/split.h"
#include "fuelgen/pipeline/synthetic_ron.h"
#include "fuelgen/util/csv.h"
#include "fuelgen/util/error.h"

using namespace fuelgen;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path fresh_dir(const std::string &name) {
  fs::path p = fs::temp_directory_path() / ("fuelgen_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

struct Corpus {
  std::vector<std::string> smiles;
  std::vector<RonRecord> ron;
};

Corpus thousand() {
  Corpus c;
  std::vector<std::string> all = enumerate_molecules(6);
  c.smiles.assign(all.begin(), all.begin() + 1000);
  for (int i = 0; i < 1000; i += 25)
    c.ron.push_back({ c.smiles[i], synthetic_ron(parse_smiles(c.smiles[i])) });
  return c;
}

}  // namespace

TEST(SyntheticRon, Examples) {
  EXPECT_DOUBLE_EQ(synthetic_ron(parse_smiles("C")), 37.0);
  EXPECT_DOUBLE_EQ(synthetic_ron(parse_smiles("CCO")), 46.0);
  EXPECT_EQ(synthetic_ron(parse_smiles("CC(C)C=O")),
            synthetic_ron(parse_smiles("CC(C)C=O")));
}

TEST(Split, Sizes) {
  Corpus c = thousand();
  SplitResult s = split_dataset(c.smiles, c.ron, {}, 1);
  EXPECT_EQ(s.corpus_train.size(), 950u);
  EXPECT_EQ(s.corpus_val.size(), 25u);
  EXPECT_EQ(s.corpus_test.size(), 25u);
  EXPECT_EQ(s.ron_val.size(), 10u);
  EXPECT_EQ(s.ron_test.size(), 10u);
  EXPECT_EQ(s.ron_train.size(), c.ron.size() - 20);
}

TEST(Split, Deterministic) {
  Corpus c = thousand();
  SplitResult a = split_dataset(c.smiles, c.ron, {}, 5);
  SplitResult b = split_dataset(c.smiles, c.ron, {}, 5);
  EXPECT_EQ(a.corpus_train, b.corpus_train);
  EXPECT_EQ(a.corpus_val, b.corpus_val);
  EXPECT_EQ(a.corpus_test, b.corpus_test);
}

TEST(Split, RonPartitionAndNoLeakage) {
  Corpus c = thousand();
  SplitResult s = split_dataset(c.smiles, c.ron, {}, 3);
  std::multiset<std::string> seen;
  for (const auto *part: { &s.ron_train, &s.ron_val, &s.ron_test }) {
    for (const RonRecord &r: *part)
      seen.insert(r.smiles);
  }
  EXPECT_EQ(seen.size(), c.ron.size());
  for (const RonRecord &r: c.ron)
    EXPECT_EQ(seen.count(r.smiles), 1u) << r.smiles;

  std::set<std::string> train(s.corpus_train.begin(), s.corpus_train.end());
  for (const auto *part: { &s.ron_val, &s.ron_test }) {
    for (const RonRecord &r: *part)
      EXPECT_FALSE(train.count(r.smiles)) << r.smiles;
  }
  std::set<std::string> everywhere(train);
  everywhere.insert(s.corpus_val.begin(), s.corpus_val.end());
  everywhere.insert(s.corpus_test.begin(), s.corpus_test.end());
  for (const RonRecord &r: s.ron_train)
    EXPECT_TRUE(everywhere.count(r.smiles)) << r.smiles;
}

TEST(Quantile, LinearInterpolation) {
  EXPECT_DOUBLE_EQ(quantile({ 1, 2, 3, 4, 5 }, 0.5), 3.0);
  EXPECT_DOUBLE_EQ(quantile({ 1, 2, 3, 4, 5 }, 0.9), 4.6);
  EXPECT_DOUBLE_EQ(quantile({ 7 }, 0.9), 7.0);
}

TEST(Config, KeyValueRoundTrip) {
  PipelineConfig cfg = PipelineConfig::desk_scale();
  cfg.seed = 99;
  cfg.covae.latent_dim = 12;
  PipelineConfig back = PipelineConfig::paper_scale();
  back.apply(KeyValueConfig::parse(cfg.to_key_values().dump()));
  EXPECT_EQ(back.to_key_values().dump(), cfg.to_key_values().dump());
  EXPECT_EQ(back.covae, cfg.covae);
  EXPECT_THROW(back.apply(KeyValueConfig::parse("no.such.key = 1\n")),
               ValidationError);
}

TEST(Commands, CurateTwiceIsIdempotent) {
  fs::path dir = fresh_dir("curate");
  write_lines(dir / "in.smi", { "OCC", "CCO", "C1CC1", "CCN", "O=O=O" });
  PipelineConfig cfg = PipelineConfig::desk_scale();
  cfg.out_dir = dir;
  cfg.corpus = dir / "in.smi";
  run_command("curate", cfg);
  const std::string once = slurp(dir / artifacts::kCurated);
  fs::copy_file(dir / artifacts::kCurated, dir / "again.smi");
  cfg.corpus = dir / "again.smi";
  run_command("curate", cfg);
  EXPECT_EQ(slurp(dir / artifacts::kCurated), once);
  EXPECT_EQ(read_smi(dir / artifacts::kCurated).size(), 2u);
}

TEST(Commands, ScreenNeedsRegressor) {
  fs::path dir = fresh_dir("screen");
  PipelineConfig cfg = PipelineConfig::desk_scale();
  cfg.out_dir = dir;
  EXPECT_THROW(run_command("screen", cfg), MissingArtifactError);
  EXPECT_THROW(run_command("no-such-command", cfg), ValidationError);
}
