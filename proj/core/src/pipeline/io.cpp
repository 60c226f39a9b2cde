//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/pipeline/io.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <fcntl.h>
#include <unistd.h>

#include "fuelgen/chem/canonical.h"
#include "fuelgen/util/csv.h"
#include "fuelgen/util/error.h"

namespace fuelgen {

std::vector<std::string> read_smi(const std::filesystem::path &path) {
  if (!std::filesystem::exists(path))
    throw MissingArtifactError("missing corpus " + path.string());
  std::vector<std::string> out;
  for (const std::string &line: read_lines(path)) {
    std::istringstream in(line);
    std::string field;
    if (in >> field)
      out.push_back(field);
  }
  return out;
}

void write_smi(const std::filesystem::path &path,
               std::span<const std::string> smiles) {
  write_lines(path, std::vector<std::string>(smiles.begin(), smiles.end()));
}

std::vector<RonRecord> read_ron_csv(const std::filesystem::path &path) {
  if (!std::filesystem::exists(path))
    throw MissingArtifactError("missing RON table " + path.string());
  CsvTable t = read_csv(path);
  const int sc = t.column("smiles"), rc = t.column("ron");
  if (sc < 0 || rc < 0)
    throw ValidationError(path.string() + " needs a smiles,ron header");

  std::vector<RonRecord> out;
  std::vector<std::string> bad;
  std::unordered_map<std::string, int> seen;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto &row = t.rows[i];
    const std::string where = "row " + std::to_string(i + 2);
    if (static_cast<int>(row.size()) <= std::max(sc, rc)) {
      bad.push_back(where + ": missing fields");
      continue;
    }
    RonRecord r;
    try {
      r.smiles = canonical_smiles(row[sc]);
      r.ron = parse_double(row[rc]);
    } catch (const Error &e) {
      bad.push_back(where + " (" + row[sc] + "): " + e.what());
      continue;
    }
    if (!(r.ron >= kMinRon && r.ron <= kMaxRon)) {
      bad.push_back(where + " (" + row[sc] + "): RON outside [0, 150]");
      continue;
    }
    auto [it, fresh] = seen.emplace(r.smiles, static_cast<int>(i) + 2);
    if (!fresh) {
      bad.push_back(where + " (" + row[sc] + "): duplicates row "
                    + std::to_string(it->second));
      continue;
    }
    out.push_back(std::move(r));
  }
  if (!bad.empty()) {
    std::string msg = path.string() + " has invalid records:";
    for (const std::string &b: bad)
      msg += " " + b + ";";
    throw ValidationError(msg);
  }
  return out;
}

void write_ron_csv(const std::filesystem::path &path,
                   std::span<const RonRecord> records) {
  CsvTable t;
  t.header = { "smiles", "ron" };
  for (const RonRecord &r: records)
    t.rows.push_back({ r.smiles, format_double(r.ron) });
  write_csv(path, t);
}

void write_metrics_csv(const std::filesystem::path &path,
                       std::span<const MetricsRow> rows) {
  CsvTable t;
  t.header = { "epoch", "beta", "bce", "kld", "l_ron", "total",
               "val_recon_accuracy", "val_char_accuracy", "val_ron_mae" };
  for (const MetricsRow &r: rows)
    t.rows.push_back({ std::to_string(r.epoch), format_double(r.beta),
                       format_double(r.bce), format_double(r.kld),
                       format_double(r.l_ron), format_double(r.total),
                       format_double(r.val_recon_accuracy),
                       format_double(r.val_char_accuracy),
                       format_double(r.val_ron_mae) });
  write_csv(path, t);
}

void write_candidates_csv(const std::filesystem::path &path,
                          std::span<const CandidateRecord> rows) {
  CsvTable t;
  t.header = { "canonical_smiles", "first_pass_ron", "revalidated_ron",
               "heavy_atoms", "oxygens", "rings", "functional_groups",
               "novelty" };
  for (const CandidateRecord &r: rows)
    t.rows.push_back({ r.canonical, format_double(r.first_pass_ron),
                       r.revalidated_ron ? format_double(*r.revalidated_ron)
                                         : "nan",
                       std::to_string(r.heavy_atoms),
                       std::to_string(r.oxygens), std::to_string(r.rings),
                       r.functional_groups,
                       std::string(novelty_name(r.novelty)) });
  write_csv(path, t);
}

void write_candidate_latents(const std::filesystem::path &path,
                             std::span<const CandidateRecord> rows) {
  CsvTable t;
  t.header = { "canonical_smiles", "decoded_smiles" };
  const Eigen::Index dim = rows.empty() ? 0 : rows.front().z.size();
  for (Eigen::Index i = 0; i < dim; ++i)
    t.header.push_back("z" + std::to_string(i));
  for (const CandidateRecord &r: rows) {
    std::vector<std::string> row { r.canonical, r.decoded };
    for (Eigen::Index i = 0; i < r.z.size(); ++i)
      row.push_back(format_double(r.z[i]));
    t.rows.push_back(std::move(row));
  }
  write_csv(path, t);
}

void write_element_distribution(const std::filesystem::path &path,
                                std::span<const CandidateRecord> rows) {
  std::map<std::pair<int, int>, int> hist;
  for (const CandidateRecord &r: rows)
    ++hist[{ r.heavy_atoms - r.oxygens, r.oxygens }];
  CsvTable t;
  t.header = { "carbons", "oxygens", "count" };
  for (const auto &[k, n]: hist)
    t.rows.push_back({ std::to_string(k.first), std::to_string(k.second),
                       std::to_string(n) });
  write_csv(path, t);
}

double quantile(std::vector<double> values, double q) {
  if (values.empty())
    throw ValidationError("quantile of an empty sample");
  if (!(q >= 0 && q <= 1))
    throw ValidationError("quantile level must lie in [0, 1]");
  std::sort(values.begin(), values.end());
  const double h = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (h - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

OutputLock::OutputLock(const std::filesystem::path &dir)
    : path_(dir / ".fuelgen.lock") {
  std::filesystem::create_directories(dir);
  const int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0)
    throw IoError("output directory " + dir.string()
                  + " is locked by another run (" + path_.string() + ")");
  const std::string pid = std::to_string(::getpid()) + "\n";
  [[maybe_unused]] auto n = ::write(fd, pid.data(), pid.size());
  ::close(fd);
}

OutputLock::~OutputLock() {
  std::error_code ec;
  std::filesystem::remove(path_, ec);
}

}  // namespace fuelgen
