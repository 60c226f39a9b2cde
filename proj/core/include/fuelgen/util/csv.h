//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FUELGEN_UTIL_CSV_H_
#define FUELGEN_UTIL_CSV_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace fuelgen {

// Minimal CSV support for the flat tables this project emits: no quoting,
// fields never contain commas or newlines.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(std::string_view name) const;
};

std::vector<std::string> split_csv_line(std::string_view line);

CsvTable read_csv(const std::filesystem::path &path);

void write_csv(const std::filesystem::path &path, const CsvTable &table);

// Shortest round-trip decimal representation of a double. Used everywhere a
// real number is written so output files are byte-reproducible.
std::string format_double(double value);

double parse_double(std::string_view text);

long long parse_int(std::string_view text);

std::vector<std::string> read_lines(const std::filesystem::path &path);

void write_lines(const std::filesystem::path &path,
                 const std::vector<std::string> &lines);

}  // namespace fuelgen

#endif  // FUELGEN_UTIL_CSV_H_
