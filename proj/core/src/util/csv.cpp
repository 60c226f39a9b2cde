//
// Project FuelGen - Copyright 2026 The FuelGen Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fuelgen/util/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <system_error>

#include "fuelgen/util/error.h"

namespace fuelgen {

int CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name)
      return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r')
    line.remove_suffix(1);

  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::vector<std::string> read_lines(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw IoError("cannot open " + path.string());

  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

void write_lines(const std::filesystem::path &path,
                 const std::vector<std::string> &lines) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write " + path.string());
  for (const std::string &line: lines)
    out << line << '\n';
}

CsvTable read_csv(const std::filesystem::path &path) {
  std::vector<std::string> lines = read_lines(path);
  CsvTable table;
  bool first = true;
  for (const std::string &line: lines) {
    if (line.empty())
      continue;
    if (first) {
      table.header = split_csv_line(line);
      first = false;
      continue;
    }
    table.rows.push_back(split_csv_line(line));
  }
  if (first)
    throw ValidationError(path.string() + ": missing CSV header");
  return table;
}

void write_csv(const std::filesystem::path &path, const CsvTable &table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw IoError("cannot write " + path.string());

  auto emit = [&](const std::vector<std::string> &fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0)
        out << ',';
      out << fields[i];
    }
    out << '\n';
  };
  emit(table.header);
  for (const auto &row: table.rows)
    emit(row);
}

std::string format_double(double value) {
  if (std::isnan(value))
    return "nan";
  if (std::isinf(value))
    return value > 0 ? "inf" : "-inf";

  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc())
    throw IoError("failed to format double");
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  if (text == "nan")
    return std::nan("");
  if (text == "inf")
    return HUGE_VAL;
  if (text == "-inf")
    return -HUGE_VAL;

  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ValidationError("not a number: '" + std::string(text) + "'");
  return value;
}

long long parse_int(std::string_view text) {
  long long value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ValidationError("not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace fuelgen
