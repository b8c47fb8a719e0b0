/*!
 * Copyright 2026 by Contributors
 * \file csv.cc
 */
#include "booster/data/csv.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "booster/error.h"

namespace booster::data {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur.push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(std::move(cur));
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  cells.push_back(std::move(cur));
  return cells;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

bool is_missing_cell(const std::string& s) { return s.empty() || s == "NA"; }

std::optional<double> parse_double(const std::string& s) {
  double v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) return std::nullopt;
  return v;
}

}  // namespace

RawTable read_csv(std::istream& in, const CsvOptions& options) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("csv: missing header row");
  auto header = split_line(line);
  for (auto& h : header) h = trim(h);

  std::size_t label_idx = header.size();
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == options.label_column) label_idx = i;
  }
  if (label_idx == header.size()) throw FormatError("csv: label column '" + options.label_column + "' not found");
  for (const auto& name : options.categorical) {
    bool found = false;
    for (const auto& h : header) found = found || h == name;
    if (!found) throw FormatError("csv: categorical column '" + name + "' not found");
  }

  std::vector<std::vector<std::string>> cells(header.size());
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto parts = split_line(line);
    if (parts.size() != header.size()) {
      throw FormatError("csv: row " + std::to_string(row + 1) + " has " + std::to_string(parts.size()) +
                        " cells, header has " + std::to_string(header.size()));
    }
    for (std::size_t i = 0; i < parts.size(); ++i) cells[i].push_back(trim(parts[i]));
    ++row;
  }

  RawTable table;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i == label_idx) {
      for (std::size_t r = 0; r < row; ++r) {
        auto v = parse_double(cells[i][r]);
        if (!v) throw FormatError("csv: label at row " + std::to_string(r + 1) + " is not a number");
        table.labels.push_back(*v);
      }
      continue;
    }
    RawColumn col;
    col.name = header[i];
    col.values.reserve(row);
    if (options.categorical.count(header[i]) != 0) {
      col.kind = FieldKind::kCategorical;
      bool all_int = true;
      for (const auto& s : cells[i]) {
        if (is_missing_cell(s)) continue;
        auto v = parse_double(s);
        all_int = all_int && v && *v >= 0 && *v == std::floor(*v);
      }
      std::map<std::string, double> dict;
      double max_code = -1;
      for (const auto& s : cells[i]) {
        if (is_missing_cell(s)) {
          col.values.push_back(kMissing);
        } else if (all_int) {
          const double v = *parse_double(s);
          max_code = std::max(max_code, v);
          col.values.push_back(v);
        } else {
          auto [it, inserted] = dict.emplace(s, static_cast<double>(dict.size()));
          col.values.push_back(it->second);
        }
      }
      col.n_categories = all_int ? static_cast<std::uint32_t>(max_code + 1)
                                 : static_cast<std::uint32_t>(dict.size());
      if (col.n_categories == 0) col.n_categories = 1;
    } else {
      col.kind = FieldKind::kNumeric;
      for (std::size_t r = 0; r < row; ++r) {
        const auto& s = cells[i][r];
        if (is_missing_cell(s)) {
          col.values.push_back(kMissing);
          continue;
        }
        auto v = parse_double(s);
        if (!v) {
          throw FormatError("csv: column '" + col.name + "' row " + std::to_string(r + 1) +
                            ": '" + s + "' is not numeric");
        }
        col.values.push_back(*v);
      }
    }
    table.columns.push_back(std::move(col));
  }
  return table;
}

RawTable read_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_csv(in, options);
}

void write_csv(const RawTable& table, std::ostream& out, const std::string& label_column) {
  for (const auto& c : table.columns) out << c.name << ',';
  out << label_column << '\n';
  out << std::setprecision(17);
  for (std::size_t r = 0; r < table.n_rows(); ++r) {
    for (const auto& c : table.columns) {
      const double v = c.values[r];
      if (is_missing(v)) {
        out << "NA";
      } else if (c.kind == FieldKind::kCategorical) {
        out << static_cast<long long>(v);
      } else {
        out << v;
      }
      out << ',';
    }
    out << table.labels[r] << '\n';
  }
}

void write_csv(const RawTable& table, const std::filesystem::path& path, const std::string& label_column) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_csv(table, out, label_column);
}

}  // namespace booster::data
