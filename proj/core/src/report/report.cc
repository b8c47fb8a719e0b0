/*!
 * Copyright 2026 by Contributors
 * \file report.cc
 */
#include "booster/report/report.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "booster/error.h"

namespace booster::report {

std::vector<SpeedupRow> speedup_table(const std::vector<sim::CycleReport>& reports, const std::string& reference) {
  const sim::CycleReport* ref = nullptr;
  const std::string* workload = nullptr;
  for (const auto& r : reports) {
    if (!r.feasible) continue;
    if (workload && *workload != r.workload) {
      throw InvalidArgument("speedup_table: reports describe different workloads (" + *workload + " vs " +
                            r.workload + ")");
    }
    workload = &r.workload;
    if (r.platform == reference) ref = &r;
  }
  if (!ref) throw InvalidArgument("speedup_table: reference platform '" + reference + "' missing or infeasible");
  std::vector<SpeedupRow> rows;
  for (const auto& r : reports) {
    SpeedupRow row;
    row.platform = r.platform;
    row.feasible = r.feasible;
    row.note = r.note;
    if (r.feasible) {
      row.cycles = r.total_cycles();
      row.seconds = r.seconds();
      row.speedup = row.seconds > 0.0 ? ref->seconds() / row.seconds : 0.0;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<BreakdownRow> emit_breakdown(const std::vector<sim::CycleReport>& reports) {
  std::vector<BreakdownRow> rows;
  for (const auto& r : reports) {
    if (!r.feasible) continue;
    for (auto k : sim::kAllStepKinds) rows.push_back({r.platform, k, r.step(k).cycles, r.share(k)});
  }
  return rows;
}

double geometric_mean(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("geometric_mean: no values");
  double log_sum = 0.0;
  for (double v : values) {
    if (!(v > 0.0)) throw InvalidArgument("geometric_mean: values must be positive");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / static_cast<double>(values.size()));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_speedup_csv(const std::vector<SpeedupRow>& rows, std::ostream& os) {
  const auto old = os.precision(17);
  os << kSpeedupColumns << '\n';
  for (const auto& r : rows) {
    os << r.platform << ',' << (r.feasible ? 1 : 0) << ',' << r.cycles << ',' << r.seconds << ',' << r.speedup << ','
       << csv_cell(r.note) << '\n';
  }
  os.precision(old);
}

void write_breakdown_csv(const std::vector<BreakdownRow>& rows, std::ostream& os) {
  const auto old = os.precision(17);
  os << kBreakdownColumns << '\n';
  for (const auto& r : rows) os << r.platform << ',' << to_string(r.step) << ',' << r.cycles << ',' << r.share << '\n';
  os.precision(old);
}

void write_steps_csv(const std::vector<sim::CycleReport>& reports, std::ostream& os) {
  const auto old = os.precision(17);
  os << kStepsColumns << '\n';
  for (const auto& r : reports) {
    if (!r.feasible) continue;
    for (auto k : sim::kAllStepKinds) {
      const auto& c = r.step(k);
      os << r.platform << ',' << to_string(k) << ',' << c.cycles << ',' << c.dram_cycles << ',' << c.compute_cycles
         << ',' << c.bytes_read << ',' << c.bytes_written << ',' << c.sram_accesses << ',' << c.row_hits << ','
         << c.row_misses << '\n';
    }
  }
  os.precision(old);
}

void write_energy_csv(const std::vector<energy::EnergyReport>& rows, std::ostream& os) {
  const auto old = os.precision(17);
  os << kEnergyColumns << '\n';
  for (const auto& e : rows) {
    os << e.platform << ',' << e.sram_accesses << ',' << e.dram_bytes << ',' << e.sram_energy << ',' << e.dram_energy
       << ',' << e.sram_relative << ',' << e.dram_relative << '\n';
  }
  os.precision(old);
}

}  // namespace booster::report
