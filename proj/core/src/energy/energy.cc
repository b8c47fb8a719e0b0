/*!
 * Copyright 2026 by Contributors
 * \file energy.cc
 */
#include "booster/energy/energy.h"

#include <algorithm>

#include "booster/error.h"

namespace booster::energy {

double EnergyParams::sram_norm_for(const std::string& platform) const {
  auto it = sram_norm.find(platform);
  if (it == sram_norm.end() && platform.rfind("booster", 0) == 0) it = sram_norm.find("booster");
  if (it == sram_norm.end()) throw InvalidArgument("no SRAM energy figure for platform '" + platform + "'");
  return it->second;
}

EnergyReport energy_report(const sim::CycleReport& report, const EnergyParams& params) {
  EnergyReport e;
  e.platform = report.platform;
  e.sram_accesses = report.sram_accesses();
  e.dram_bytes = report.bytes_read() + report.bytes_written();
  e.sram_energy = static_cast<double>(e.sram_accesses) * params.sram_norm_for(report.platform);
  e.dram_energy = static_cast<double>(e.dram_bytes) * params.dram_energy_per_byte;
  return e;
}

void normalize(std::vector<EnergyReport>& reports, const std::string& reference) {
  const auto ref = std::find_if(reports.begin(), reports.end(),
                                [&](const EnergyReport& e) { return e.platform == reference; });
  if (ref == reports.end()) throw InvalidArgument("energy reference platform '" + reference + "' missing");
  const double s = ref->sram_energy, d = ref->dram_energy;
  for (auto& e : reports) {
    e.sram_relative = s > 0.0 ? e.sram_energy / s : 0.0;
    e.dram_relative = d > 0.0 ? e.dram_energy / d : 0.0;
  }
}

}  // namespace booster::energy
