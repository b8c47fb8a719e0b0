/*!
 * Copyright 2026 by Contributors
 * \file energy.h
 * \brief Access-count energy estimates. SRAM and DRAM energy are kept apart.
 */
#ifndef BOOSTER_ENERGY_ENERGY_H_
#define BOOSTER_ENERGY_ENERGY_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "booster/sim/cycle_report.h"

namespace booster::energy {

struct EnergyParams {
  /// Per-access SRAM energy by platform, relative to the 32-core cache.
  std::map<std::string, double> sram_norm{{"ideal32", 1.0},      {"sequential", 1.0},     {"ideal_gpu", 2.64},
                                          {"inter_record", 1.0}, {"booster", 0.71}, {"booster_no_opts", 0.71}};
  double dram_energy_per_byte{1.0};

  [[nodiscard]] double sram_norm_for(const std::string& platform) const;
};

struct EnergyReport {
  std::string platform;
  std::uint64_t sram_accesses{0};
  std::uint64_t dram_bytes{0};
  double sram_energy{0.0};
  double dram_energy{0.0};
  double sram_relative{0.0};  ///< over the reference platform, 0 until normalized
  double dram_relative{0.0};
};

EnergyReport energy_report(const sim::CycleReport& report, const EnergyParams& params);

/*! \brief Fills the relative columns against `reference`; throws if it is absent. */
void normalize(std::vector<EnergyReport>& reports, const std::string& reference = "ideal32");

}  // namespace booster::energy

#endif  // BOOSTER_ENERGY_ENERGY_H_
