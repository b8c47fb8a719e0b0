/*!
 * Copyright 2026 by Contributors
 * \file report.h
 * \brief Comparison tables over platform reports of one workload.
 */
#ifndef BOOSTER_REPORT_REPORT_H_
#define BOOSTER_REPORT_REPORT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "booster/energy/energy.h"
#include "booster/sim/cycle_report.h"

namespace booster::report {

struct SpeedupRow {
  std::string platform;
  bool feasible{true};
  double cycles{0.0};
  double seconds{0.0};
  double speedup{0.0};  ///< reference seconds over this platform's seconds; 0 if infeasible
  std::string note;
};

/*!
 * \brief Wall times and speedups over `reference`. Throws InvalidArgument if
 *  the feasible reports describe different workloads or the reference is absent.
 */
std::vector<SpeedupRow> speedup_table(const std::vector<sim::CycleReport>& reports,
                                      const std::string& reference = "ideal32");

struct BreakdownRow {
  std::string platform;
  sim::StepKind step{sim::StepKind::kStep1};
  double cycles{0.0};
  double share{0.0};
};

/*! \brief Per platform and step, the fraction of that platform's cycles. Infeasible reports are skipped. */
std::vector<BreakdownRow> emit_breakdown(const std::vector<sim::CycleReport>& reports);

/*! \brief Throws InvalidArgument on an empty input or a non-positive value. */
double geometric_mean(std::span<const double> values);

// CSV writers. Column lists are fixed and documented in the README.
void write_speedup_csv(const std::vector<SpeedupRow>& rows, std::ostream& os);
void write_breakdown_csv(const std::vector<BreakdownRow>& rows, std::ostream& os);
void write_steps_csv(const std::vector<sim::CycleReport>& reports, std::ostream& os);
void write_energy_csv(const std::vector<energy::EnergyReport>& rows, std::ostream& os);

inline constexpr const char* kSpeedupColumns = "platform,feasible,cycles,seconds,speedup,note";
inline constexpr const char* kBreakdownColumns = "platform,step,cycles,share";
inline constexpr const char* kStepsColumns =
    "platform,step,cycles,dram_cycles,compute_cycles,bytes_read,bytes_written,sram_accesses,row_hits,row_misses";
inline constexpr const char* kEnergyColumns =
    "platform,sram_accesses,dram_bytes,sram_energy,dram_energy,sram_relative,dram_relative";

}  // namespace booster::report

#endif  // BOOSTER_REPORT_REPORT_H_
