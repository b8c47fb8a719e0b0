/*!
 * Copyright 2026 by Contributors
 * \file cycle_report.h
 * \brief Per-step cycle, traffic and access accounting for one platform.
 */
#ifndef BOOSTER_SIM_CYCLE_REPORT_H_
#define BOOSTER_SIM_CYCLE_REPORT_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace booster::sim {

enum class StepKind : std::uint8_t { kStep1 = 0, kStep2Host = 1, kStep3 = 2, kStep5 = 3, kInference = 4 };
inline constexpr std::size_t kNumStepKinds = 5;
inline constexpr std::array<StepKind, kNumStepKinds> kAllStepKinds{StepKind::kStep1, StepKind::kStep2Host,
                                                                    StepKind::kStep3, StepKind::kStep5,
                                                                    StepKind::kInference};
const char* to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

struct StepCost {
  double cycles{0.0};
  double dram_cycles{0.0};     ///< time the DRAM stream needs on its own
  double compute_cycles{0.0};  ///< time the compute units need on their own
  std::uint64_t bytes_read{0};
  std::uint64_t bytes_written{0};
  std::uint64_t sram_accesses{0};
  std::uint64_t row_hits{0};
  std::uint64_t row_misses{0};
  double bu_busy{0.0};      ///< BU-cycles spent updating SRAM
  double bu_capacity{0.0};  ///< BU-cycles available on the active BUs
  std::uint64_t invocations{0};

  StepCost& operator+=(const StepCost& o);
  bool operator==(const StepCost&) const = default;
};

using StepCosts = std::array<StepCost, kNumStepKinds>;

struct CycleReport {
  std::string platform;
  std::string workload;  ///< identifies the trace; reports compare only within one workload
  double clock_ghz{1.0};
  bool feasible{true};
  std::string note;
  StepCosts steps{};
  std::vector<StepCosts> per_tree;

  [[nodiscard]] const StepCost& step(StepKind k) const { return steps[static_cast<std::size_t>(k)]; }
  StepCost& step(StepKind k) { return steps[static_cast<std::size_t>(k)]; }
  /*! \brief Adds `cost` to the totals and to tree `tree` (if training). */
  void add(StepKind k, const StepCost& cost, std::size_t tree);
  [[nodiscard]] double total_cycles() const;
  [[nodiscard]] double seconds() const { return total_cycles() / (clock_ghz * 1e9); }
  [[nodiscard]] double share(StepKind k) const;
  [[nodiscard]] std::uint64_t bytes_read() const;
  [[nodiscard]] std::uint64_t bytes_written() const;
  [[nodiscard]] std::uint64_t sram_accesses() const;
  /*! \brief Step-1 SRAM bandwidth utilization of the active BUs. */
  [[nodiscard]] double sram_utilization() const;
  /*! \brief Step-1 DRAM bandwidth utilization. */
  [[nodiscard]] double dram_utilization() const;

  bool operator==(const CycleReport&) const = default;
};

/*! \brief Key-value text: a `report` line, one `tree` line per tree and step, one `summary` line per step. */
void write_report(const CycleReport& report, std::ostream& os);
CycleReport read_report(std::istream& is);

}  // namespace booster::sim

#endif  // BOOSTER_SIM_CYCLE_REPORT_H_
