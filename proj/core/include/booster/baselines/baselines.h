/*!
 * Copyright 2026 by Contributors
 * \file baselines.h
 * \brief Ideal-parallelism timing models of conventional platforms.
 */
#ifndef BOOSTER_BASELINES_BASELINES_H_
#define BOOSTER_BASELINES_BASELINES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "booster/sim/booster_sim.h"
#include "booster/sim/cycle_report.h"
#include "booster/sim/dram.h"
#include "booster/sim/host_model.h"

namespace booster::baselines {

enum class BaselineKind : std::uint8_t { kIdeal32 = 0, kIdealGpu = 1, kInterRecord = 2, kSequential = 3 };
const char* to_string(BaselineKind k);
BaselineKind baseline_kind_from_string(const std::string& s);

/*! \brief Cycles per primitive operation on one worker. */
struct OpCycles {
  double bin_update{4.0};
  double predicate{2.0};
  double node_visit{4.0};
  double grad_update{8.0};
  double leaf{1.0};
};

struct BaselineConfig {
  BaselineKind kind{BaselineKind::kIdeal32};
  std::uint32_t parallelism{32};  ///< for inter_record: an upper cap, 0 for none
  double clock_ghz{2.2};
  OpCycles ops;
  double ir_bytes_per_bin{3.37};            ///< inter_record histogram footprint per bin and copy
  std::uint64_t ir_sram_bytes{3200 * 2048};  ///< on-chip SRAM shared by inter_record copies
  bool fetch_grads_in_step1{false};

  static BaselineConfig ideal32();
  static BaselineConfig ideal_gpu();
  static BaselineConfig inter_record();
  static BaselineConfig sequential();
  static BaselineConfig of(BaselineKind kind);
  void validate() const;
};

/*! \brief Bytes one inter-record histogram copy occupies. */
double ir_copy_bytes(std::uint64_t total_bins, const BaselineConfig& cfg);

/*! \brief Workers the configuration runs with; throws InfeasibleError if no inter-record copy fits. */
std::uint32_t effective_parallelism(std::uint64_t total_bins, const BaselineConfig& cfg);

/*! \brief Training time of a traced run. Throws InfeasibleError for an inter-record histogram that does not fit. */
sim::CycleReport baseline_step_cycles(const sim::StepTrace& trace, const BaselineConfig& cfg,
                                      const sim::DramConfig& dram, const sim::HostConfig& host);

/*! \brief Batch inference time; every worker evaluates whole records over all trees. */
sim::CycleReport baseline_inference(const sim::InferenceProfile& profile, const BaselineConfig& cfg,
                                    const sim::DramConfig& dram);

}  // namespace booster::baselines

#endif  // BOOSTER_BASELINES_BASELINES_H_
