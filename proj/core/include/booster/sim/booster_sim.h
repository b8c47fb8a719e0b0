/*!
 * Copyright 2026 by Contributors
 * \file booster_sim.h
 * \brief Trace-driven timing of training and batch inference on the accelerator.
 */
#ifndef BOOSTER_SIM_BOOSTER_SIM_H_
#define BOOSTER_SIM_BOOSTER_SIM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "booster/arch/booster_config.h"
#include "booster/arch/sram_map.h"
#include "booster/data/dataset.h"
#include "booster/gbt/tree.h"
#include "booster/gbt/work_trace.h"
#include "booster/sim/cycle_report.h"
#include "booster/sim/dram.h"
#include "booster/sim/host_model.h"

namespace booster::sim {

using StepTrace = gbt::WorkTrace;

struct BoosterOptions {
  arch::MapStrategy mapping{arch::MapStrategy::kGroupByField};
  data::Layout layout{data::Layout::kColumnMajor};
};

/*! \brief Histogram replicas and field passes step 1 uses for a map. */
struct Step1Plan {
  std::uint32_t replicas{1};
  std::uint32_t passes{1};
  std::uint32_t bus_per_replica{0};
  std::uint32_t cycles_per_record{0};
};

Step1Plan plan_step1(const arch::SramMap& map, const arch::BoosterConfig& cfg);

/*! \brief Density of a scattered subset: touched blocks over blocks in the array. */
double block_density(std::uint64_t touched, std::uint64_t total_blocks);

/*! \brief `replicas` caps the plan's replica count; 0 uses every replica that fits. */
StepCost sim_step1(const gbt::TraceEvent& ev, const StepTrace& trace, const arch::SramMap& map,
                   const arch::BoosterConfig& cfg, const DramConfig& dram, std::uint32_t replicas = 0);

/*!
 * \brief Replica count minimizing step-1 time plus the host reduction of the
 *  replicated histograms. Small subsets use few replicas.
 */
std::uint32_t best_replicas(const gbt::TraceEvent& ev, const StepTrace& trace, const arch::SramMap& map,
                            const Step1Plan& plan, const arch::BoosterConfig& cfg, const DramConfig& dram,
                            const HostConfig& host);
StepCost sim_step3(const gbt::TraceEvent& ev, const StepTrace& trace, data::Layout layout,
                   const arch::BoosterConfig& cfg, const DramConfig& dram);
StepCost sim_step5(const gbt::TraceEvent& ev, const StepTrace& trace, data::Layout layout,
                   const arch::BoosterConfig& cfg, const DramConfig& dram);

/*! \brief Host split finding for one step-2 event, in platform cycles. */
StepCost host_step2(const gbt::TraceEvent& ev, const HostConfig& host, double platform_clock_ghz);
/*! \brief Host reduction of `copies` histogram replicas after one binning pass, in platform cycles. */
StepCost host_reduction(std::uint64_t copies, std::uint64_t bins, const HostConfig& host, double platform_clock_ghz);

/*! \brief An event covering every record of the trace, for single-step studies. */
gbt::TraceEvent full_pass_event(const StepTrace& trace, gbt::Step step);

/*! \brief Header-only trace for `n_records` records of a schema. */
StepTrace synthetic_trace(const data::Schema& schema, std::uint64_t n_records);

/*! \brief Short id of the workload a trace describes. */
std::string workload_id(const StepTrace& trace);

CycleReport sim_training(const StepTrace& trace, const data::Schema& schema, const arch::BoosterConfig& cfg,
                         const DramConfig& dram, const HostConfig& host, const BoosterOptions& options = {});

/*!
 * \brief Smallest BU count at which step 1 stops being SRAM-bound for
 *  records of `n_fields` single-bin-byte fields, sweeping whole clusters.
 */
std::uint32_t step1_crossover_bus(const arch::BoosterConfig& cfg, const DramConfig& dram, std::uint32_t n_fields = 64,
                                  std::uint64_t n_records = 1'000'000);

/*! \brief What batch inference needs to know about a model and its input. */
struct InferenceProfile {
  std::uint64_t n_records{0};
  std::uint32_t record_stride{0};
  std::vector<double> mean_path;  ///< per tree, internal vertices visited per record
  std::uint32_t max_depth{0};
};

InferenceProfile profile_inference(const gbt::Ensemble& ensemble, const data::QuantizedDataset& dataset);

/*!
 * \brief Batch inference with `replicas` copies of the ensemble; 0 picks as
 *  many as fit. Throws CapacityError (naming the chips needed) if the trees
 *  do not fit one chip.
 */
CycleReport sim_batch_inference(const InferenceProfile& profile, const arch::BoosterConfig& cfg,
                                const DramConfig& dram, std::uint32_t replicas = 0);

}  // namespace booster::sim

#endif  // BOOSTER_SIM_BOOSTER_SIM_H_
