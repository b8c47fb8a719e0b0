/*!
 * Copyright 2026 by Contributors
 * \file experiment.h
 * \brief End-to-end experiment: data, reference training, platform timing, reports.
 */
#ifndef BOOSTER_REPORT_EXPERIMENT_H_
#define BOOSTER_REPORT_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "booster/arch/booster_config.h"
#include "booster/baselines/baselines.h"
#include "booster/data/csv.h"
#include "booster/data/dataset.h"
#include "booster/data/synth.h"
#include "booster/energy/energy.h"
#include "booster/gbt/trainer.h"
#include "booster/sim/booster_sim.h"
#include "booster/sim/cycle_report.h"

namespace booster::report {

enum class SourceKind : std::uint8_t { kSynth = 0, kCsv = 1, kBinary = 2 };

struct DatasetSource {
  SourceKind kind{SourceKind::kSynth};
  data::SynthSpec synth;
  std::string path;
  data::CsvOptions csv;
  std::uint32_t max_bins{data::kDefaultMaxBins};
};

/*!
 * Platform names: booster, booster_no_opts (naive packing, row-major only),
 * booster_naive, booster_row_major, ideal32, ideal_gpu, inter_record,
 * sequential.
 */
struct ExperimentSpec {
  std::string name{"experiment"};
  DatasetSource dataset;
  std::uint32_t scale_factor{1};
  gbt::TrainConfig train;
  std::vector<std::string> platforms{"booster", "ideal32", "ideal_gpu"};
  arch::BoosterConfig booster;
  sim::DramConfig dram;
  sim::HostConfig host;
  baselines::OpCycles ops;
  double ir_bytes_per_bin{3.37};
  bool inference{false};
  energy::EnergyParams energy;
  std::string out_dir;

  void validate() const;
};

extern const std::vector<std::string> kPlatformNames;

/*! \brief Parses a YAML spec; unknown or malformed keys raise ConfigError naming the key. */
ExperimentSpec parse_spec(const std::string& yaml_text);
ExperimentSpec load_spec(const std::filesystem::path& path);

data::QuantizedDataset prepare_dataset(const DatasetSource& source, std::uint32_t scale_factor = 1);

/*! \brief Schema with the bin counts recorded in a trace. */
data::Schema schema_from_trace(const sim::StepTrace& trace);

/*!
 * \brief Training report for one platform. Infeasible configurations come
 *  back with feasible = false and the reason in `note`.
 */
sim::CycleReport simulate_platform(const std::string& platform, const sim::StepTrace& trace,
                                   const ExperimentSpec& spec);
sim::CycleReport simulate_inference(const std::string& platform, const sim::InferenceProfile& profile,
                                    const ExperimentSpec& spec);

struct ReportBundle {
  std::string name;
  std::string workload;
  std::vector<sim::CycleReport> training;
  std::vector<sim::CycleReport> inference;
  std::vector<energy::EnergyReport> energy;
  std::vector<double> loss_history;
};

ReportBundle simulate_bundle(const std::string& name, const sim::StepTrace& trace, const ExperimentSpec& spec,
                             const sim::InferenceProfile* profile = nullptr);
ReportBundle run_experiment(const ExperimentSpec& spec);

/*! \brief Writes summary.txt, steps.csv, breakdown.csv, speedup.csv, energy.csv and per-platform reports. */
void write_bundle(const ReportBundle& bundle, const std::filesystem::path& dir);
/*! \brief Reads back the per-platform reports written by write_bundle. */
ReportBundle read_bundle(const std::filesystem::path& dir);

std::string summary_text(const ReportBundle& bundle);

}  // namespace booster::report

#endif  // BOOSTER_REPORT_EXPERIMENT_H_
