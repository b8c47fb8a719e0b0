#include <gtest/gtest.h>

#include "booster/baselines/baselines.h"
#include "booster/error.h"
#include "booster/gbt/trainer.h"
#include "booster/sim/booster_sim.h"
#include "helpers.h"

namespace booster {
namespace {

using baselines::BaselineConfig;
using baselines::BaselineKind;
using sim::StepKind;

struct Run {
  data::QuantizedDataset ds;
  gbt::TrainResult train;
};

Run higgs_run(std::size_t n, std::uint32_t trees = 3) {
  Run r{data::quantize(data::synth_dataset(data::analog_spec("higgs", n))), {}};
  gbt::TrainConfig cfg;
  cfg.n_trees = trees;
  cfg.max_depth = 6;
  r.train = gbt::train(r.ds, cfg);
  return r;
}

sim::CycleReport run_baseline(const Run& r, BaselineKind k) {
  return baselines::baseline_step_cycles(r.train.trace, BaselineConfig::of(k), {}, {});
}

TEST(Baselines, KindNamesRoundtrip) {
  for (auto k : {BaselineKind::kIdeal32, BaselineKind::kIdealGpu, BaselineKind::kInterRecord, BaselineKind::kSequential}) {
    EXPECT_EQ(baselines::baseline_kind_from_string(baselines::to_string(k)), k);
  }
  EXPECT_THROW(baselines::baseline_kind_from_string("tpu"), InvalidArgument);
}

TEST(Baselines, SequentialAcceleratedShareGrowsWithRecords) {
  // Step 2 scans a fixed number of bins per vertex, so its share shrinks as records grow.
  auto accel_share = [](std::size_t n) {
    auto r = higgs_run(n, 2);
    auto seq = run_baseline(r, BaselineKind::kSequential);
    EXPECT_EQ(seq.note, "parallelism 1");
    return seq.share(StepKind::kStep1) + seq.share(StepKind::kStep3) + seq.share(StepKind::kStep5);
  };
  const double small = accel_share(10'000), large = accel_share(100'000);
  EXPECT_LT(small, large);
  EXPECT_GT(large, 0.5);
}

TEST(Baselines, GpuOverIdeal32InRange) {
  auto r = higgs_run(100'000, 2);
  auto c32 = run_baseline(r, BaselineKind::kIdeal32);
  auto gpu = run_baseline(r, BaselineKind::kIdealGpu);
  const double speedup = c32.seconds() / gpu.seconds();
  EXPECT_GT(speedup, 1.0);
  EXPECT_LE(speedup, 2.0);
  for (auto k : sim::kAllStepKinds) EXPECT_LE(gpu.step(k).cycles, c32.step(k).cycles * (1 + 1e-12)) << to_string(k);
}

TEST(Baselines, InterRecordCopyCounts) {
  const auto higgs = data::Schema::numeric(28).total_bins();
  const auto mq = data::Schema::numeric(46).total_bins();
  EXPECT_EQ(baselines::effective_parallelism(higgs, BaselineConfig::inter_record()), 271U);
  EXPECT_EQ(baselines::effective_parallelism(mq, BaselineConfig::inter_record()), 165U);
  auto capped = BaselineConfig::inter_record();
  capped.parallelism = 100;
  EXPECT_EQ(baselines::effective_parallelism(higgs, capped), 100U);
  EXPECT_THROW(baselines::effective_parallelism(3'000'000, BaselineConfig::inter_record()), InfeasibleError);
}

TEST(Baselines, InterRecordDegeneratesToIdeal32) {
  auto r = higgs_run(20'000, 2);
  auto ir = BaselineConfig::inter_record();
  ir.parallelism = 32;
  ir.clock_ghz = 2.2;
  auto a = baselines::baseline_step_cycles(r.train.trace, ir, {}, {});
  auto b = run_baseline(r, BaselineKind::kIdeal32);
  for (auto k : sim::kAllStepKinds) EXPECT_DOUBLE_EQ(a.step(k).cycles, b.step(k).cycles);
}

TEST(Baselines, BoundedByDramAndSequential) {
  auto r = higgs_run(50'000, 2);
  auto seq = run_baseline(r, BaselineKind::kSequential);
  for (auto kind : {BaselineKind::kIdeal32, BaselineKind::kIdealGpu, BaselineKind::kInterRecord}) {
    auto rep = run_baseline(r, kind);
    EXPECT_LE(rep.seconds(), seq.seconds() * (1 + 1e-12)) << baselines::to_string(kind);
    for (auto k : sim::kAllStepKinds) EXPECT_GE(rep.step(k).cycles, rep.step(k).dram_cycles);
  }
}

TEST(Baselines, SameTrafficAsBoosterRowMajor) {
  auto r = higgs_run(20'000, 1);
  auto c32 = run_baseline(r, BaselineKind::kIdeal32);
  auto gpu = run_baseline(r, BaselineKind::kIdealGpu);
  EXPECT_EQ(c32.bytes_read(), gpu.bytes_read());
  EXPECT_EQ(c32.bytes_written(), gpu.bytes_written());
}

TEST(Baselines, InferenceScalesWithPathLength) {
  sim::InferenceProfile deep{100'000, 32, std::vector<double>(500, 6.0), 6};
  sim::InferenceProfile shallow{100'000, 32, std::vector<double>(500, 2.0), 2};
  auto d = baselines::baseline_inference(deep, BaselineConfig::ideal32(), {});
  auto s = baselines::baseline_inference(shallow, BaselineConfig::ideal32(), {});
  EXPECT_GT(d.total_cycles(), s.total_cycles());
  EXPECT_DOUBLE_EQ(d.step(StepKind::kInference).compute_cycles, 100'000.0 * 500 * 25 / 32);
}

}  // namespace
}  // namespace booster
