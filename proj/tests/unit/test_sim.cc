#include <gtest/gtest.h>

#include <sstream>

#include "booster/arch/sram_map.h"
#include "booster/error.h"
#include "booster/gbt/trainer.h"
#include "booster/sim/booster_sim.h"
#include "helpers.h"

namespace booster {
namespace {

using arch::BoosterConfig;
using gbt::Step;
using sim::DramConfig;
using sim::HostConfig;
using sim::StepKind;

gbt::TraceEvent subset_event(const sim::StepTrace& t, Step step, std::uint64_t records, std::uint32_t fields) {
  // Every other record: one row block per record pair at stride 32, one column block per 32 records.
  gbt::TraceEvent ev;
  ev.step = step;
  ev.records = records;
  ev.fields = fields;
  ev.contiguous = false;
  ev.row_blocks = records * t.record_stride * 2 / t.block_bytes;
  ev.col_blocks = (records * 2 + t.block_bytes - 1) / t.block_bytes;
  ev.grad_blocks = records;
  return ev;
}

TEST(Step1, EmptySubsetCostsFill) {
  auto schema = data::Schema::numeric(64);
  auto t = sim::synthetic_trace(schema, 1000);
  gbt::TraceEvent ev;
  auto c = sim::sim_step1(ev, t, arch::map_group_by_field(schema, {}), {}, {});
  EXPECT_EQ(c.cycles, 200.0);
  EXPECT_EQ(c.bytes_read, 0U);
}

TEST(Step1, SixtyFourFieldStreamIsBalanced) {
  auto schema = data::Schema::numeric(64);
  auto t = sim::synthetic_trace(schema, 10'000'000);
  ASSERT_EQ(t.record_stride, 64U);
  auto ev = sim::full_pass_event(t, Step::kBin);
  BoosterConfig cfg;
  auto c = sim::sim_step1(ev, t, arch::map_group_by_field(schema, cfg), cfg, {});
  EXPECT_DOUBLE_EQ(c.dram_cycles, 10e6 * 64 / 400);
  EXPECT_LE(c.compute_cycles, c.dram_cycles);
  EXPECT_DOUBLE_EQ(c.cycles, c.dram_cycles + 200);
  EXPECT_GE(c.bu_busy / c.bu_capacity, 0.99);
  EXPECT_EQ(c.bytes_read, 640'000'000U);
}

TEST(Step1, NaivePackSerializesThreeFields) {
  std::vector<data::FieldKind> kinds(64, data::FieldKind::kCategorical);
  std::vector<std::uint32_t> cats(64, 84);  // 85 bins, three fields per 255-bin SRAM
  auto schema = data::Schema::make(kinds, cats, 256);
  auto t = sim::synthetic_trace(schema, 1'000'000);
  auto ev = sim::full_pass_event(t, Step::kBin);
  BoosterConfig cfg;
  cfg.sram_bytes = 255 * 8;
  auto naive = arch::map_naive_pack(schema, cfg);
  auto group = arch::map_group_by_field(schema, cfg);
  ASSERT_EQ(naive.max_fields_hosted(), 3U);
  const auto pn = sim::plan_step1(naive, cfg), pg = sim::plan_step1(group, cfg);
  EXPECT_EQ(pn.cycles_per_record, 3 * pg.cycles_per_record);
  const auto cn = sim::sim_step1(ev, t, naive, cfg, {});
  const auto cg = sim::sim_step1(ev, t, group, cfg, {});
  EXPECT_DOUBLE_EQ(cn.compute_cycles, 3 * cg.compute_cycles);
}

TEST(Step1, CrossoverAtDefaultsIs3200) {
  EXPECT_EQ(sim::step1_crossover_bus(BoosterConfig{}, DramConfig{}), 3200U);
}

TEST(Step1, FieldPartitioningAddsPasses) {
  BoosterConfig cfg;
  cfg.n_clusters = 1;
  cfg.bus_per_cluster = 16;
  cfg.bin_entry_bytes = 4;
  auto schema = data::Schema::numeric(40, 100);
  auto plan = sim::plan_step1(arch::map_group_by_field(schema, cfg), cfg);
  EXPECT_EQ(plan.passes, 3U);
  cfg.field_partitioning = false;
  EXPECT_THROW(arch::map_group_by_field(schema, cfg), CapacityError);
}

TEST(Step3, LayoutByteAccounting) {
  auto schema = data::Schema::numeric(64);
  auto t = sim::synthetic_trace(schema, 20'000'000);
  auto ev = subset_event(t, Step::kPartition, 10'000'000, 1);
  ev.row_blocks = 10'000'000;  // one 64-byte record per touched block
  BoosterConfig cfg;
  auto row = sim::sim_step3(ev, t, data::Layout::kRowMajor, cfg, {});
  auto col = sim::sim_step3(ev, t, data::Layout::kColumnMajor, cfg, {});
  const std::uint64_t ptr = 10'000'000ULL * 4;
  EXPECT_EQ(row.bytes_read, ptr + 640'000'000ULL);
  EXPECT_EQ(col.bytes_read, ptr + 10'000'000ULL);
  EXPECT_EQ(row.bytes_written, ptr);
  EXPECT_EQ(col.bytes_written, ptr);
  EXPECT_LT(col.cycles, row.cycles);
  const double max_ratio = static_cast<double>(row.bytes_read + row.bytes_written) / (col.bytes_read + col.bytes_written) /
                           sim::scatter_efficiency(0.5, {});
  EXPECT_LE(row.cycles / col.cycles, max_ratio);
}

TEST(Step3, EmptyAndRootCases) {
  auto schema = data::Schema::numeric(28);
  auto t = sim::synthetic_trace(schema, 1'000'000);
  gbt::TraceEvent empty;
  empty.step = Step::kPartition;
  EXPECT_EQ(sim::sim_step3(empty, t, data::Layout::kColumnMajor, {}, {}).cycles, 200.0);
  auto root = sim::full_pass_event(t, Step::kPartition);
  auto c = sim::sim_step3(root, t, data::Layout::kColumnMajor, {}, {});
  EXPECT_EQ(c.bytes_read, 1'000'000U);
  EXPECT_DOUBLE_EQ(c.dram_cycles, (1e6 + 4e6) / 400);
}

TEST(Step5, SingleLeafMovesOnlyGradients) {
  auto t = sim::synthetic_trace(data::Schema::numeric(28), 1'000'000);
  gbt::TraceEvent ev;
  ev.step = Step::kEvaluate;
  ev.records = 1'000'000;
  ev.contiguous = true;
  auto c = sim::sim_step5(ev, t, data::Layout::kColumnMajor, {}, {});
  EXPECT_EQ(c.bytes_read, 16'000'000U);
  EXPECT_EQ(c.bytes_written, 16'000'000U);
}

TEST(Step5, DepthSixTreeIsDramBound) {
  auto t = sim::synthetic_trace(data::Schema::numeric(64), 10'000'000);
  gbt::TraceEvent ev;
  ev.step = Step::kEvaluate;
  ev.records = 10'000'000;
  ev.contiguous = true;
  ev.fields_used = 6;
  ev.node_visits = 6 * ev.records;
  ev.max_path = 6;
  BoosterConfig cfg;
  auto c = sim::sim_step5(ev, t, data::Layout::kColumnMajor, cfg, {});
  EXPECT_EQ(c.bytes_read + c.bytes_written, 10'000'000ULL * (6 + 16 + 16));
  EXPECT_GT(c.dram_cycles, c.compute_cycles);
  cfg.n_clusters *= 2;
  const auto doubled = sim::sim_step5(ev, t, data::Layout::kColumnMajor, cfg, {});
  EXPECT_DOUBLE_EQ(doubled.cycles - cfg.fill_cycles(), c.cycles - BoosterConfig{}.fill_cycles());
}

gbt::TrainResult train_small(const data::QuantizedDataset& ds, std::uint32_t trees, std::uint32_t depth) {
  gbt::TrainConfig cfg;
  cfg.n_trees = trees;
  cfg.max_depth = depth;
  return gbt::train(ds, cfg);
}

TEST(SimTraining, SingleLeafStructure) {
  auto t = data::synth_dataset(data::analog_spec("higgs", 2000));
  t.labels.assign(t.labels.size(), 1.0);
  auto ds = data::quantize(t);
  auto r = train_small(ds, 1, 6);
  auto rep = sim::sim_training(r.trace, ds.schema(), {}, {}, {});
  EXPECT_EQ(rep.step(StepKind::kStep1).invocations, 1U);
  EXPECT_EQ(rep.step(StepKind::kStep3).invocations, 0U);
  EXPECT_EQ(rep.step(StepKind::kStep5).invocations, 1U);
  EXPECT_GE(rep.step(StepKind::kStep2Host).invocations, 1U);
  EXPECT_DOUBLE_EQ(rep.total_cycles(), rep.step(StepKind::kStep1).cycles + rep.step(StepKind::kStep2Host).cycles +
                                           rep.step(StepKind::kStep5).cycles);
}

TEST(SimTraining, TotalsAndByteConservation) {
  auto ds = data::quantize(data::synth_dataset(data::analog_spec("higgs", 20000)));
  auto r = train_small(ds, 3, 6);
  auto rep = sim::sim_training(r.trace, ds.schema(), {}, {}, {});
  double sum = 0;
  for (auto k : sim::kAllStepKinds) sum += rep.step(k).cycles;
  EXPECT_DOUBLE_EQ(rep.total_cycles(), sum);
  std::uint64_t expect_read = 0, expect_written = 0;
  for (const auto& ev : r.trace.events) {
    const std::uint64_t ptr = ev.contiguous ? 0 : ev.records * gbt::kPointerBytes;
    switch (ev.step) {
      case Step::kBin:
        if (ev.records) expect_read += ptr + gbt::data_bytes(ev, r.trace, data::Layout::kRowMajor);
        break;
      case Step::kPartition:
        expect_read += ptr + ev.records * ev.fields;
        expect_written += ev.records * gbt::kPointerBytes;
        break;
      case Step::kEvaluate:
        expect_read += ev.records * (ev.fields_used + gbt::kGradBytes);
        expect_written += ev.records * gbt::kGradBytes;
        break;
      default:
        break;
    }
  }
  EXPECT_EQ(rep.bytes_read(), expect_read);
  EXPECT_EQ(rep.bytes_written(), expect_written);
  EXPECT_LE(rep.sram_utilization(), 1.0);
  EXPECT_LE(rep.dram_utilization(), 1.0);
  std::size_t trees_with_work = 0;
  for (const auto& pt : rep.per_tree) trees_with_work += pt[0].invocations > 0;
  EXPECT_EQ(trees_with_work, 3U);
}

TEST(SimTraining, Monotonicity) {
  auto ds = data::quantize(data::synth_dataset(data::analog_spec("higgs", 20000)));
  auto r = train_small(ds, 2, 6);
  double prev = 1e300;
  for (std::uint32_t clusters : {1U, 5U, 10U, 25U, 50U, 100U}) {
    // Fill grows with the BU count; compare steady-state cycles.
    BoosterConfig cfg;
    cfg.n_clusters = clusters;
    auto rep = sim::sim_training(r.trace, ds.schema(), cfg, {}, {});
    double fills = 0;
    for (auto k : {StepKind::kStep1, StepKind::kStep3, StepKind::kStep5}) fills += rep.step(k).invocations * cfg.fill_cycles();
    const double c = rep.total_cycles() - fills;
    EXPECT_LE(c, prev * (1 + 1e-12)) << clusters;
    prev = c;
  }
  prev = 1e300;
  for (double bw : {100.0, 200.0, 400.0, 700.0}) {
    DramConfig d;
    d.sustained_gbps = bw;
    const double c = sim::sim_training(r.trace, ds.schema(), {}, d, {}).total_cycles();
    EXPECT_LE(c, prev * (1 + 1e-12)) << bw;
    prev = c;
  }
  const auto schema = data::Schema::numeric(28);
  prev = 0;
  for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    auto t = sim::synthetic_trace(schema, n);
    const double c = sim::sim_step1(sim::full_pass_event(t, Step::kBin), t, arch::map_group_by_field(schema, {}), {}, {}).cycles;
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(SimTraining, LopsidedSplitsShrinkBinningShare) {
  auto run = [](double skew) {
    data::SynthSpec s;
    s.n_records = 40000;
    s.numeric_fields = 16;
    s.skew = skew;
    auto ds = data::quantize(data::synth_dataset(s));
    auto r = train_small(ds, 3, 6);
    return sim::sim_training(r.trace, ds.schema(), {}, {}, {}).share(StepKind::kStep1);
  };
  EXPECT_LT(run(0.99), run(0.5));
}

TEST(SimTraining, DepthBeyondTreeTableRejected) {
  auto ds = testing::synth_quantized(500, 4);
  auto r = train_small(ds, 1, 7);
  EXPECT_THROW(sim::sim_training(r.trace, ds.schema(), {}, {}, {}), CapacityError);
}

TEST(Inference, SingleStumpIsBroadcastBound) {
  sim::InferenceProfile p{1'000'000, 64, {0.0}, 0};
  auto rep = sim::sim_batch_inference(p, {}, {}, 1);
  const auto& c = rep.step(StepKind::kInference);
  EXPECT_DOUBLE_EQ(c.dram_cycles, 64e6 / 400);
  EXPECT_GE(c.dram_cycles, c.compute_cycles);
}

TEST(Inference, ReplicasScaleThroughput) {
  sim::InferenceProfile p{1'000'000, 64, std::vector<double>(500, 6.0), 6};
  const auto one = sim::sim_batch_inference(p, {}, {}, 1).step(StepKind::kInference);
  const auto six = sim::sim_batch_inference(p, {}, {}, 6).step(StepKind::kInference);
  EXPECT_NEAR(one.compute_cycles / six.compute_cycles, 6.0, 1e-3);
  EXPECT_DOUBLE_EQ(one.compute_cycles, 1e6 * 7);  // six internal vertices and the leaf
  EXPECT_EQ(sim::sim_batch_inference(p, {}, {}, 0).step(StepKind::kInference), six);
  EXPECT_THROW(sim::sim_batch_inference(p, {}, {}, 7), CapacityError);
  sim::InferenceProfile too_many{10, 64, std::vector<double>(3201, 1.0), 1};
  EXPECT_THROW(sim::sim_batch_inference(too_many, {}, {}), CapacityError);
}

TEST(Inference, ProfileMatchesEnginePaths) {
  auto ds = testing::synth_quantized(3000, 8);
  auto r = train_small(ds, 4, 5);
  auto p = sim::profile_inference(r.ensemble, ds);
  ASSERT_EQ(p.mean_path.size(), 4U);
  EXPECT_EQ(p.max_depth, r.ensemble.max_depth());
  for (std::size_t k = 0; k < 4; ++k) {
    double sum = 0;
    for (std::size_t i = 0; i < ds.n_records(); ++i) sum += r.ensemble.trees[k].path_length(ds.row(i), ds.schema());
    EXPECT_DOUBLE_EQ(p.mean_path[k], sum / ds.n_records());
  }
}

TEST(CycleReport, TextRoundtrip) {
  auto ds = data::quantize(data::synth_dataset(data::analog_spec("allstate", 5000)));
  auto r = train_small(ds, 2, 5);
  auto rep = sim::sim_training(r.trace, ds.schema(), {}, {}, {});
  rep.note = "a note with spaces=and%signs";
  std::stringstream ss;
  sim::write_report(rep, ss);
  auto back = sim::read_report(ss);
  EXPECT_EQ(back.platform, rep.platform);
  EXPECT_EQ(back.note, rep.note);
  EXPECT_EQ(back.per_tree.size(), rep.per_tree.size());
  for (auto k : sim::kAllStepKinds) {
    EXPECT_DOUBLE_EQ(back.step(k).cycles, rep.step(k).cycles);
    EXPECT_EQ(back.step(k).bytes_read, rep.step(k).bytes_read);
  }
  std::istringstream bad("report platform=x\nbogus line\n");
  EXPECT_THROW(sim::read_report(bad), FormatError);
}

}  // namespace
}  // namespace booster
