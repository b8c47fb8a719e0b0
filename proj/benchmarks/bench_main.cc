/*!
 * Copyright 2026 by Contributors
 * \file bench_main.cc
 * \brief Microbenchmarks for the engine hot paths and the analytic simulator.
 */
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "booster/arch/sram_map.h"
#include "booster/data/synth.h"
#include "booster/gbt/histogram.h"
#include "booster/gbt/split.h"
#include "booster/gbt/trainer.h"
#include "booster/sim/booster_sim.h"
#include "booster/sim/dram.h"

namespace {

using namespace booster;

const data::QuantizedDataset& higgs() {
  static const auto ds = data::quantize(data::synth_dataset(data::analog_spec("higgs", 100'000)));
  return ds;
}

std::vector<data::GradPair> grads(std::size_t n) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0, 1);
  std::uniform_real_distribution<double> h(0.1, 1.0);
  std::vector<data::GradPair> out(n);
  for (auto& p : out) p = {g(rng), h(rng)};
  return out;
}

std::vector<std::uint32_t> all_records(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 0U);
  return r;
}

void BM_BinGradients(benchmark::State& state) {
  const auto& ds = higgs();
  const auto g = grads(ds.n_records());
  const auto recs = all_records(ds.n_records());
  for (auto _ : state) benchmark::DoNotOptimize(gbt::bin_gradients(recs, ds, g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ds.n_records() * ds.n_fields()));
}
BENCHMARK(BM_BinGradients)->Unit(benchmark::kMillisecond);

void BM_FindBestSplit(benchmark::State& state) {
  const auto& ds = higgs();
  const auto g = grads(ds.n_records());
  const auto recs = all_records(ds.n_records());
  const auto hist = gbt::bin_gradients(recs, ds, g);
  gbt::BinStats total;
  for (const auto& p : g) total.add(p);
  for (auto _ : state) benchmark::DoNotOptimize(gbt::find_best_split(hist, total, {1.0, 0.0}));
}
BENCHMARK(BM_FindBestSplit)->Unit(benchmark::kMicrosecond);

void BM_BatchPredict(benchmark::State& state) {
  const auto& ds = higgs();
  gbt::TrainConfig cfg;
  cfg.n_trees = static_cast<std::uint32_t>(state.range(0));
  const auto model = gbt::train(ds, cfg).ensemble;
  for (auto _ : state) benchmark::DoNotOptimize(gbt::batch_predict(model, ds));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ds.n_records()));
}
BENCHMARK(BM_BatchPredict)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_DramStream(benchmark::State& state) {
  const sim::DramConfig dram;
  double density = 1.0 / 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sim::dram_stream_cycles(1ULL << 30, sim::Pattern::kScatteredBlocks, dram, 1.0, density));
    density = density > 0.9 ? 1.0 / 64 : density * 1.01;
  }
}
BENCHMARK(BM_DramStream);

void BM_SimTraining(benchmark::State& state) {
  const auto& ds = higgs();
  gbt::TrainConfig cfg;
  cfg.n_trees = 5;
  const auto trace = gbt::train(ds, cfg).trace;
  for (auto _ : state) benchmark::DoNotOptimize(sim::sim_training(trace, ds.schema(), {}, {}, {}));
}
BENCHMARK(BM_SimTraining)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
