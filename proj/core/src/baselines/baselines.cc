/*!
 * Copyright 2026 by Contributors
 * \file baselines.cc
 */
#include "booster/baselines/baselines.h"

#include <algorithm>
#include <cmath>

#include "booster/error.h"

namespace booster::baselines {

using sim::Pattern;
using sim::StepCost;
using sim::StepKind;

const char* to_string(BaselineKind k) {
  switch (k) {
    case BaselineKind::kIdeal32:
      return "ideal32";
    case BaselineKind::kIdealGpu:
      return "ideal_gpu";
    case BaselineKind::kInterRecord:
      return "inter_record";
    case BaselineKind::kSequential:
      return "sequential";
  }
  return "?";
}

BaselineKind baseline_kind_from_string(const std::string& s) {
  for (auto k : {BaselineKind::kIdeal32, BaselineKind::kIdealGpu, BaselineKind::kInterRecord,
                 BaselineKind::kSequential}) {
    if (s == to_string(k)) return k;
  }
  throw InvalidArgument("unknown baseline '" + s + "'");
}

BaselineConfig BaselineConfig::ideal32() { return {}; }

BaselineConfig BaselineConfig::ideal_gpu() {
  BaselineConfig c;
  c.kind = BaselineKind::kIdealGpu;
  c.parallelism = 64;
  return c;
}

BaselineConfig BaselineConfig::inter_record() {
  BaselineConfig c;
  c.kind = BaselineKind::kInterRecord;
  c.parallelism = 0;
  c.clock_ghz = 1.0;
  return c;
}

BaselineConfig BaselineConfig::sequential() {
  BaselineConfig c;
  c.kind = BaselineKind::kSequential;
  c.parallelism = 1;
  return c;
}

BaselineConfig BaselineConfig::of(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::kIdeal32:
      return ideal32();
    case BaselineKind::kIdealGpu:
      return ideal_gpu();
    case BaselineKind::kInterRecord:
      return inter_record();
    case BaselineKind::kSequential:
      return sequential();
  }
  return ideal32();
}

void BaselineConfig::validate() const {
  if (kind != BaselineKind::kInterRecord && parallelism == 0) {
    throw InvalidArgument("BaselineConfig: parallelism must be >= 1");
  }
  if (!(clock_ghz > 0.0) || !(ir_bytes_per_bin > 0.0)) throw InvalidArgument("BaselineConfig: rates must be positive");
}

double ir_copy_bytes(std::uint64_t total_bins, const BaselineConfig& cfg) {
  return static_cast<double>(total_bins) * cfg.ir_bytes_per_bin;
}

std::uint32_t effective_parallelism(std::uint64_t total_bins, const BaselineConfig& cfg) {
  cfg.validate();
  if (cfg.kind != BaselineKind::kInterRecord) return cfg.parallelism;
  const double copy = ir_copy_bytes(total_bins, cfg);
  auto fit = static_cast<std::uint64_t>(std::floor(static_cast<double>(cfg.ir_sram_bytes) / copy));
  if (cfg.parallelism > 0) fit = std::min<std::uint64_t>(fit, cfg.parallelism);
  if (fit == 0) {
    throw InfeasibleError("inter-record histogram copy needs " + std::to_string(static_cast<std::uint64_t>(copy)) +
                          " bytes but only " + std::to_string(cfg.ir_sram_bytes) + " bytes of SRAM exist");
  }
  return static_cast<std::uint32_t>(fit);
}

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

struct Model {
  const sim::StepTrace& t;
  const BaselineConfig& cfg;
  const sim::DramConfig& dram;
  double p;

  void read(StepCost& c, std::uint64_t bytes, Pattern pat, double density = 1.0) const {
    const auto r = sim::dram_stream_cycles(bytes, pat, dram, cfg.clock_ghz, density);
    c.dram_cycles += r.cycles;
    c.row_hits += r.row_hits;
    c.row_misses += r.row_misses;
    c.bytes_read += bytes;
  }
  void write(StepCost& c, std::uint64_t bytes) const {
    const auto r = sim::dram_stream_cycles(bytes, Pattern::kContiguous, dram, cfg.clock_ghz);
    c.dram_cycles += r.cycles;
    c.row_hits += r.row_hits;
    c.row_misses += r.row_misses;
    c.bytes_written += bytes;
  }
  void rows(StepCost& c, const gbt::TraceEvent& ev) const {
    if (ev.contiguous) {
      read(c, ev.records * t.record_stride, Pattern::kContiguous);
    } else {
      read(c, ev.records * gbt::kPointerBytes, Pattern::kContiguous);
      read(c, ev.row_blocks * t.block_bytes, Pattern::kScatteredBlocks,
           sim::block_density(ev.row_blocks, ceil_div(t.n_records * t.record_stride, t.block_bytes)));
    }
  }
  StepCost finish(StepCost c, double ops) const {
    c.invocations = 1;
    c.compute_cycles = ops / p;
    c.cycles = std::max(c.compute_cycles, c.dram_cycles);
    return c;
  }

  StepCost step1(const gbt::TraceEvent& ev) const {
    StepCost c;
    if (ev.records == 0) return finish(c, 0.0);
    rows(c, ev);
    if (cfg.fetch_grads_in_step1) {
      if (ev.contiguous) {
        read(c, ev.records * gbt::kGradBytes, Pattern::kContiguous);
      } else {
        read(c, ev.grad_blocks * t.block_bytes, Pattern::kScatteredBlocks,
             sim::block_density(ev.grad_blocks, ceil_div(t.n_records * gbt::kGradBytes, t.block_bytes)));
      }
    }
    // Private histograms per worker, summed in a fixed order afterwards.
    const double reduce_ops = (p - 1.0) * static_cast<double>(t.total_bins());
    c.sram_accesses = ev.bin_updates * 2 + static_cast<std::uint64_t>(reduce_ops);
    return finish(c, static_cast<double>(ev.bin_updates) * cfg.ops.bin_update + reduce_ops);
  }

  StepCost step3(const gbt::TraceEvent& ev) const {
    StepCost c;
    if (ev.records == 0) return finish(c, 0.0);
    rows(c, ev);
    write(c, ev.records * gbt::kPointerBytes);
    c.sram_accesses = ev.records;
    return finish(c, static_cast<double>(ev.records) * cfg.ops.predicate);
  }

  StepCost step5(const gbt::TraceEvent& ev) const {
    StepCost c;
    if (ev.records == 0) return finish(c, 0.0);
    rows(c, ev);
    read(c, ev.records * gbt::kGradBytes, Pattern::kContiguous);
    write(c, ev.records * gbt::kGradBytes);
    c.sram_accesses = ev.node_visits + ev.records;
    return finish(c, static_cast<double>(ev.node_visits) * cfg.ops.node_visit +
                         static_cast<double>(ev.records) * cfg.ops.grad_update);
  }
};

}  // namespace

sim::CycleReport baseline_step_cycles(const sim::StepTrace& trace, const BaselineConfig& cfg,
                                      const sim::DramConfig& dram, const sim::HostConfig& host) {
  dram.validate();
  const std::uint32_t p = effective_parallelism(trace.total_bins(), cfg);
  sim::HostConfig h = host;
  h.cores = std::min(host.cores, p);
  const Model m{trace, cfg, dram, static_cast<double>(p)};
  sim::CycleReport r;
  r.platform = to_string(cfg.kind);
  r.workload = sim::workload_id(trace);
  r.clock_ghz = cfg.clock_ghz;
  r.note = "parallelism " + std::to_string(p);
  r.per_tree.resize(trace.n_trees);
  for (const auto& ev : trace.events) {
    switch (ev.step) {
      case gbt::Step::kBin:
        r.add(StepKind::kStep1, m.step1(ev), ev.tree);
        break;
      case gbt::Step::kSplit:
        r.add(StepKind::kStep2Host, sim::host_step2(ev, h, cfg.clock_ghz), ev.tree);
        break;
      case gbt::Step::kPartition:
        r.add(StepKind::kStep3, m.step3(ev), ev.tree);
        break;
      case gbt::Step::kEvaluate:
        r.add(StepKind::kStep5, m.step5(ev), ev.tree);
        break;
    }
  }
  return r;
}

sim::CycleReport baseline_inference(const sim::InferenceProfile& profile, const BaselineConfig& cfg,
                                    const sim::DramConfig& dram) {
  cfg.validate();
  dram.validate();
  const double p = cfg.kind == BaselineKind::kInterRecord ? (cfg.parallelism ? cfg.parallelism : 1) : cfg.parallelism;
  sim::CycleReport r;
  r.platform = to_string(cfg.kind);
  r.workload = "infer_n" + std::to_string(profile.n_records) + "_t" + std::to_string(profile.mean_path.size());
  r.clock_ghz = cfg.clock_ghz;
  StepCost c;
  c.invocations = 1;
  const auto rd = sim::dram_stream_cycles(profile.n_records * profile.record_stride, Pattern::kContiguous, dram,
                                          cfg.clock_ghz);
  c.dram_cycles = rd.cycles;
  c.row_hits = rd.row_hits;
  c.row_misses = rd.row_misses;
  c.bytes_read = profile.n_records * profile.record_stride;
  double per_record = 0.0, accesses = 0.0;
  for (double m : profile.mean_path) {
    per_record += m * cfg.ops.node_visit + cfg.ops.leaf;
    accesses += m + 1.0;
  }
  c.compute_cycles = static_cast<double>(profile.n_records) * per_record / p;
  c.cycles = std::max(c.compute_cycles, c.dram_cycles);
  c.sram_accesses = static_cast<std::uint64_t>(std::llround(accesses * static_cast<double>(profile.n_records)));
  r.add(StepKind::kInference, c, 0);
  return r;
}

}  // namespace booster::baselines
