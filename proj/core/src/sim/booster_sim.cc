/*!
 * Copyright 2026 by Contributors
 * \file booster_sim.cc
 */
#include "booster/sim/booster_sim.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "booster/error.h"

namespace booster::sim {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

struct Traffic {
  const DramConfig& dram;
  double clock;
  StepCost& cost;

  void read(std::uint64_t bytes, Pattern p, double density = 1.0, std::uint64_t blocks = 0) {
    account(bytes, p, density, blocks);
    cost.bytes_read += bytes;
  }
  void write(std::uint64_t bytes) {
    account(bytes, Pattern::kContiguous, 1.0, 0);
    cost.bytes_written += bytes;
  }

 private:
  void account(std::uint64_t bytes, Pattern p, double density, std::uint64_t blocks) {
    const auto r = dram_stream_cycles(bytes, p, dram, clock, density, blocks);
    cost.dram_cycles += r.cycles;
    cost.row_hits += r.row_hits;
    cost.row_misses += r.row_misses;
  }
};

std::uint64_t total_row_blocks(const StepTrace& t) { return ceil_div(t.n_records * t.record_stride, t.block_bytes); }
std::uint64_t total_col_blocks(const StepTrace& t) { return ceil_div(t.n_records, t.block_bytes); }
std::uint64_t total_grad_blocks(const StepTrace& t) {
  return ceil_div(t.n_records * gbt::kGradBytes, t.block_bytes);
}

// Reads the records of a subset from the row-major array.
void read_rows(Traffic& tr, const gbt::TraceEvent& ev, const StepTrace& t) {
  if (ev.contiguous) {
    tr.read(ev.records * t.record_stride, Pattern::kContiguous);
  } else {
    tr.read(ev.row_blocks * t.block_bytes, Pattern::kScatteredBlocks,
            block_density(ev.row_blocks, total_row_blocks(t)));
  }
}

}  // namespace

double block_density(std::uint64_t touched, std::uint64_t total_blocks) {
  if (total_blocks == 0) return 1.0;
  return std::min(1.0, static_cast<double>(touched) / static_cast<double>(total_blocks));
}

Step1Plan plan_step1(const arch::SramMap& map, const arch::BoosterConfig& cfg) {
  Step1Plan p;
  p.bus_per_replica = map.bus_used();
  p.cycles_per_record = map.max_fields_hosted() * cfg.bu_cycles_per_field;
  if (p.bus_per_replica > cfg.total_bus()) {
    if (!cfg.field_partitioning) {
      throw CapacityError("histogram needs " + std::to_string(p.bus_per_replica) + " BUs but only " +
                          std::to_string(cfg.total_bus()) + " exist");
    }
    p.passes = static_cast<std::uint32_t>(ceil_div(p.bus_per_replica, cfg.total_bus()));
    p.replicas = 1;
  } else {
    const auto clusters = static_cast<std::uint32_t>(ceil_div(p.bus_per_replica, cfg.bus_per_cluster));
    p.replicas = cfg.n_clusters / clusters;
  }
  return p;
}

StepCost sim_step1(const gbt::TraceEvent& ev, const StepTrace& trace, const arch::SramMap& map,
                   const arch::BoosterConfig& cfg, const DramConfig& dram, std::uint32_t replicas) {
  StepCost c;
  c.invocations = 1;
  const double fill = cfg.fill_cycles();
  if (ev.records == 0) {
    c.cycles = fill;
    return c;
  }
  Step1Plan plan = plan_step1(map, cfg);
  if (replicas > 0) plan.replicas = std::min(plan.replicas, replicas);
  Traffic tr{dram, cfg.clock_ghz, c};
  for (std::uint32_t pass = 0; pass < plan.passes; ++pass) {
    if (!ev.contiguous) tr.read(ev.records * gbt::kPointerBytes, Pattern::kContiguous);
    read_rows(tr, ev, trace);
    if (cfg.fetch_grads_in_step1) {
      if (ev.contiguous) {
        tr.read(ev.records * gbt::kGradBytes, Pattern::kContiguous);
      } else {
        tr.read(ev.grad_blocks * trace.block_bytes, Pattern::kScatteredBlocks,
                block_density(ev.grad_blocks, total_grad_blocks(trace)));
      }
    }
  }
  c.compute_cycles = static_cast<double>(plan.passes) * static_cast<double>(ceil_div(ev.records, plan.replicas)) *
                     plan.cycles_per_record;
  c.cycles = std::max(c.dram_cycles, c.compute_cycles) + fill;
  c.sram_accesses = ev.records * trace.n_fields * 2;
  c.bu_busy = static_cast<double>(ev.records) * trace.n_fields * cfg.bu_cycles_per_field;
  const double active = std::min<double>(cfg.total_bus(), static_cast<double>(plan.replicas) * plan.bus_per_replica);
  c.bu_capacity = active * c.cycles;
  return c;
}

StepCost sim_step3(const gbt::TraceEvent& ev, const StepTrace& trace, data::Layout layout,
                   const arch::BoosterConfig& cfg, const DramConfig& dram) {
  StepCost c;
  c.invocations = 1;
  const double fill = cfg.fill_cycles();
  if (ev.records == 0) {
    c.cycles = fill;
    return c;
  }
  Traffic tr{dram, cfg.clock_ghz, c};
  if (!ev.contiguous) tr.read(ev.records * gbt::kPointerBytes, Pattern::kContiguous);
  if (layout == data::Layout::kRowMajor) {
    read_rows(tr, ev, trace);
  } else if (ev.contiguous) {
    tr.read(ev.records * ev.fields, Pattern::kContiguous);
  } else {
    tr.read(ev.records * ev.fields, Pattern::kScatteredColumnSpans, block_density(ev.col_blocks, total_col_blocks(trace)),
            ev.col_blocks * ev.fields);
  }
  tr.write(ev.records * gbt::kPointerBytes);
  c.compute_cycles = static_cast<double>(ceil_div(ev.records, cfg.total_bus()));
  c.cycles = std::max(c.dram_cycles, c.compute_cycles) + fill;
  return c;
}

StepCost sim_step5(const gbt::TraceEvent& ev, const StepTrace& trace, data::Layout layout,
                   const arch::BoosterConfig& cfg, const DramConfig& dram) {
  StepCost c;
  c.invocations = 1;
  const double fill = cfg.fill_cycles();
  if (ev.records == 0) {
    c.cycles = fill;
    return c;
  }
  Traffic tr{dram, cfg.clock_ghz, c};
  if (layout == data::Layout::kRowMajor) {
    read_rows(tr, ev, trace);
  } else {
    tr.read(ev.records * ev.fields_used, Pattern::kContiguous);
  }
  tr.read(ev.records * gbt::kGradBytes, Pattern::kContiguous);
  tr.write(ev.records * gbt::kGradBytes);
  const std::uint64_t work = ev.node_visits * cfg.tree_node_cycles + ev.records;
  c.compute_cycles = static_cast<double>(ceil_div(work, cfg.total_bus()));
  c.cycles = std::max(c.dram_cycles, c.compute_cycles) + fill;
  c.sram_accesses = ev.node_visits + ev.records;
  return c;
}

StepCost host_step2(const gbt::TraceEvent& ev, const HostConfig& host, double platform_clock_ghz) {
  StepCost c;
  c.invocations = 1;
  c.compute_cycles = host.to_clock(host.split_cycles(ev.bins_scanned), platform_clock_ghz);
  c.cycles = c.compute_cycles;
  return c;
}

StepCost host_reduction(std::uint64_t copies, std::uint64_t bins, const HostConfig& host, double platform_clock_ghz) {
  StepCost c;
  c.compute_cycles = host.to_clock(host.reduce_cycles(copies, bins), platform_clock_ghz);
  c.cycles = c.compute_cycles;
  return c;
}

gbt::TraceEvent full_pass_event(const StepTrace& t, gbt::Step step) {
  gbt::TraceEvent ev;
  ev.step = step;
  ev.records = t.n_records;
  ev.fields = step == gbt::Step::kPartition ? 1 : t.n_fields;
  ev.contiguous = true;
  ev.row_blocks = total_row_blocks(t);
  ev.col_blocks = total_col_blocks(t);
  ev.grad_blocks = total_grad_blocks(t);
  if (step == gbt::Step::kBin) ev.bin_updates = t.n_records * t.n_fields;
  if (step == gbt::Step::kSplit) ev.bins_scanned = t.total_bins();
  return ev;
}

StepTrace synthetic_trace(const data::Schema& schema, std::uint64_t n_records) {
  StepTrace t;
  t.n_records = n_records;
  t.n_fields = static_cast<std::uint32_t>(schema.size());
  t.record_stride = data::record_stride(t.n_fields);
  for (const auto& f : schema.fields()) t.field_bins.push_back(f.n_bins());
  return t;
}

std::string workload_id(const StepTrace& t) {
  return "n" + std::to_string(t.n_records) + "_f" + std::to_string(t.n_fields) + "_t" + std::to_string(t.n_trees) +
         "_d" + std::to_string(t.max_depth) + "_e" + std::to_string(t.events.size()) + "_v" +
         std::to_string(t.records_touched(gbt::Step::kBin));
}

std::uint32_t best_replicas(const gbt::TraceEvent& ev, const StepTrace& trace, const arch::SramMap& map,
                            const Step1Plan& plan, const arch::BoosterConfig& cfg, const DramConfig& dram,
                            const HostConfig& host) {
  if (ev.records == 0 || plan.replicas <= 1) return 1;
  const double dram_cycles = sim_step1(ev, trace, map, cfg, dram, 1).dram_cycles;
  const double per_copy = host.to_clock(host.reduce_cycles(1, trace.total_bins()), cfg.clock_ghz);
  std::uint32_t best = 1;
  double best_cost = 0.0;
  for (std::uint32_t r = 1; r <= plan.replicas; ++r) {
    const double compute = static_cast<double>(plan.passes) * static_cast<double>(ceil_div(ev.records, r)) *
                           plan.cycles_per_record;
    const double cost = std::max(dram_cycles, compute) + per_copy * r;
    if (r == 1 || cost < best_cost) {
      best = r;
      best_cost = cost;
    }
  }
  return best;
}

CycleReport sim_training(const StepTrace& trace, const data::Schema& schema, const arch::BoosterConfig& cfg,
                         const DramConfig& dram, const HostConfig& host, const BoosterOptions& options) {
  cfg.validate();
  dram.validate();
  if (schema.size() != trace.n_fields) throw InvalidArgument("sim_training: schema does not match the trace");
  const std::uint64_t max_vertices = (std::uint64_t{1} << (trace.max_depth + 1)) - 1;
  if (max_vertices > cfg.tree_entries_per_sram()) {
    throw CapacityError("trees of depth " + std::to_string(trace.max_depth) + " need " +
                        std::to_string(max_vertices * cfg.tree_entry_bytes) + " bytes of tree table; one SRAM holds " +
                        std::to_string(cfg.sram_bytes));
  }
  const auto map = arch::make_map(options.mapping, schema, cfg);
  const auto plan = plan_step1(map, cfg);
  CycleReport r;
  r.platform = "booster";
  r.workload = workload_id(trace);
  r.clock_ghz = cfg.clock_ghz;
  r.per_tree.resize(trace.n_trees);
  for (const auto& ev : trace.events) {
    switch (ev.step) {
      case gbt::Step::kBin: {
        const std::uint32_t replicas = best_replicas(ev, trace, map, plan, cfg, dram, host);
        r.add(StepKind::kStep1, sim_step1(ev, trace, map, cfg, dram, replicas), ev.tree);
        if (ev.records > 0) r.add(StepKind::kStep2Host, host_reduction(replicas, trace.total_bins(), host, r.clock_ghz), ev.tree);
        break;
      }
      case gbt::Step::kSplit:
        r.add(StepKind::kStep2Host, host_step2(ev, host, r.clock_ghz), ev.tree);
        break;
      case gbt::Step::kPartition:
        r.add(StepKind::kStep3, sim_step3(ev, trace, options.layout, cfg, dram), ev.tree);
        break;
      case gbt::Step::kEvaluate:
        r.add(StepKind::kStep5, sim_step5(ev, trace, options.layout, cfg, dram), ev.tree);
        break;
    }
  }
  return r;
}

std::uint32_t step1_crossover_bus(const arch::BoosterConfig& cfg, const DramConfig& dram, std::uint32_t n_fields,
                                  std::uint64_t n_records) {
  const auto schema = data::Schema::numeric(n_fields, data::kDefaultMaxBins);
  const auto trace = synthetic_trace(schema, n_records);
  const auto ev = full_pass_event(trace, gbt::Step::kBin);
  arch::BoosterConfig c = cfg;
  for (std::uint32_t clusters = 1; clusters <= 16 * cfg.n_clusters; ++clusters) {
    c.n_clusters = clusters;
    const auto cost = sim_step1(ev, trace, arch::map_group_by_field(schema, c), c, dram);
    if (cost.compute_cycles <= cost.dram_cycles) return c.total_bus();
  }
  throw InvariantError("step 1 stays SRAM-bound for every cluster count tried");
}

InferenceProfile profile_inference(const gbt::Ensemble& ensemble, const data::QuantizedDataset& dataset) {
  InferenceProfile p;
  p.n_records = dataset.n_records();
  p.record_stride = dataset.record_stride();
  p.max_depth = ensemble.max_depth();
  for (const auto& t : ensemble.trees) {
    std::uint64_t visits = 0;
    for (std::size_t r = 0; r < dataset.n_records(); ++r) visits += t.path_length(dataset.row(r), dataset.schema());
    p.mean_path.push_back(dataset.n_records() ? static_cast<double>(visits) / static_cast<double>(dataset.n_records())
                                              : 0.0);
  }
  return p;
}

CycleReport sim_batch_inference(const InferenceProfile& profile, const arch::BoosterConfig& cfg,
                                const DramConfig& dram, std::uint32_t replicas) {
  cfg.validate();
  dram.validate();
  const auto n_trees = static_cast<std::uint32_t>(profile.mean_path.size());
  const std::uint32_t total = cfg.total_bus();
  if (n_trees > total) {
    throw CapacityError(std::to_string(n_trees) + " trees need " + std::to_string(ceil_div(n_trees, total)) +
                        " chips of " + std::to_string(total) + " BUs");
  }
  if (replicas == 0) replicas = n_trees ? total / n_trees : 1;
  if (std::uint64_t{replicas} * n_trees > total) {
    throw CapacityError(std::to_string(replicas) + " replicas of " + std::to_string(n_trees) + " trees exceed " +
                        std::to_string(total) + " BUs");
  }
  CycleReport r;
  r.platform = "booster";
  r.workload = "infer_n" + std::to_string(profile.n_records) + "_t" + std::to_string(n_trees);
  r.clock_ghz = cfg.clock_ghz;
  StepCost c;
  c.invocations = 1;
  Traffic tr{dram, cfg.clock_ghz, c};
  tr.read(profile.n_records * profile.record_stride, Pattern::kContiguous);
  double slowest = 0.0, visits = 0.0;
  for (double m : profile.mean_path) {
    // Vertices read per record, leaf included; a lone leaf is a constant and needs no access.
    const double vertices = m > 0.0 ? m + 1.0 : 0.0;
    slowest = std::max(slowest, vertices * cfg.tree_node_cycles);
    visits += vertices;
  }
  c.compute_cycles = n_trees ? static_cast<double>(ceil_div(profile.n_records, replicas)) * slowest : 0.0;
  c.cycles = std::max(c.dram_cycles, c.compute_cycles) + cfg.fill_cycles();
  c.sram_accesses = static_cast<std::uint64_t>(std::llround(visits * static_cast<double>(profile.n_records)));
  r.add(StepKind::kInference, c, 0);
  return r;
}

}  // namespace booster::sim
