/*!
 * Copyright 2026 by Contributors
 * \file dram.cc
 */
#include "booster/sim/dram.h"

#include <algorithm>
#include <cmath>

#include "booster/error.h"

namespace booster::sim {

void DramConfig::validate() const {
  if (channels == 0 || banks_per_channel == 0 || row_bytes == 0 || t_ras == 0 || bus_bytes_per_clock == 0 ||
      block_bytes == 0 || !(mem_clock_ghz > 0.0) || !(sustained_gbps > 0.0)) {
    throw InvalidArgument("DramConfig: parameters must be positive");
  }
  if (row_bytes % block_bytes != 0 || block_bytes % bus_bytes_per_clock != 0) {
    throw InvalidArgument("DramConfig: row, block and bus widths must divide evenly");
  }
  if (sustained_gbps > peak_gbps()) throw InvalidArgument("DramConfig: sustained bandwidth exceeds peak");
}

const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::kContiguous:
      return "contiguous";
    case Pattern::kScatteredBlocks:
      return "scattered_blocks";
    case Pattern::kScatteredColumnSpans:
      return "scattered_column_spans";
  }
  return "?";
}

namespace {

// Channel time per block when k blocks are read per activated row: the bus
// streams k bursts while the banks cycle rows in parallel. Requests arrive in
// address order, so only the touched fraction of rows in a bank sweep overlap.
double time_per_block(double k, const DramConfig& d, double rows_touched = 1.0) {
  const double burst = d.t_burst();
  const double row_cycle = std::max<double>(d.t_ras, d.t_rcd + k * burst) + d.t_rp;
  const double overlap = std::max(1.0, d.banks_per_channel * rows_touched);
  return std::max(k * burst, row_cycle / overlap) / k;
}

double touched_row_fraction(double density, const DramConfig& d) {
  return 1.0 - std::pow(1.0 - std::clamp(density, 0.0, 1.0), d.blocks_per_row());
}

}  // namespace

double blocks_per_open_row(double density, const DramConfig& dram) {
  const double n = dram.blocks_per_row();
  const double d = std::clamp(density, 0.0, 1.0);
  if (d <= 0.0) return 1.0;
  // Blocks per row given that the row is touched at all, blocks picked independently.
  return std::clamp(n * d / touched_row_fraction(d, dram), 1.0, n);
}

double row_efficiency(double blocks_per_row, const DramConfig& dram) {
  const double full = dram.blocks_per_row();
  const double k = std::clamp(blocks_per_row, 1.0, full);
  return time_per_block(full, dram) / time_per_block(k, dram);
}

double scatter_efficiency(double density, const DramConfig& dram) {
  if (!(density > 0.0)) return row_efficiency(1.0, dram);
  const double full = dram.blocks_per_row();
  const double k = blocks_per_open_row(density, dram);
  return time_per_block(full, dram) / time_per_block(k, dram, touched_row_fraction(density, dram));
}

DramResult dram_stream_cycles(std::uint64_t bytes, Pattern pattern, const DramConfig& dram, double clock_ghz,
                              double density, std::uint64_t blocks) {
  DramResult r;
  if (bytes == 0) return r;
  const double bytes_per_cycle = dram.sustained_gbps / clock_ghz;
  const double k = pattern == Pattern::kContiguous ? dram.blocks_per_row() : blocks_per_open_row(density, dram);
  if (blocks == 0 || pattern != Pattern::kScatteredColumnSpans) blocks = (bytes + dram.block_bytes - 1) / dram.block_bytes;
  const double moved = pattern == Pattern::kScatteredColumnSpans ? static_cast<double>(blocks) * dram.block_bytes
                                                                  : static_cast<double>(bytes);
  const double eff = pattern == Pattern::kContiguous ? 1.0 : scatter_efficiency(density, dram);
  r.cycles = moved / (bytes_per_cycle * eff);
  r.row_misses = static_cast<std::uint64_t>(std::ceil(static_cast<double>(blocks) / k));
  r.row_hits = blocks - std::min(blocks, r.row_misses);
  return r;
}

}  // namespace booster::sim
