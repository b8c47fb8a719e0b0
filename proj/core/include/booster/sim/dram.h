/*!
 * Copyright 2026 by Contributors
 * \file dram.h
 * \brief Analytic DRAM bandwidth model with row-buffer effects.
 */
#ifndef BOOSTER_SIM_DRAM_H_
#define BOOSTER_SIM_DRAM_H_

#include <cstdint>
#include <string>

namespace booster::sim {

struct DramConfig {
  std::uint32_t channels{24};
  std::uint32_t banks_per_channel{16};
  std::uint32_t row_bytes{1024};
  std::uint32_t t_cas{12};
  std::uint32_t t_rp{12};
  std::uint32_t t_rcd{12};
  std::uint32_t t_ras{28};
  double mem_clock_ghz{1.0};
  std::uint32_t bus_bytes_per_clock{32};
  double sustained_gbps{400.0};
  std::uint32_t block_bytes{64};

  [[nodiscard]] double peak_gbps() const { return channels * bus_bytes_per_clock * mem_clock_ghz; }
  [[nodiscard]] std::uint32_t blocks_per_row() const { return row_bytes / block_bytes; }
  /*! \brief Memory clocks one block occupies the channel bus. */
  [[nodiscard]] std::uint32_t t_burst() const { return block_bytes / bus_bytes_per_clock; }
  void validate() const;
};

enum class Pattern : std::uint8_t { kContiguous = 0, kScatteredBlocks = 1, kScatteredColumnSpans = 2 };
const char* to_string(Pattern p);

struct DramResult {
  double cycles{0.0};  ///< in the requesting clock domain
  std::uint64_t row_hits{0};
  std::uint64_t row_misses{0};
};

/*! \brief Expected blocks read per activated row when a `density` fraction of blocks is read. */
double blocks_per_open_row(double density, const DramConfig& dram);

/*!
 * \brief Fraction of sustained bandwidth achieved when `blocks_per_row`
 *  blocks of each opened DRAM row are read before it is closed.
 */
double row_efficiency(double blocks_per_row, const DramConfig& dram);

/*!
 * \brief Fraction of sustained bandwidth for an in-order stream that reads
 *  each block of an array independently with probability `density`. Sparse
 *  streams also lose bank overlap because skipped rows leave banks idle.
 */
double scatter_efficiency(double density, const DramConfig& dram);

/*!
 * \brief Time to move `bytes` with a given pattern, in cycles of a clock at
 *  `clock_ghz`.
 *
 * `density` is the fraction of the touched array's blocks actually read and
 * sets how many blocks share a row activation. For column spans `bytes` is
 * the useful byte count and `blocks` the 64-byte bursts that carry it; for
 * the other patterns `blocks` may be 0 and is derived from `bytes`.
 */
DramResult dram_stream_cycles(std::uint64_t bytes, Pattern pattern, const DramConfig& dram, double clock_ghz,
                              double density = 1.0, std::uint64_t blocks = 0);

}  // namespace booster::sim

#endif  // BOOSTER_SIM_DRAM_H_
