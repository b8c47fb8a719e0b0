/*!
 * Copyright 2026 by Contributors
 * \file booster_config.h
 * \brief Hardware parameters of the accelerator.
 */
#ifndef BOOSTER_ARCH_BOOSTER_CONFIG_H_
#define BOOSTER_ARCH_BOOSTER_CONFIG_H_

#include <cstdint>

namespace booster::arch {

struct BoosterConfig {
  std::uint32_t n_clusters{50};
  std::uint32_t bus_per_cluster{64};
  std::uint32_t sram_bytes{2048};
  /// Bytes of one histogram bin in a BU SRAM. Eight fits a 256-bin field in 2 KB.
  std::uint32_t bin_entry_bytes{8};
  std::uint32_t bus_per_link{16};
  double clock_ghz{1.0};
  std::uint32_t block_bytes{64};
  std::uint32_t bu_cycles_per_field{8};
  std::uint32_t tree_entry_bytes{16};
  std::uint32_t tree_node_cycles{1};  ///< SRAM access per visited tree vertex
  bool field_partitioning{true};      ///< multiple binning passes when fields outnumber BUs
  bool fetch_grads_in_step1{false};  ///< charge gradient reads to step 1

  [[nodiscard]] std::uint32_t total_bus() const { return n_clusters * bus_per_cluster; }
  [[nodiscard]] std::uint32_t bins_per_sram() const { return sram_bytes / bin_entry_bytes; }
  /// Cycles for a record to traverse every BU on a link.
  [[nodiscard]] std::uint32_t fill_cycles() const { return total_bus() / bus_per_link; }
  [[nodiscard]] std::uint32_t tree_entries_per_sram() const { return sram_bytes / tree_entry_bytes; }
  void validate() const;
};

}  // namespace booster::arch

#endif  // BOOSTER_ARCH_BOOSTER_CONFIG_H_
