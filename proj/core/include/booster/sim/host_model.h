/*!
 * Copyright 2026 by Contributors
 * \file host_model.h
 * \brief Multicore host that runs split finding and histogram reductions.
 */
#ifndef BOOSTER_SIM_HOST_MODEL_H_
#define BOOSTER_SIM_HOST_MODEL_H_

#include <cstdint>

namespace booster::sim {

struct HostConfig {
  double clock_ghz{2.2};
  std::uint32_t cores{32};
  double cycles_per_bin_scanned{40.0};
  double cycles_per_bin_reduced{1.0};

  /*! \brief Host cycles to evaluate split candidates over `bins` bins. */
  [[nodiscard]] double split_cycles(std::uint64_t bins) const {
    return static_cast<double>(bins) * cycles_per_bin_scanned / cores;
  }
  /*! \brief Host cycles to combine `copies` histogram replicas of `bins` bins. */
  [[nodiscard]] double reduce_cycles(std::uint64_t copies, std::uint64_t bins) const {
    return static_cast<double>(copies) * static_cast<double>(bins) * cycles_per_bin_reduced / cores;
  }
  /*! \brief Host cycles expressed in a clock at `clock` GHz. */
  [[nodiscard]] double to_clock(double host_cycles, double clock) const { return host_cycles * clock / clock_ghz; }
};

}  // namespace booster::sim

#endif  // BOOSTER_SIM_HOST_MODEL_H_
