// Discrete-event DRAM timing: per-bank open rows, per-channel in-order data bus.
#ifndef BOOSTER_TESTS_ORACLES_DRAM_EVENT_SIM_H_
#define BOOSTER_TESTS_ORACLES_DRAM_EVENT_SIM_H_

#include <algorithm>
#include <cstdint>
#include <vector>

#include "booster/sim/dram.h"

namespace booster::oracle {

struct EventSimResult {
  double mem_clocks{0.0};
  std::uint64_t hits{0};
  std::uint64_t misses{0};
  // Bytes per memory clock summed over channels.
  [[nodiscard]] double bandwidth(std::uint64_t bytes) const { return bytes / mem_clocks; }
};

// `blocks` are block indices of one array, in issue order. Rows interleave
// across channels first, then banks.
inline EventSimResult event_sim(const std::vector<std::uint64_t>& blocks, const sim::DramConfig& d) {
  struct Bank {
    std::int64_t open_row{-1};
    double act_time{-1e18};
    double free_at{0.0};  // earliest next ACT/CAS
    double last_data_end{0.0};
  };
  struct Channel {
    std::vector<Bank> banks;
    double bus_free{0.0};
  };
  std::vector<Channel> ch(d.channels);
  for (auto& c : ch) c.banks.resize(d.banks_per_channel);
  const std::uint64_t per_row = d.blocks_per_row();
  const double burst = d.t_burst();
  EventSimResult res;
  for (auto blk : blocks) {
    const std::uint64_t row = blk / per_row;
    auto& c = ch[row % d.channels];
    auto& bank = c.banks[(row / d.channels) % d.banks_per_channel];
    double cas;
    if (bank.open_row == static_cast<std::int64_t>(row)) {
      ++res.hits;
      cas = bank.free_at;
    } else {
      ++res.misses;
      double act = bank.free_at;
      if (bank.open_row >= 0) {
        const double pre = std::max(bank.act_time + d.t_ras, bank.last_data_end);
        act = std::max(act, pre + d.t_rp);
      }
      bank.open_row = static_cast<std::int64_t>(row);
      bank.act_time = act;
      cas = act + d.t_rcd;
    }
    const double start = std::max(cas + d.t_cas, c.bus_free);
    c.bus_free = start + burst;
    bank.free_at = start - d.t_cas + burst;  // next column command once this burst is under way
    bank.last_data_end = c.bus_free;
  }
  for (const auto& c : ch) res.mem_clocks = std::max(res.mem_clocks, c.bus_free);
  return res;
}

}  // namespace booster::oracle

#endif  // BOOSTER_TESTS_ORACLES_DRAM_EVENT_SIM_H_
