/*!
 * Copyright 2026 by Contributors
 * \file work_trace.h
 * \brief Per-vertex record of the work done while training, consumed by the
 *  timing simulator and the baseline models.
 */
#ifndef BOOSTER_GBT_WORK_TRACE_H_
#define BOOSTER_GBT_WORK_TRACE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "booster/data/dataset.h"

namespace booster::gbt {

inline constexpr std::uint32_t kGradBytes = 16;     ///< one (g, h) pair in DRAM
inline constexpr std::uint32_t kPointerBytes = 4;   ///< one record index

/*! \brief Training steps that appear in a trace. Step 4 (gradients) is folded into step 5. */
enum class Step : std::uint8_t { kBin = 1, kSplit = 2, kPartition = 3, kEvaluate = 5 };

struct TraceEvent {
  std::uint32_t tree{0};
  std::uint32_t vertex{0};     ///< breadth-first node id in the finished tree
  std::uint32_t depth{0};
  Step step{Step::kBin};
  std::uint64_t records{0};    ///< records touched
  std::uint32_t fields{0};     ///< fields touched per record
  std::uint64_t row_blocks{0};   ///< distinct 64-byte blocks of the row-major array
  std::uint64_t col_blocks{0};   ///< distinct 64-byte blocks of one column
  std::uint64_t grad_blocks{0};  ///< distinct 64-byte blocks of the gradient stream
  bool contiguous{false};      ///< the subset is every record
  std::uint64_t bin_updates{0};
  std::uint64_t bins_scanned{0};
  std::uint64_t node_visits{0};  ///< internal nodes visited (step 5)
  std::uint32_t max_path{0};
  std::uint32_t fields_used{0};  ///< distinct fields referenced by the tree (step 5)

  bool operator==(const TraceEvent&) const = default;
};

struct WorkTrace {
  std::uint64_t n_records{0};
  std::uint32_t n_fields{0};
  std::uint32_t record_stride{0};
  std::uint32_t block_bytes{data::kBlockBytes};
  std::vector<std::uint32_t> field_bins;  ///< n_bins per field
  std::uint32_t n_trees{0};
  std::uint32_t max_depth{0};
  std::vector<TraceEvent> events;

  [[nodiscard]] std::uint64_t total_bins() const;
  [[nodiscard]] std::vector<TraceEvent> step_events(Step step) const;
  /*! \brief Sum of `records` over events of one step. */
  [[nodiscard]] std::uint64_t records_touched(Step step) const;

  bool operator==(const WorkTrace&) const = default;
};

/*! \brief Header of a trace for a dataset (no events). */
WorkTrace trace_header(const data::QuantizedDataset& dataset);

/*! \brief Fills the block counters of `ev` for a sorted record subset. */
void count_blocks(TraceEvent& ev, std::span<const std::uint32_t> records, std::uint64_t n_records,
                  std::uint32_t record_stride, std::uint32_t block_bytes);

/*! \brief Data bytes read from the dataset by one event in a given layout. */
std::uint64_t data_bytes(const TraceEvent& ev, const WorkTrace& trace, data::Layout layout);

/*! \brief Key-value text form; one `trace` line then one `event` line per event. */
void write_trace(const WorkTrace& trace, std::ostream& os);
WorkTrace read_trace(std::istream& is);
void save_trace(const WorkTrace& trace, const std::string& path);
WorkTrace load_trace(const std::string& path);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_WORK_TRACE_H_
