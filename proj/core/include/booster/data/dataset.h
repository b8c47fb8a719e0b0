/*!
 * Copyright 2026 by Contributors
 * \file dataset.h
 * \brief Quantized dataset held in both row-major blocks and per-field columns.
 */
#ifndef BOOSTER_DATA_DATASET_H_
#define BOOSTER_DATA_DATASET_H_

#include <cstdint>
#include <span>
#include <vector>

#include "booster/data/bin_map.h"
#include "booster/data/raw_table.h"
#include "booster/data/schema.h"

namespace booster::data {

inline constexpr std::uint32_t kBlockBytes = 64;

/*! \brief First- and second-order gradient statistics of one record. */
struct GradPair {
  double g{0.0};
  double h{0.0};
  bool operator==(const GradPair&) const = default;
};

/*! \brief Where a step reads its bin indices from. */
enum class Layout : std::uint8_t { kRowMajor = 0, kColumnMajor = 1 };

const char* to_string(Layout layout);

/*!
 * \brief Bytes between consecutive records in the row-major section.
 *
 * Records of at most half a block share a block two at a time; larger records
 * are padded up to a whole number of blocks.
 */
std::uint32_t record_stride(std::uint32_t record_bytes, std::uint32_t block_bytes = kBlockBytes);

/*!
 * \brief Immutable quantized dataset.
 *
 * row_blocks holds record r at byte offset r * record_stride(), one byte per
 * field. columns[f][r] duplicates the same bin index. grad_buffer is kept as
 * its own contiguous stream.
 */
class QuantizedDataset {
 public:
  QuantizedDataset() = default;
  QuantizedDataset(Schema schema, std::vector<BinMap> bin_maps, std::vector<std::uint8_t> row_blocks,
                   std::vector<std::vector<std::uint8_t>> columns, std::vector<double> labels,
                   std::vector<GradPair> grad_buffer, std::uint32_t block_bytes = kBlockBytes);

  [[nodiscard]] std::size_t n_records() const { return labels_.size(); }
  [[nodiscard]] std::size_t n_fields() const { return schema_.size(); }
  [[nodiscard]] const Schema& schema() const { return schema_; }
  [[nodiscard]] const std::vector<BinMap>& bin_maps() const { return bin_maps_; }
  [[nodiscard]] std::uint32_t block_bytes() const { return block_bytes_; }
  [[nodiscard]] std::uint32_t record_bytes() const { return static_cast<std::uint32_t>(n_fields()); }
  [[nodiscard]] std::uint32_t record_stride() const { return stride_; }

  [[nodiscard]] std::span<const std::uint8_t> row(std::size_t r) const {
    return {row_blocks_.data() + r * stride_, n_fields()};
  }
  [[nodiscard]] std::span<const std::uint8_t> column(std::size_t f) const { return columns_[f]; }
  [[nodiscard]] std::uint8_t bin(std::size_t r, std::size_t f, Layout layout) const {
    return layout == Layout::kRowMajor ? row_blocks_[r * stride_ + f] : columns_[f][r];
  }
  [[nodiscard]] std::span<const std::uint8_t> row_blocks() const { return row_blocks_; }
  [[nodiscard]] const std::vector<std::vector<std::uint8_t>>& columns() const { return columns_; }
  [[nodiscard]] std::span<const double> labels() const { return labels_; }
  [[nodiscard]] std::span<const GradPair> grad_buffer() const { return grad_buffer_; }

  /*! \brief Copy of this dataset with a different gradient stream. */
  [[nodiscard]] QuantizedDataset with_gradients(std::vector<GradPair> grads) const;

  /*! \brief Throws InvariantError if the two layouts disagree anywhere. */
  void check_layouts() const;

  bool operator==(const QuantizedDataset&) const = default;

 private:
  Schema schema_;
  std::vector<BinMap> bin_maps_;
  std::uint32_t block_bytes_{kBlockBytes};
  std::uint32_t stride_{kBlockBytes / 2};
  std::vector<std::uint8_t> row_blocks_;
  std::vector<std::vector<std::uint8_t>> columns_;
  std::vector<double> labels_;
  std::vector<GradPair> grad_buffer_;
};

/*! \brief Builds one BinMap per field: quantiles for numeric, identity for categorical. */
std::vector<BinMap> build_bin_maps(const RawTable& table, const Schema& schema);

/*!
 * \brief Quantizes a raw table into both layouts.
 *
 * Throws InvalidArgument naming (field, record) on a categorical code outside
 * [0, n_categories), a kind mismatch, or a field needing more than 256 bins.
 */
QuantizedDataset quantize_dataset(const RawTable& table, const Schema& schema,
                                  const std::vector<BinMap>& bin_maps);

/*! \brief Convenience: schema from the table, bin maps, then quantize. */
/*! \brief `factor` back-to-back copies of every record, bin maps unchanged. */
QuantizedDataset replicate(const QuantizedDataset& dataset, std::size_t factor);

QuantizedDataset quantize(const RawTable& table, std::uint32_t max_bins = kDefaultMaxBins);

}  // namespace booster::data

#endif  // BOOSTER_DATA_DATASET_H_
