/*!
 * Copyright 2026 by Contributors
 * \file histogram.h
 * \brief Per-field gradient histograms and the smaller-child subtraction.
 */
#ifndef BOOSTER_GBT_HISTOGRAM_H_
#define BOOSTER_GBT_HISTOGRAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "booster/data/dataset.h"

namespace booster::gbt {

using data::GradPair;
using data::Layout;
using data::QuantizedDataset;

/*! \brief (count, G, H) of one bin or one record set. */
struct BinStats {
  std::uint64_t count{0};
  double G{0.0};
  double H{0.0};

  void add(const GradPair& gp) {
    ++count;
    G += gp.g;
    H += gp.h;
  }
  BinStats& operator+=(const BinStats& o) {
    count += o.count;
    G += o.G;
    H += o.H;
    return *this;
  }
  bool operator==(const BinStats&) const = default;
};

BinStats operator+(BinStats a, const BinStats& b);

struct Histogram {
  std::uint32_t field_id{0};
  std::vector<BinStats> bins;

  /*! \brief Sum over bins in index order. */
  [[nodiscard]] BinStats total() const;
  bool operator==(const Histogram&) const = default;
};

/*! \brief One histogram per field of the schema. */
using HistogramSet = std::vector<Histogram>;

HistogramSet empty_histograms(const data::Schema& schema);

/*!
 * \brief Bins the gradients of `records`.
 *
 * Each record adds (+1, +g, +h) to exactly one bin per field. Every bin sees
 * its additions in subset order whichever layout is read, so both layouts give
 * bit-identical results.
 */
HistogramSet bin_gradients(std::span<const std::uint32_t> records, const QuantizedDataset& dataset,
                           std::span<const GradPair> grads, Layout layout = Layout::kRowMajor);

/*!
 * \brief Same, with records split into n_shards contiguous ranges binned on
 *  separate threads and reduced in shard order. Counts match the serial
 *  result exactly; G and H agree up to floating-point reassociation.
 */
HistogramSet bin_gradients_sharded(std::span<const std::uint32_t> records, const QuantizedDataset& dataset,
                                   std::span<const GradPair> grads, std::size_t n_shards,
                                   Layout layout = Layout::kRowMajor);

/*!
 * \brief parent - small_child, bin by bin. Throws InvariantError if a count
 *  would go negative or the shapes differ.
 */
HistogramSet subtract_histograms(const HistogramSet& parent, const HistogramSet& small_child);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_HISTOGRAM_H_
