/*!
 * Copyright 2026 by Contributors
 * \file partition.h
 */
#ifndef BOOSTER_GBT_PARTITION_H_
#define BOOSTER_GBT_PARTITION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "booster/data/dataset.h"
#include "booster/gbt/split.h"

namespace booster::gbt {

struct Partition {
  std::vector<std::uint32_t> true_set;   ///< predicate true: goes left
  std::vector<std::uint32_t> false_set;  ///< goes right
};

/*!
 * \brief Stable split of `records` by `predicate`. With the column-major
 *  layout only columns[predicate.field_id] is read.
 */
Partition partition_records(std::span<const std::uint32_t> records, const Predicate& predicate,
                            const data::QuantizedDataset& dataset, data::Layout layout = data::Layout::kColumnMajor);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_PARTITION_H_
