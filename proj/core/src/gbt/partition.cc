/*!
 * Copyright 2026 by Contributors
 * \file partition.cc
 */
#include "booster/gbt/partition.h"

#include "booster/error.h"

namespace booster::gbt {

Partition partition_records(std::span<const std::uint32_t> records, const Predicate& predicate,
                            const data::QuantizedDataset& dataset, data::Layout layout) {
  const std::size_t f = predicate.field_id;
  if (f >= dataset.n_fields()) throw InvalidArgument("partition_records: predicate field out of range");
  const std::uint32_t missing = dataset.schema()[f].missing_bin();
  Partition out;
  if (layout == data::Layout::kColumnMajor) {
    const auto col = dataset.column(f);
    for (std::uint32_t r : records) {
      (predicate.goes_left(col[r], missing) ? out.true_set : out.false_set).push_back(r);
    }
  } else {
    for (std::uint32_t r : records) {
      (predicate.goes_left(dataset.row(r)[f], missing) ? out.true_set : out.false_set).push_back(r);
    }
  }
  return out;
}

}  // namespace booster::gbt
