/*!
 * Copyright 2026 by Contributors
 * \file raw_table.h
 * \brief Un-quantized tabular input, one vector per column.
 */
#ifndef BOOSTER_DATA_RAW_TABLE_H_
#define BOOSTER_DATA_RAW_TABLE_H_

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "booster/data/schema.h"

namespace booster::data {

inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) { return std::isnan(v); }

/*!
 * \brief One raw column. Categorical columns hold integer category codes
 *  stored as doubles; NaN marks a missing cell in either kind.
 */
struct RawColumn {
  std::string name;
  FieldKind kind{FieldKind::kNumeric};
  std::uint32_t n_categories{0};
  std::vector<double> values;
};

struct RawTable {
  std::vector<RawColumn> columns;
  std::vector<double> labels;

  [[nodiscard]] std::size_t n_rows() const { return labels.size(); }
  [[nodiscard]] std::size_t n_columns() const { return columns.size(); }

  /*! \brief Schema implied by the column kinds, numeric fields get max_bins. */
  [[nodiscard]] Schema schema(std::uint32_t max_bins = kDefaultMaxBins) const;

  /*! \brief Pure replication: rows repeated `factor` times, labels untouched. */
  [[nodiscard]] RawTable replicate(std::size_t factor) const;

  bool operator==(const RawTable& other) const;
};

}  // namespace booster::data

#endif  // BOOSTER_DATA_RAW_TABLE_H_
