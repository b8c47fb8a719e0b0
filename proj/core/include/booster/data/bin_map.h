/*!
 * Copyright 2026 by Contributors
 * \file bin_map.h
 * \brief Quantile discretization of numeric fields.
 */
#ifndef BOOSTER_DATA_BIN_MAP_H_
#define BOOSTER_DATA_BIN_MAP_H_

#include <cstdint>
#include <span>
#include <vector>

namespace booster::data {

/*!
 * \brief Maps a real value to a bin index.
 *
 * Value bin i holds (upper_boundaries[i-1], upper_boundaries[i]]. Values above
 * the last boundary clamp into the last value bin. NaN is the missing marker
 * and goes to missing_bin, which is always the last bin of the field.
 */
struct BinMap {
  std::uint32_t field_id{0};
  std::vector<double> upper_boundaries;
  std::uint32_t missing_bin{0};
  /*! \brief Set when the field had no finite value at all. */
  bool all_missing{false};

  [[nodiscard]] std::uint32_t n_value_bins() const {
    return static_cast<std::uint32_t>(upper_boundaries.size());
  }
  [[nodiscard]] std::uint32_t bin_of(double value) const;

  bool operator==(const BinMap&) const = default;
};

/*!
 * \brief Builds exact-quantile boundaries from one full sort of the values.
 *
 * At most max_bins - 1 value bins are produced; the missing bin sits at index
 * max_bins - 1. Fields with no more distinct values than value bins get one
 * bin per distinct value.
 */
BinMap build_bin_map(std::span<const double> values, std::uint32_t max_bins,
                     std::uint32_t field_id = 0);

}  // namespace booster::data

#endif  // BOOSTER_DATA_BIN_MAP_H_
