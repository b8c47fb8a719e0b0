/*!
 * Copyright 2026 by Contributors
 * \file bin_map.cc
 */
#include "booster/data/bin_map.h"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "booster/data/schema.h"
#include "booster/error.h"

namespace booster::data {

std::uint32_t BinMap::bin_of(double value) const {
  if (std::isnan(value) || upper_boundaries.empty()) return missing_bin;
  auto it = std::lower_bound(upper_boundaries.begin(), upper_boundaries.end(), value);
  if (it == upper_boundaries.end()) --it;
  return static_cast<std::uint32_t>(it - upper_boundaries.begin());
}

BinMap build_bin_map(std::span<const double> values, std::uint32_t max_bins,
                     std::uint32_t field_id) {
  if (max_bins < 2 || max_bins > kMaxBinsPerField) {
    throw InvalidArgument("build_bin_map: max_bins must be in [2, " +
                          std::to_string(kMaxBinsPerField) + "], got " +
                          std::to_string(max_bins));
  }
  BinMap map;
  map.field_id = field_id;
  map.missing_bin = max_bins - 1;

  std::vector<double> sorted;
  sorted.reserve(values.size());
  for (double v : values) {
    if (std::isnan(v)) continue;
    if (!std::isfinite(v)) {
      throw InvalidArgument("build_bin_map: field " + std::to_string(field_id) +
                            " contains an infinite value");
    }
    sorted.push_back(v);
  }
  if (sorted.empty()) {
    map.all_missing = true;
    std::cerr << "warning: field " << field_id << " has no non-missing values\n";
    return map;
  }
  std::sort(sorted.begin(), sorted.end());

  const std::size_t value_bins = max_bins - 1;
  std::vector<double> distinct;
  std::unique_copy(sorted.begin(), sorted.end(), std::back_inserter(distinct));
  if (distinct.size() <= value_bins) {
    map.upper_boundaries = std::move(distinct);
    return map;
  }

  // Bin k ends at the ceil(n*(k+1)/value_bins)-th smallest value.
  const std::size_t n = sorted.size();
  for (std::size_t k = 0; k < value_bins; ++k) {
    const std::size_t rank = (n * (k + 1) + value_bins - 1) / value_bins;
    const double boundary = sorted[rank - 1];
    if (map.upper_boundaries.empty() || boundary > map.upper_boundaries.back()) {
      map.upper_boundaries.push_back(boundary);
    }
  }
  return map;
}

}  // namespace booster::data
