/*!
 * Copyright 2026 by Contributors
 * \file split.h
 * \brief Split evaluation over gradient histograms.
 */
#ifndef BOOSTER_GBT_SPLIT_H_
#define BOOSTER_GBT_SPLIT_H_

#include <cstdint>
#include <optional>

#include "booster/gbt/histogram.h"

namespace booster::gbt {

struct SplitParams {
  double lambda{1.0};  ///< L2 penalty on leaf weights
  double gamma{0.0};   ///< complexity cost of adding two children
};

/*!
 * \brief "bin <= boundary goes left"; the missing bin goes left iff
 *  missing_goes_left. The missing bin is always the last bin of the field.
 */
struct Predicate {
  std::uint32_t field_id{0};
  std::uint32_t bin_boundary{0};
  bool missing_goes_left{false};

  [[nodiscard]] bool goes_left(std::uint32_t bin, std::uint32_t missing_bin) const {
    if (bin == missing_bin) return missing_goes_left;
    return bin <= bin_boundary;
  }
  bool operator==(const Predicate&) const = default;
};

struct SplitCandidate {
  Predicate predicate;
  double gain{0.0};
  BinStats left_stats;
  BinStats right_stats;
};

/*! \brief Structure score G^2 / (H + lambda). */
double structure_score(double G, double H, double lambda);

/*! \brief Newton leaf weight -G / (H + lambda), before the learning rate. */
double leaf_weight(const BinStats& stats, double lambda);

/*!
 * \brief 1/2 [score(L) + score(R) - score(parent)] - gamma. The parent term
 *  uses parent_stats so every candidate shares it.
 */
double split_gain(const BinStats& left, const BinStats& right, const BinStats& parent, const SplitParams& params);

/*!
 * \brief Left-to-right cumulative scan of every field.
 *
 * For each value-bin boundary b the left bucket holds bins 0..b; the missing
 * bin is tried on the right first, then on the left. Splits with an empty side
 * are skipped. The first strictly best candidate in (field, boundary,
 * missing-right-first) order wins. Returns nullopt when no gain is positive.
 */
std::optional<SplitCandidate> find_best_split(const HistogramSet& histograms, const BinStats& parent_stats,
                                              const SplitParams& params);

/*! \brief Number of bins the scan visits, for host cost accounting. */
std::uint64_t bins_scanned(const HistogramSet& histograms);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_SPLIT_H_
