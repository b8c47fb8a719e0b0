/*!
 * Copyright 2026 by Contributors
 * \file split.cc
 */
#include "booster/gbt/split.h"

namespace booster::gbt {

double structure_score(double G, double H, double lambda) { return G * G / (H + lambda); }

double leaf_weight(const BinStats& stats, double lambda) {
  const double denom = stats.H + lambda;
  return denom > 0.0 ? -stats.G / denom : 0.0;
}

double split_gain(const BinStats& left, const BinStats& right, const BinStats& parent, const SplitParams& params) {
  return 0.5 * (structure_score(left.G, left.H, params.lambda) + structure_score(right.G, right.H, params.lambda) -
                structure_score(parent.G, parent.H, params.lambda)) -
         params.gamma;
}

std::optional<SplitCandidate> find_best_split(const HistogramSet& histograms, const BinStats& parent_stats,
                                              const SplitParams& params) {
  std::optional<SplitCandidate> best;
  double best_gain = 0.0;
  for (const auto& hist : histograms) {
    const auto& bins = hist.bins;
    if (bins.size() < 2) continue;
    const std::size_t missing = bins.size() - 1;
    const BinStats& miss = bins[missing];
    BinStats left_values;
    for (std::size_t b = 0; b < missing; ++b) {
      left_values += bins[b];
      for (const bool missing_left : {false, true}) {
        BinStats left = left_values;
        if (missing_left) left += miss;
        const BinStats right{parent_stats.count - left.count, parent_stats.G - left.G, parent_stats.H - left.H};
        if (left.count == 0 || right.count == 0 || left.count > parent_stats.count) continue;
        if (left.H + params.lambda <= 0.0 || right.H + params.lambda <= 0.0) continue;
        const double gain = split_gain(left, right, parent_stats, params);
        if (gain > best_gain) {
          best_gain = gain;
          best = SplitCandidate{{hist.field_id, static_cast<std::uint32_t>(b), missing_left}, gain, left, right};
        }
      }
    }
  }
  return best;
}

std::uint64_t bins_scanned(const HistogramSet& histograms) {
  std::uint64_t n = 0;
  for (const auto& h : histograms) n += h.bins.size();
  return n;
}

}  // namespace booster::gbt
