/*!
 * Copyright 2026 by Contributors
 * \file trainer.h
 * \brief Histogram-based gradient boosted tree training.
 */
#ifndef BOOSTER_GBT_TRAINER_H_
#define BOOSTER_GBT_TRAINER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "booster/data/dataset.h"
#include "booster/gbt/gradients.h"
#include "booster/gbt/split.h"
#include "booster/gbt/tree.h"
#include "booster/gbt/work_trace.h"

namespace booster::gbt {

enum class GrowthOrder : std::uint8_t { kLevelWise = 0, kDepthFirst = 1 };
const char* to_string(GrowthOrder order);
GrowthOrder growth_order_from_string(const std::string& s);

struct TrainConfig {
  std::uint32_t n_trees{10};
  std::uint32_t max_depth{6};
  Loss loss{Loss::kSquaredError};
  double lambda{1.0};
  double gamma{0.0};
  double learning_rate{0.3};
  GrowthOrder growth_order{GrowthOrder::kLevelWise};
  data::Layout layout{data::Layout::kColumnMajor};
  std::size_t n_threads{1};  ///< shards for step-1 binning

  void validate() const;
  [[nodiscard]] SplitParams split_params() const { return {lambda, gamma}; }
};

/*!
 * \brief Grows one tree for the given gradients. Events are appended to
 *  `trace` (if non-null) with breadth-first vertex ids.
 */
Tree grow_tree(const data::QuantizedDataset& dataset, std::span<const GradPair> grads, const TrainConfig& config,
               std::uint32_t tree_index = 0, WorkTrace* trace = nullptr);

struct TrainResult {
  Ensemble ensemble;
  WorkTrace trace;
  std::vector<double> loss_history;  ///< total loss before the first tree and after each tree
};

double initial_score(std::span<const double> labels, Loss loss);

TrainResult train(const data::QuantizedDataset& dataset, const TrainConfig& config);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_TRAINER_H_
