/*!
 * Copyright 2026 by Contributors
 * \file trainer.cc
 */
#include "booster/gbt/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "booster/error.h"

namespace booster::gbt {

const char* to_string(GrowthOrder order) {
  return order == GrowthOrder::kLevelWise ? "level" : "depth_first";
}

GrowthOrder growth_order_from_string(const std::string& s) {
  if (s == "level" || s == "level_wise") return GrowthOrder::kLevelWise;
  if (s == "depth_first" || s == "vertex") return GrowthOrder::kDepthFirst;
  throw InvalidArgument("unknown growth order '" + s + "'");
}

void TrainConfig::validate() const {
  if (n_trees < 1) throw InvalidArgument("TrainConfig: n_trees must be >= 1");
  if (max_depth < 1 || max_depth > 16) throw InvalidArgument("TrainConfig: max_depth must be in [1, 16]");
  if (!(lambda >= 0.0) || !(gamma >= 0.0)) throw InvalidArgument("TrainConfig: lambda and gamma must be >= 0");
  if (!(learning_rate > 0.0)) throw InvalidArgument("TrainConfig: learning_rate must be > 0");
  if (n_threads == 0) throw InvalidArgument("TrainConfig: n_threads must be >= 1");
}

double initial_score(std::span<const double> labels, Loss loss) {
  if (labels.empty()) return 0.0;
  const double mean = std::accumulate(labels.begin(), labels.end(), 0.0) / static_cast<double>(labels.size());
  if (loss == Loss::kSquaredError) return mean;
  const double p = std::clamp(mean, 1e-6, 1.0 - 1e-6);
  return std::log(p / (1.0 - p));
}

TrainResult train(const data::QuantizedDataset& dataset, const TrainConfig& config) {
  config.validate();
  TrainResult res;
  res.ensemble.loss = config.loss;
  res.ensemble.learning_rate = config.learning_rate;
  res.ensemble.base_score = initial_score(dataset.labels(), config.loss);
  res.trace = trace_header(dataset);
  res.trace.n_trees = config.n_trees;
  res.trace.max_depth = config.max_depth;

  const std::size_t n = dataset.n_records();
  std::vector<double> preds(n, res.ensemble.base_score);
  std::vector<std::uint32_t> all(n);
  std::iota(all.begin(), all.end(), 0U);
  for (std::uint32_t k = 0; k < config.n_trees; ++k) {
    auto gr = compute_gradients(dataset.labels(), preds, config.loss);
    res.loss_history.push_back(gr.total_loss);
    Tree tree = grow_tree(dataset, gr.grads, config, k, &res.trace);

    TraceEvent ev;
    ev.tree = k;
    ev.step = Step::kEvaluate;
    const auto used = tree.fields_used();
    ev.fields = static_cast<std::uint32_t>(used.size());
    ev.fields_used = ev.fields;
    count_blocks(ev, all, n, dataset.record_stride(), dataset.block_bytes());
    for (std::size_t r = 0; r < n; ++r) {
      const auto row = dataset.row(r);
      const auto len = tree.path_length(row, dataset.schema());
      ev.node_visits += len;
      ev.max_path = std::max(ev.max_path, len);
      preds[r] += tree.node(tree.leaf_index(row, dataset.schema())).weight;
    }
    res.trace.events.push_back(ev);
    res.ensemble.trees.push_back(std::move(tree));
  }
  double final_loss = 0.0;
  for (std::size_t r = 0; r < n; ++r) final_loss += loss_value(config.loss, preds[r], dataset.labels()[r]);
  res.loss_history.push_back(final_loss);
  return res;
}

}  // namespace booster::gbt
