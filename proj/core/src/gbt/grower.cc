/*!
 * Copyright 2026 by Contributors
 * \file grower.cc
 */
#include <deque>
#include <numeric>
#include <optional>

#include "booster/error.h"
#include "booster/gbt/histogram.h"
#include "booster/gbt/partition.h"
#include "booster/gbt/trainer.h"

namespace booster::gbt {

namespace {

struct Vertex {
  std::int32_t node{0};
  std::uint32_t depth{0};
  std::vector<std::uint32_t> records;
  BinStats stats;
  std::optional<HistogramSet> hist;
};

class Grower {
 public:
  Grower(const data::QuantizedDataset& ds, std::span<const GradPair> grads, const TrainConfig& cfg,
         std::uint32_t tree, WorkTrace* trace)
      : ds_(ds), grads_(grads), cfg_(cfg), tree_(tree), trace_(trace) {}

  Tree run() {
    Vertex root;
    root.records.resize(ds_.n_records());
    std::iota(root.records.begin(), root.records.end(), 0U);
    nodes_.emplace_back();
    if (cfg_.max_depth > 0 && !root.records.empty()) {
      root.hist = bin(root.records, 0, 0);
      root.stats = root.hist->front().total();
    } else {
      for (auto r : root.records) root.stats.add(grads_[r]);
    }
    if (cfg_.growth_order == GrowthOrder::kLevelWise) {
      std::deque<Vertex> queue;
      queue.push_back(std::move(root));
      while (!queue.empty()) {
        Vertex v = std::move(queue.front());
        queue.pop_front();
        for (auto& c : expand(v)) queue.push_back(std::move(c));
      }
    } else {
      std::vector<Vertex> stack;
      stack.push_back(std::move(root));
      while (!stack.empty()) {
        Vertex v = std::move(stack.back());
        stack.pop_back();
        auto children = expand(v);
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
      }
    }
    return finish();
  }

 private:
  HistogramSet bin(std::span<const std::uint32_t> records, std::int32_t node, std::uint32_t depth) {
    if (trace_) {
      TraceEvent ev;
      ev.tree = tree_;
      ev.vertex = static_cast<std::uint32_t>(node);
      ev.depth = depth;
      ev.step = Step::kBin;
      ev.fields = static_cast<std::uint32_t>(ds_.n_fields());
      count_blocks(ev, records, ds_.n_records(), ds_.record_stride(), ds_.block_bytes());
      ev.bin_updates = records.size() * ds_.n_fields();
      events_.push_back(ev);
    }
    if (cfg_.n_threads > 1) return bin_gradients_sharded(records, ds_, grads_, cfg_.n_threads, cfg_.layout);
    return bin_gradients(records, ds_, grads_, cfg_.layout);
  }

  void make_leaf(const Vertex& v) {
    Node& n = nodes_[static_cast<std::size_t>(v.node)];
    n.is_leaf = true;
    n.weight = leaf_weight(v.stats, cfg_.lambda) * cfg_.learning_rate;
    n.n_records = v.records.size();
    n.depth = v.depth;
  }

  std::vector<Vertex> expand(Vertex& v) {
    const bool splittable = v.depth < cfg_.max_depth && v.records.size() >= 2 && v.stats.H != 0.0 && v.hist;
    if (!splittable) {
      make_leaf(v);
      return {};
    }
    const auto best = find_best_split(*v.hist, v.stats, cfg_.split_params());
    if (trace_) {
      TraceEvent ev;
      ev.tree = tree_;
      ev.vertex = static_cast<std::uint32_t>(v.node);
      ev.depth = v.depth;
      ev.step = Step::kSplit;
      ev.records = v.records.size();
      ev.fields = static_cast<std::uint32_t>(ds_.n_fields());
      ev.bins_scanned = bins_scanned(*v.hist);
      events_.push_back(ev);
    }
    if (!best) {
      make_leaf(v);
      return {};
    }
    auto part = partition_records(v.records, best->predicate, ds_, cfg_.layout);
    if (trace_) {
      TraceEvent ev;
      ev.tree = tree_;
      ev.vertex = static_cast<std::uint32_t>(v.node);
      ev.depth = v.depth;
      ev.step = Step::kPartition;
      ev.fields = 1;
      count_blocks(ev, v.records, ds_.n_records(), ds_.record_stride(), ds_.block_bytes());
      events_.push_back(ev);
    }

    const auto left_id = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    nodes_.emplace_back();
    {
      Node& n = nodes_[static_cast<std::size_t>(v.node)];
      n.is_leaf = false;
      n.predicate = best->predicate;
      n.left = left_id;
      n.right = left_id + 1;
      n.n_records = v.records.size();
      n.depth = v.depth;
    }

    Vertex left{left_id, v.depth + 1, std::move(part.true_set), best->left_stats, std::nullopt};
    Vertex right{left_id + 1, v.depth + 1, std::move(part.false_set), best->right_stats, std::nullopt};
    if (left.depth < cfg_.max_depth) {
      Vertex& small = left.records.size() <= right.records.size() ? left : right;
      Vertex& large = &small == &left ? right : left;
      small.hist = bin(small.records, small.node, small.depth);
      large.hist = subtract_histograms(*v.hist, *small.hist);
    }
    v.hist.reset();
    v.records.clear();
    v.records.shrink_to_fit();
    std::vector<Vertex> out;
    out.push_back(std::move(left));
    out.push_back(std::move(right));
    return out;
  }

  Tree finish() {
    // Breadth-first renumbering, shared by the tree and the trace.
    std::vector<std::int32_t> remap(nodes_.size(), -1);
    std::deque<std::size_t> queue{0};
    std::int32_t next = 0;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      remap[i] = next++;
      if (!nodes_[i].is_leaf) {
        queue.push_back(static_cast<std::size_t>(nodes_[i].left));
        queue.push_back(static_cast<std::size_t>(nodes_[i].right));
      }
    }
    if (trace_) {
      for (auto& ev : events_) ev.vertex = static_cast<std::uint32_t>(remap[ev.vertex]);
      std::stable_sort(events_.begin(), events_.end(), [](const TraceEvent& a, const TraceEvent& b) {
        if (a.vertex != b.vertex) return a.vertex < b.vertex;
        return static_cast<int>(a.step) < static_cast<int>(b.step);
      });
      trace_->events.insert(trace_->events.end(), events_.begin(), events_.end());
    }
    return Tree(nodes_).canonical();
  }

  const data::QuantizedDataset& ds_;
  std::span<const GradPair> grads_;
  const TrainConfig& cfg_;
  std::uint32_t tree_;
  WorkTrace* trace_;
  std::vector<Node> nodes_;
  std::vector<TraceEvent> events_;
};

}  // namespace

Tree grow_tree(const data::QuantizedDataset& dataset, std::span<const GradPair> grads, const TrainConfig& config,
               std::uint32_t tree_index, WorkTrace* trace) {
  config.validate();
  if (grads.size() != dataset.n_records()) throw InvalidArgument("grow_tree: one gradient pair per record required");
  return Grower(dataset, grads, config, tree_index, trace).run();
}

}  // namespace booster::gbt
