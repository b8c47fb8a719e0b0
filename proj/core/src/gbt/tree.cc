/*!
 * Copyright 2026 by Contributors
 * \file tree.cc
 */
#include "booster/gbt/tree.h"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "booster/error.h"

namespace booster::gbt {

Tree::Tree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw InvalidArgument("Tree: at least one node required");
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    if (n.is_leaf) continue;
    const auto ok = [&](std::int32_t c) { return c > 0 && static_cast<std::size_t>(c) < nodes_.size(); };
    if (!ok(n.left) || !ok(n.right)) throw InvalidArgument("Tree: node " + std::to_string(i) + " has a bad child index");
  }
}

std::uint32_t Tree::depth() const {
  std::uint32_t d = 0;
  for (const auto& n : nodes_) d = std::max(d, n.depth);
  return d;
}

std::size_t Tree::n_leaves() const {
  return static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return n.is_leaf; }));
}

std::vector<std::uint32_t> Tree::fields_used() const {
  std::set<std::uint32_t> s;
  for (const auto& n : nodes_) {
    if (!n.is_leaf) s.insert(n.predicate.field_id);
  }
  return {s.begin(), s.end()};
}

std::size_t Tree::leaf_index(std::span<const std::uint8_t> bins, const data::Schema& schema) const {
  std::size_t i = 0;
  while (!nodes_[i].is_leaf) {
    const auto& p = nodes_[i].predicate;
    i = static_cast<std::size_t>(
        p.goes_left(bins[p.field_id], schema[p.field_id].missing_bin()) ? nodes_[i].left : nodes_[i].right);
  }
  return i;
}

std::uint32_t Tree::path_length(std::span<const std::uint8_t> bins, const data::Schema& schema) const {
  std::uint32_t len = 0;
  std::size_t i = 0;
  while (!nodes_[i].is_leaf) {
    const auto& p = nodes_[i].predicate;
    i = static_cast<std::size_t>(
        p.goes_left(bins[p.field_id], schema[p.field_id].missing_bin()) ? nodes_[i].left : nodes_[i].right);
    ++len;
  }
  return len;
}

Tree Tree::canonical() const {
  std::vector<Node> out;
  out.reserve(nodes_.size());
  std::deque<std::size_t> queue{0};
  std::vector<std::size_t> order;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    order.push_back(i);
    if (!nodes_[i].is_leaf) {
      queue.push_back(static_cast<std::size_t>(nodes_[i].left));
      queue.push_back(static_cast<std::size_t>(nodes_[i].right));
    }
  }
  std::vector<std::int32_t> remap(nodes_.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) remap[order[k]] = static_cast<std::int32_t>(k);
  for (std::size_t i : order) {
    Node n = nodes_[i];
    if (!n.is_leaf) {
      n.left = remap[static_cast<std::size_t>(n.left)];
      n.right = remap[static_cast<std::size_t>(n.right)];
    }
    out.push_back(n);
  }
  return Tree(std::move(out));
}

std::uint32_t Ensemble::max_depth() const {
  std::uint32_t d = 0;
  for (const auto& t : trees) d = std::max(d, t.depth());
  return d;
}

double predict(const Ensemble& ensemble, std::span<const std::uint8_t> bins, const data::Schema& schema) {
  double score = ensemble.base_score;
  for (const auto& t : ensemble.trees) score += t.node(t.leaf_index(bins, schema)).weight;
  return score;
}

double predict(const Ensemble& ensemble, const data::QuantizedDataset& dataset, std::size_t record) {
  return predict(ensemble, dataset.row(record), dataset.schema());
}

std::vector<double> batch_predict(const Ensemble& ensemble, const data::QuantizedDataset& dataset) {
  std::vector<double> out(dataset.n_records(), ensemble.base_score);
  for (const auto& t : ensemble.trees) {
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += t.node(t.leaf_index(dataset.row(r), dataset.schema())).weight;
  }
  return out;
}

}  // namespace booster::gbt
