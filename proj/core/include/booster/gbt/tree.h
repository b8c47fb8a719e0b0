/*!
 * Copyright 2026 by Contributors
 * \file tree.h
 * \brief Regression trees over bin indices, and their ensembles.
 */
#ifndef BOOSTER_GBT_TREE_H_
#define BOOSTER_GBT_TREE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "booster/data/dataset.h"
#include "booster/gbt/gradients.h"
#include "booster/gbt/split.h"

namespace booster::gbt {

struct Node {
  bool is_leaf{true};
  Predicate predicate;       ///< internal nodes only
  std::int32_t left{-1};
  std::int32_t right{-1};
  double weight{0.0};        ///< leaf value, learning rate already applied
  std::uint64_t n_records{0};
  std::uint32_t depth{0};

  bool operator==(const Node&) const = default;
};

/*!
 * \brief Node 0 is the root; nodes are numbered breadth-first so trees grown
 *  in either order compare equal.
 */
class Tree {
 public:
  Tree() : nodes_(1) {}
  explicit Tree(std::vector<Node> nodes);

  [[nodiscard]] const std::vector<Node>& nodes() const { return nodes_; }
  [[nodiscard]] const Node& node(std::size_t i) const { return nodes_[i]; }
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] std::uint32_t depth() const;
  [[nodiscard]] std::size_t n_leaves() const;
  /*! \brief Sorted distinct field ids used by predicates. */
  [[nodiscard]] std::vector<std::uint32_t> fields_used() const;

  /*! \brief Leaf reached by a record given as one bin per field. */
  [[nodiscard]] std::size_t leaf_index(std::span<const std::uint8_t> bins, const data::Schema& schema) const;
  /*! \brief Number of internal nodes visited on the way to the leaf. */
  [[nodiscard]] std::uint32_t path_length(std::span<const std::uint8_t> bins, const data::Schema& schema) const;

  /*! \brief Renumbers nodes breadth-first from the root. */
  [[nodiscard]] Tree canonical() const;

  bool operator==(const Tree&) const = default;

 private:
  std::vector<Node> nodes_;
};

struct Ensemble {
  double base_score{0.0};
  double learning_rate{0.3};
  Loss loss{Loss::kSquaredError};
  std::vector<Tree> trees;

  [[nodiscard]] std::uint32_t max_depth() const;
  bool operator==(const Ensemble&) const = default;
};

/*! \brief base_score + sum of the leaf weights reached in every tree (a margin for logistic). */
double predict(const Ensemble& ensemble, std::span<const std::uint8_t> bins, const data::Schema& schema);
double predict(const Ensemble& ensemble, const data::QuantizedDataset& dataset, std::size_t record);
std::vector<double> batch_predict(const Ensemble& ensemble, const data::QuantizedDataset& dataset);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_TREE_H_
