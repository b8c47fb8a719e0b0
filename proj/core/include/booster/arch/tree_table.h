/*!
 * Copyright 2026 by Contributors
 * \file tree_table.h
 * \brief One tree flattened into a BU SRAM for traversal.
 */
#ifndef BOOSTER_ARCH_TREE_TABLE_H_
#define BOOSTER_ARCH_TREE_TABLE_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "booster/arch/booster_config.h"
#include "booster/data/schema.h"
#include "booster/gbt/tree.h"

namespace booster::arch {

struct TreeEntry {
  bool is_leaf{true};
  std::uint16_t field{0};  ///< index into TreeTable::field_remap
  std::uint8_t bin_boundary{0};
  bool missing_goes_left{false};
  std::uint16_t left{0};
  std::uint16_t right{0};
  float weight{0.0F};
  bool operator==(const TreeEntry&) const = default;
};

struct TreeTable {
  std::vector<TreeEntry> entries;
  std::vector<std::uint32_t> field_remap;   ///< renumbered id -> original field id, ascending
  std::vector<std::uint8_t> missing_bins;   ///< per renumbered field
  std::uint32_t entry_bytes{16};

  [[nodiscard]] std::uint32_t bytes() const { return static_cast<std::uint32_t>(entries.size()) * entry_bytes; }
  /*! \brief The fields a BU receives for one record, in renumbered order. */
  [[nodiscard]] std::vector<std::uint8_t> project(std::span<const std::uint8_t> record) const;
  /*! \brief Entry index of the leaf reached by a projected record. */
  [[nodiscard]] std::size_t traverse(std::span<const std::uint8_t> projected) const;
  /*! \brief Internal entries visited by a projected record. */
  [[nodiscard]] std::uint32_t path_length(std::span<const std::uint8_t> projected) const;
};

/*! \brief Throws CapacityError if the tree does not fit one SRAM. */
TreeTable encode_tree_table(const gbt::Tree& tree, const data::Schema& schema, const BoosterConfig& config);

void dump(const TreeTable& table, std::ostream& os);

}  // namespace booster::arch

#endif  // BOOSTER_ARCH_TREE_TABLE_H_
