/*!
 * Copyright 2026 by Contributors
 * \file tree_table.cc
 */
#include "booster/arch/tree_table.h"

#include <algorithm>
#include <ostream>
#include <string>

#include "booster/error.h"

namespace booster::arch {

std::vector<std::uint8_t> TreeTable::project(std::span<const std::uint8_t> record) const {
  std::vector<std::uint8_t> out(field_remap.size());
  for (std::size_t i = 0; i < field_remap.size(); ++i) out[i] = record[field_remap[i]];
  return out;
}

std::size_t TreeTable::traverse(std::span<const std::uint8_t> projected) const {
  std::size_t i = 0;
  while (!entries[i].is_leaf) {
    const auto& e = entries[i];
    const std::uint8_t bin = projected[e.field];
    const bool left = bin == missing_bins[e.field] ? e.missing_goes_left : bin <= e.bin_boundary;
    i = left ? e.left : e.right;
  }
  return i;
}

std::uint32_t TreeTable::path_length(std::span<const std::uint8_t> projected) const {
  std::uint32_t n = 0;
  std::size_t i = 0;
  while (!entries[i].is_leaf) {
    const auto& e = entries[i];
    const std::uint8_t bin = projected[e.field];
    const bool left = bin == missing_bins[e.field] ? e.missing_goes_left : bin <= e.bin_boundary;
    i = left ? e.left : e.right;
    ++n;
  }
  return n;
}

TreeTable encode_tree_table(const gbt::Tree& tree, const data::Schema& schema, const BoosterConfig& config) {
  config.validate();
  if (tree.size() > config.tree_entries_per_sram()) {
    throw CapacityError("tree with " + std::to_string(tree.size()) + " vertices needs " +
                        std::to_string(tree.size() * config.tree_entry_bytes) + " bytes; one SRAM holds " +
                        std::to_string(config.sram_bytes));
  }
  TreeTable t;
  t.entry_bytes = config.tree_entry_bytes;
  t.field_remap = tree.fields_used();
  for (auto f : t.field_remap) t.missing_bins.push_back(static_cast<std::uint8_t>(schema[f].missing_bin()));
  for (const auto& n : tree.nodes()) {
    TreeEntry e;
    e.is_leaf = n.is_leaf;
    e.weight = static_cast<float>(n.weight);
    if (!n.is_leaf) {
      const auto it = std::lower_bound(t.field_remap.begin(), t.field_remap.end(), n.predicate.field_id);
      e.field = static_cast<std::uint16_t>(it - t.field_remap.begin());
      e.bin_boundary = static_cast<std::uint8_t>(n.predicate.bin_boundary);
      e.missing_goes_left = n.predicate.missing_goes_left;
      e.left = static_cast<std::uint16_t>(n.left);
      e.right = static_cast<std::uint16_t>(n.right);
    }
    t.entries.push_back(e);
  }
  return t;
}

void dump(const TreeTable& table, std::ostream& os) {
  os << "tree_table entries=" << table.entries.size() << " bytes=" << table.bytes() << " remap=";
  for (std::size_t i = 0; i < table.field_remap.size(); ++i) os << (i ? "," : "") << table.field_remap[i];
  os << '\n';
  for (std::size_t i = 0; i < table.entries.size(); ++i) {
    const auto& e = table.entries[i];
    os << "entry " << i;
    if (e.is_leaf) {
      os << " leaf weight=" << e.weight << '\n';
    } else {
      os << " field=" << e.field << " boundary=" << static_cast<int>(e.bin_boundary)
         << " missing=" << (e.missing_goes_left ? "left" : "right") << " left=" << e.left << " right=" << e.right
         << '\n';
    }
  }
}

}  // namespace booster::arch
