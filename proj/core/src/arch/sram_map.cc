/*!
 * Copyright 2026 by Contributors
 * \file sram_map.cc
 */
#include "booster/arch/sram_map.h"

#include <algorithm>
#include <ostream>

#include "booster/error.h"

namespace booster::arch {

void BoosterConfig::validate() const {
  if (n_clusters == 0 || bus_per_cluster == 0 || sram_bytes == 0 || bin_entry_bytes == 0 || bus_per_link == 0 ||
      block_bytes == 0 || bu_cycles_per_field == 0 || tree_entry_bytes == 0 || tree_node_cycles == 0 ||
      !(clock_ghz > 0.0)) {
    throw InvalidArgument("BoosterConfig: all parameters must be positive");
  }
  if (bin_entry_bytes > sram_bytes) throw InvalidArgument("BoosterConfig: bin entry larger than an SRAM");
}

const char* to_string(MapStrategy s) { return s == MapStrategy::kGroupByField ? "group_by_field" : "naive_pack"; }

MapStrategy map_strategy_from_string(const std::string& s) {
  if (s == "group_by_field" || s == "group") return MapStrategy::kGroupByField;
  if (s == "naive_pack" || s == "naive") return MapStrategy::kNaivePack;
  throw InvalidArgument("unknown mapping strategy '" + s + "'");
}

SramMap::SramMap(MapStrategy strategy, std::uint32_t bin_entry_bytes, std::vector<FieldSlice> slices,
                 std::uint32_t n_fields)
    : strategy_(strategy), slices_(std::move(slices)) {
  field_first_slice_.assign(n_fields + 1, slices_.size());
  std::uint32_t expect_field = 0, expect_bin = 0;
  for (std::size_t i = 0; i < slices_.size(); ++i) {
    const auto& s = slices_[i];
    if (s.field_id != expect_field) {
      if (s.field_id != expect_field + 1 || s.bin_begin != 0) throw InvariantError("SramMap: fields out of order");
      expect_field = s.field_id;
      expect_bin = 0;
    }
    if (s.bin_begin != expect_bin || s.bin_end <= s.bin_begin) throw InvariantError("SramMap: bins not contiguous");
    if (field_first_slice_[s.field_id] == slices_.size()) field_first_slice_[s.field_id] = i;
    expect_bin = s.bin_end;
    if (s.bu >= bus_.size()) bus_.resize(s.bu + 1);
    auto& occ = bus_[s.bu];
    if (occ.fields.empty() || occ.fields.back() != s.field_id) occ.fields.push_back(s.field_id);
    occ.bytes_used += (s.bin_end - s.bin_begin) * bin_entry_bytes;
  }
  for (std::uint32_t f = 0; f < n_fields; ++f) {
    if (field_first_slice_[f] == slices_.size()) throw InvariantError("SramMap: field without bins");
  }
}

std::uint32_t SramMap::max_fields_hosted() const {
  std::size_t m = 0;
  for (const auto& b : bus_) m = std::max(m, b.fields.size());
  return static_cast<std::uint32_t>(m);
}

std::pair<std::uint32_t, std::uint32_t> SramMap::field_bus(std::uint32_t field) const {
  const auto first = field_first_slice_.at(field);
  const auto last = field_first_slice_.at(field + 1) - 1;
  return {slices_[first].bu, slices_[last].bu + 1};
}

std::uint32_t SramMap::bu_of(std::uint32_t field, std::uint32_t bin) const {
  for (auto i = field_first_slice_.at(field); i < field_first_slice_.at(field + 1); ++i) {
    if (bin >= slices_[i].bin_begin && bin < slices_[i].bin_end) return slices_[i].bu;
  }
  throw InvalidArgument("SramMap: bin " + std::to_string(bin) + " of field " + std::to_string(field) +
                        " is not mapped");
}

std::vector<std::uint32_t> SramMap::replay(std::span<const std::uint8_t> bins) const {
  if (bins.size() + 1 != field_first_slice_.size()) throw InvalidArgument("SramMap::replay: wrong record width");
  std::vector<std::uint32_t> touches(bus_.size(), 0);
  for (std::uint32_t f = 0; f < bins.size(); ++f) ++touches[bu_of(f, bins[f])];
  return touches;
}

namespace {

void check_aggregate(const data::Schema& schema, const BoosterConfig& cfg) {
  const std::uint64_t required = schema.total_bins() * std::uint64_t{cfg.bin_entry_bytes};
  const std::uint64_t available = std::uint64_t{cfg.total_bus()} * cfg.sram_bytes;
  if (required > available) {
    throw CapacityError("histogram needs " + std::to_string(required) + " bytes of SRAM but only " +
                        std::to_string(available) + " are available");
  }
}

}  // namespace

SramMap map_group_by_field(const data::Schema& schema, const BoosterConfig& cfg) {
  cfg.validate();
  check_aggregate(schema, cfg);
  const std::uint32_t cap = cfg.bins_per_sram();
  std::vector<FieldSlice> slices;
  std::uint32_t bu = 0;
  for (const auto& f : schema.fields()) {
    for (std::uint32_t b = 0; b < f.n_bins(); b += cap) {
      slices.push_back({f.field_id, b, std::min(f.n_bins(), b + cap), bu++, 0});
    }
  }
  if (bu > cfg.total_bus() && !cfg.field_partitioning) {
    throw CapacityError("group-by-field mapping needs " + std::to_string(bu) + " BUs but only " +
                        std::to_string(cfg.total_bus()) + " exist");
  }
  return SramMap(MapStrategy::kGroupByField, cfg.bin_entry_bytes, std::move(slices),
                 static_cast<std::uint32_t>(schema.size()));
}

SramMap map_naive_pack(const data::Schema& schema, const BoosterConfig& cfg) {
  cfg.validate();
  check_aggregate(schema, cfg);
  const std::uint32_t cap = cfg.bins_per_sram();
  std::vector<FieldSlice> slices;
  std::uint32_t bu = 0, used = 0;
  for (const auto& f : schema.fields()) {
    std::uint32_t b = 0;
    while (b < f.n_bins()) {
      if (used == cap) {
        ++bu;
        used = 0;
      }
      const std::uint32_t take = std::min(cap - used, f.n_bins() - b);
      slices.push_back({f.field_id, b, b + take, bu, used * cfg.bin_entry_bytes});
      used += take;
      b += take;
    }
  }
  return SramMap(MapStrategy::kNaivePack, cfg.bin_entry_bytes, std::move(slices),
                 static_cast<std::uint32_t>(schema.size()));
}

SramMap make_map(MapStrategy strategy, const data::Schema& schema, const BoosterConfig& config) {
  return strategy == MapStrategy::kGroupByField ? map_group_by_field(schema, config) : map_naive_pack(schema, config);
}

void dump(const SramMap& map, std::ostream& os) {
  os << "sram_map strategy=" << to_string(map.strategy()) << " bus_used=" << map.bus_used()
     << " max_fields_hosted=" << map.max_fields_hosted() << '\n';
  for (const auto& s : map.slices()) {
    os << "slice field=" << s.field_id << " bins=" << s.bin_begin << ".." << s.bin_end << " bu=" << s.bu
       << " offset=" << s.offset_bytes << '\n';
  }
}

}  // namespace booster::arch
