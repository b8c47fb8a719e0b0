/*!
 * Copyright 2026 by Contributors
 * \file sram_map.h
 * \brief Placement of histogram bins in BU SRAMs.
 */
#ifndef BOOSTER_ARCH_SRAM_MAP_H_
#define BOOSTER_ARCH_SRAM_MAP_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "booster/arch/booster_config.h"
#include "booster/data/schema.h"

namespace booster::arch {

enum class MapStrategy : std::uint8_t { kGroupByField = 0, kNaivePack = 1 };
const char* to_string(MapStrategy s);
MapStrategy map_strategy_from_string(const std::string& s);

/*! \brief Bins [bin_begin, bin_end) of one field stored on one BU. */
struct FieldSlice {
  std::uint32_t field_id{0};
  std::uint32_t bin_begin{0};
  std::uint32_t bin_end{0};
  std::uint32_t bu{0};
  std::uint32_t offset_bytes{0};
  bool operator==(const FieldSlice&) const = default;
};

struct BuOccupancy {
  std::vector<std::uint32_t> fields;  ///< distinct fields with bins here, ascending
  std::uint32_t bytes_used{0};
  bool operator==(const BuOccupancy&) const = default;
};

class SramMap {
 public:
  SramMap(MapStrategy strategy, std::uint32_t bin_entry_bytes, std::vector<FieldSlice> slices,
          std::uint32_t n_fields);

  [[nodiscard]] MapStrategy strategy() const { return strategy_; }
  [[nodiscard]] const std::vector<FieldSlice>& slices() const { return slices_; }
  [[nodiscard]] const std::vector<BuOccupancy>& occupancy() const { return bus_; }
  /*! \brief BUs holding any bin (one replica of the histogram). */
  [[nodiscard]] std::uint32_t bus_used() const { return static_cast<std::uint32_t>(bus_.size()); }
  /*! \brief Largest number of distinct fields on one BU: the per-record serialization factor. */
  [[nodiscard]] std::uint32_t max_fields_hosted() const;
  /*! \brief First and one-past-last BU hosting `field`. */
  [[nodiscard]] std::pair<std::uint32_t, std::uint32_t> field_bus(std::uint32_t field) const;
  [[nodiscard]] std::uint32_t bu_of(std::uint32_t field, std::uint32_t bin) const;
  /*! \brief SRAM update count per BU for one record given as one bin per field. */
  [[nodiscard]] std::vector<std::uint32_t> replay(std::span<const std::uint8_t> bins) const;

  bool operator==(const SramMap&) const = default;

 private:
  MapStrategy strategy_;
  std::vector<FieldSlice> slices_;
  std::vector<std::size_t> field_first_slice_;  ///< index into slices_, plus a sentinel
  std::vector<BuOccupancy> bus_;
};

/*!
 * \brief One field per BU; a field larger than one SRAM spans consecutive BUs.
 *  Throws CapacityError if the bins exceed aggregate SRAM, or if fields need
 *  more BUs than exist and field partitioning is disabled.
 */
SramMap map_group_by_field(const data::Schema& schema, const BoosterConfig& config);

/*! \brief First-fit packing of bins by capacity, fields in order. */
SramMap map_naive_pack(const data::Schema& schema, const BoosterConfig& config);

SramMap make_map(MapStrategy strategy, const data::Schema& schema, const BoosterConfig& config);

void dump(const SramMap& map, std::ostream& os);

}  // namespace booster::arch

#endif  // BOOSTER_ARCH_SRAM_MAP_H_
