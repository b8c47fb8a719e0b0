/*!
 * Copyright 2026 by Contributors
 * \file dataset_io.h
 * \brief Binary dataset file.
 *
 * Layout, all integers little-endian:
 *   magic "BSTRDSv1" (8 bytes)
 *   u64 n_records, u32 n_fields, u32 block_bytes
 *   schema block: per field u32 id, u8 kind, u32 n_categories, u32 max_bins,
 *     u32 start_feature, u32 missing_bin, u8 all_missing, u32 n_boundaries,
 *     f64 boundaries[n_boundaries]
 *   row-major section: u64 length, bytes
 *   column section: per field u64 length, bytes
 *   label section: u64 count, f64 labels
 *   grad section: u64 count, (f64 g, f64 h) pairs
 *   u64 FNV-1a checksum of every preceding byte
 */
#ifndef BOOSTER_DATA_DATASET_IO_H_
#define BOOSTER_DATA_DATASET_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "booster/data/dataset.h"

namespace booster::data {

inline constexpr char kDatasetMagic[8] = {'B', 'S', 'T', 'R', 'D', 'S', 'v', '1'};

std::vector<std::uint8_t> serialize(const QuantizedDataset& dataset);
QuantizedDataset deserialize(std::span<const std::uint8_t> bytes);

void save_dataset(const QuantizedDataset& dataset, const std::filesystem::path& path);
QuantizedDataset load_dataset(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes);

}  // namespace booster::data

#endif  // BOOSTER_DATA_DATASET_IO_H_
