/*!
 * Copyright 2026 by Contributors
 * \file schema.h
 * \brief Field descriptions for quantized tabular data.
 */
#ifndef BOOSTER_DATA_SCHEMA_H_
#define BOOSTER_DATA_SCHEMA_H_

#include <cstdint>
#include <string>
#include <vector>

namespace booster::data {

/*! \brief Bin indices are stored in one byte per field. */
inline constexpr std::uint32_t kMaxBinsPerField = 256;
inline constexpr std::uint32_t kDefaultMaxBins = 256;

enum class FieldKind : std::uint8_t { kNumeric = 0, kCategorical = 1 };

const char* to_string(FieldKind kind);

/*!
 * \brief One input field.
 *
 * A numeric field owns max_bins bins, the last of which holds missing values.
 * A categorical field owns n_categories bins plus a trailing 'absent' bin.
 * One-hot expansion is logical only: start_feature is the global index of
 * the field's first one-hot feature, a numeric field counts as one feature.
 */
struct FieldSchema {
  std::uint32_t field_id{0};
  FieldKind kind{FieldKind::kNumeric};
  std::uint32_t n_categories{0};
  std::uint32_t max_bins{kDefaultMaxBins};
  std::uint32_t start_feature{0};

  [[nodiscard]] std::uint32_t n_bins() const {
    return kind == FieldKind::kNumeric ? max_bins : n_categories + 1;
  }
  [[nodiscard]] std::uint32_t missing_bin() const { return n_bins() - 1; }
  [[nodiscard]] std::uint32_t n_features() const {
    return kind == FieldKind::kNumeric ? 1 : n_categories;
  }

  bool operator==(const FieldSchema&) const = default;
};

class Schema {
 public:
  Schema() = default;
  explicit Schema(std::vector<FieldSchema> fields);

  /*! \brief Builds a schema with ids and start_feature assigned in order. */
  static Schema make(const std::vector<FieldKind>& kinds,
                     const std::vector<std::uint32_t>& n_categories,
                     std::uint32_t max_bins = kDefaultMaxBins);
  /*! \brief All-numeric schema with bins_per_field bins each. */
  static Schema numeric(std::size_t n_fields, std::uint32_t bins_per_field = kDefaultMaxBins);

  [[nodiscard]] std::size_t size() const { return fields_.size(); }
  [[nodiscard]] bool empty() const { return fields_.empty(); }
  [[nodiscard]] const FieldSchema& operator[](std::size_t i) const { return fields_[i]; }
  [[nodiscard]] const std::vector<FieldSchema>& fields() const { return fields_; }
  [[nodiscard]] auto begin() const { return fields_.begin(); }
  [[nodiscard]] auto end() const { return fields_.end(); }

  [[nodiscard]] std::uint64_t total_bins() const;
  [[nodiscard]] std::uint64_t total_features() const;
  [[nodiscard]] std::size_t n_categorical() const;

  /*! \brief Throws InvalidArgument when ids or start features are off. The
   *  one-byte bin cap is enforced at ingestion, not here. */
  void validate() const;

  bool operator==(const Schema&) const = default;

 private:
  std::vector<FieldSchema> fields_;
};

}  // namespace booster::data

#endif  // BOOSTER_DATA_SCHEMA_H_
