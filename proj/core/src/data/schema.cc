/*!
 * Copyright 2026 by Contributors
 * \file schema.cc
 */
#include "booster/data/schema.h"

#include <string>

#include "booster/error.h"

namespace booster::data {

const char* to_string(FieldKind kind) {
  return kind == FieldKind::kNumeric ? "numeric" : "categorical";
}

Schema::Schema(std::vector<FieldSchema> fields) : fields_(std::move(fields)) { validate(); }

Schema Schema::make(const std::vector<FieldKind>& kinds,
                    const std::vector<std::uint32_t>& n_categories, std::uint32_t max_bins) {
  if (kinds.size() != n_categories.size()) {
    throw InvalidArgument("Schema::make: kinds and n_categories differ in length");
  }
  std::vector<FieldSchema> fields;
  fields.reserve(kinds.size());
  std::uint32_t feature = 0;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    FieldSchema f;
    f.field_id = static_cast<std::uint32_t>(i);
    f.kind = kinds[i];
    f.n_categories = kinds[i] == FieldKind::kCategorical ? n_categories[i] : 0;
    f.max_bins = max_bins;
    f.start_feature = feature;
    feature += f.n_features();
    fields.push_back(f);
  }
  return Schema(std::move(fields));
}

Schema Schema::numeric(std::size_t n_fields, std::uint32_t bins_per_field) {
  return make(std::vector<FieldKind>(n_fields, FieldKind::kNumeric),
              std::vector<std::uint32_t>(n_fields, 0), bins_per_field);
}

std::uint64_t Schema::total_bins() const {
  std::uint64_t n = 0;
  for (const auto& f : fields_) n += f.n_bins();
  return n;
}

std::uint64_t Schema::total_features() const {
  std::uint64_t n = 0;
  for (const auto& f : fields_) n += f.n_features();
  return n;
}

std::size_t Schema::n_categorical() const {
  std::size_t n = 0;
  for (const auto& f : fields_) n += f.kind == FieldKind::kCategorical ? 1 : 0;
  return n;
}

void Schema::validate() const {
  std::uint32_t expected_feature = fields_.empty() ? 0 : fields_.front().start_feature;
  for (std::size_t i = 0; i < fields_.size(); ++i) {
    const auto& f = fields_[i];
    const std::string where = "field " + std::to_string(i);
    if (f.field_id != i) throw InvalidArgument(where + ": field_id must equal its position");
    if (f.kind == FieldKind::kNumeric && f.max_bins < 2) {
      throw InvalidArgument(where + ": numeric field needs max_bins >= 2");
    }
    if (f.kind == FieldKind::kCategorical && f.n_categories == 0) {
      throw InvalidArgument(where + ": categorical field needs at least one category");
    }
    if (f.start_feature != expected_feature) {
      throw InvalidArgument(where + ": start_feature " + std::to_string(f.start_feature) +
                            " breaks contiguity (expected " + std::to_string(expected_feature) +
                            ")");
    }
    expected_feature += f.n_features();
  }
}

}  // namespace booster::data
