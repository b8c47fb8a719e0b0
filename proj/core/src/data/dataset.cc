/*!
 * Copyright 2026 by Contributors
 * \file dataset.cc
 */
#include "booster/data/dataset.h"

#include <cmath>
#include <string>

#include "booster/error.h"

namespace booster::data {

const char* to_string(Layout layout) {
  return layout == Layout::kRowMajor ? "row_major" : "column_major";
}

Schema RawTable::schema(std::uint32_t max_bins) const {
  std::vector<FieldKind> kinds;
  std::vector<std::uint32_t> cats;
  for (const auto& c : columns) {
    kinds.push_back(c.kind);
    cats.push_back(c.n_categories);
  }
  return Schema::make(kinds, cats, max_bins);
}

RawTable RawTable::replicate(std::size_t factor) const {
  if (factor == 0) throw InvalidArgument("replicate: factor must be >= 1");
  RawTable out;
  out.columns.reserve(columns.size());
  for (const auto& c : columns) {
    RawColumn rc{c.name, c.kind, c.n_categories, {}};
    rc.values.reserve(c.values.size() * factor);
    for (std::size_t k = 0; k < factor; ++k) rc.values.insert(rc.values.end(), c.values.begin(), c.values.end());
    out.columns.push_back(std::move(rc));
  }
  out.labels.reserve(labels.size() * factor);
  for (std::size_t k = 0; k < factor; ++k) out.labels.insert(out.labels.end(), labels.begin(), labels.end());
  return out;
}

namespace {
bool same_values(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isnan(a[i]) != std::isnan(b[i])) return false;
    if (!std::isnan(a[i]) && a[i] != b[i]) return false;
  }
  return true;
}
}  // namespace

bool RawTable::operator==(const RawTable& other) const {
  if (columns.size() != other.columns.size() || labels != other.labels) return false;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto& a = columns[i];
    const auto& b = other.columns[i];
    if (a.name != b.name || a.kind != b.kind || a.n_categories != b.n_categories) return false;
    if (!same_values(a.values, b.values)) return false;
  }
  return true;
}

std::uint32_t record_stride(std::uint32_t record_bytes, std::uint32_t block_bytes) {
  if (record_bytes <= block_bytes / 2) return block_bytes / 2;
  return (record_bytes + block_bytes - 1) / block_bytes * block_bytes;
}

QuantizedDataset::QuantizedDataset(Schema schema, std::vector<BinMap> bin_maps,
                                   std::vector<std::uint8_t> row_blocks,
                                   std::vector<std::vector<std::uint8_t>> columns,
                                   std::vector<double> labels, std::vector<GradPair> grad_buffer,
                                   std::uint32_t block_bytes)
    : schema_(std::move(schema)),
      bin_maps_(std::move(bin_maps)),
      block_bytes_(block_bytes),
      stride_(data::record_stride(static_cast<std::uint32_t>(schema_.size()), block_bytes)),
      row_blocks_(std::move(row_blocks)),
      columns_(std::move(columns)),
      labels_(std::move(labels)),
      grad_buffer_(std::move(grad_buffer)) {
  const std::size_t n = labels_.size();
  if (columns_.size() != schema_.size()) throw InvariantError("dataset: one column per field required");
  for (const auto& c : columns_) {
    if (c.size() != n) throw InvariantError("dataset: column length differs from record count");
  }
  if (row_blocks_.size() < n * stride_) throw InvariantError("dataset: row-major section too short");
  if (grad_buffer_.size() != n) throw InvariantError("dataset: grad_buffer length differs from record count");
}

QuantizedDataset QuantizedDataset::with_gradients(std::vector<GradPair> grads) const {
  QuantizedDataset copy = *this;
  if (grads.size() != n_records()) throw InvalidArgument("with_gradients: length mismatch");
  copy.grad_buffer_ = std::move(grads);
  return copy;
}

void QuantizedDataset::check_layouts() const {
  for (std::size_t r = 0; r < n_records(); ++r) {
    for (std::size_t f = 0; f < n_fields(); ++f) {
      const std::uint8_t b = row_blocks_[r * stride_ + f];
      if (b != columns_[f][r]) {
        throw InvariantError("layout mismatch at record " + std::to_string(r) + ", field " +
                             std::to_string(f));
      }
      if (b >= schema_[f].n_bins()) {
        throw InvariantError("bin index out of range at record " + std::to_string(r) + ", field " +
                             std::to_string(f));
      }
    }
  }
}

QuantizedDataset replicate(const QuantizedDataset& ds, std::size_t factor) {
  if (factor == 0) throw InvalidArgument("replicate: factor must be >= 1");
  const std::size_t n = ds.n_records() * factor;
  const std::size_t stride = ds.record_stride();
  const std::size_t bb = ds.block_bytes();
  std::vector<std::uint8_t> rows((n * stride + bb - 1) / bb * bb, 0);
  std::vector<std::vector<std::uint8_t>> cols(ds.n_fields());
  std::vector<double> labels;
  std::vector<GradPair> grads;
  labels.reserve(n);
  grads.reserve(n);
  for (std::size_t f = 0; f < ds.n_fields(); ++f) cols[f].reserve(n);
  for (std::size_t k = 0; k < factor; ++k) {
    const std::size_t base = k * ds.n_records();
    for (std::size_t r = 0; r < ds.n_records(); ++r) {
      const auto src = ds.row(r);
      std::copy(src.begin(), src.end(), rows.begin() + static_cast<std::ptrdiff_t>((base + r) * stride));
    }
    for (std::size_t f = 0; f < ds.n_fields(); ++f) {
      const auto c = ds.column(f);
      cols[f].insert(cols[f].end(), c.begin(), c.end());
    }
    labels.insert(labels.end(), ds.labels().begin(), ds.labels().end());
    grads.insert(grads.end(), ds.grad_buffer().begin(), ds.grad_buffer().end());
  }
  return QuantizedDataset(ds.schema(), ds.bin_maps(), std::move(rows), std::move(cols), std::move(labels),
                          std::move(grads), ds.block_bytes());
}

std::vector<BinMap> build_bin_maps(const RawTable& table, const Schema& schema) {
  if (table.n_columns() != schema.size()) throw InvalidArgument("build_bin_maps: column count != schema size");
  std::vector<BinMap> maps;
  maps.reserve(schema.size());
  for (const auto& field : schema) {
    const auto& col = table.columns[field.field_id];
    if (field.kind == FieldKind::kNumeric) {
      maps.push_back(build_bin_map(col.values, field.max_bins, field.field_id));
    } else {
      BinMap m;
      m.field_id = field.field_id;
      m.missing_bin = field.missing_bin();
      for (std::uint32_t c = 0; c < field.n_categories; ++c) m.upper_boundaries.push_back(c);
      maps.push_back(std::move(m));
    }
  }
  return maps;
}

QuantizedDataset quantize_dataset(const RawTable& table, const Schema& schema,
                                  const std::vector<BinMap>& bin_maps) {
  schema.validate();
  if (table.n_columns() != schema.size() || bin_maps.size() != schema.size()) {
    throw InvalidArgument("quantize_dataset: table, schema and bin maps disagree on field count");
  }
  const std::size_t n = table.n_rows();
  const std::size_t d = schema.size();
  const std::uint32_t stride = record_stride(static_cast<std::uint32_t>(d));
  const std::size_t row_bytes = (n * stride + kBlockBytes - 1) / kBlockBytes * kBlockBytes;

  std::vector<std::uint8_t> rows(row_bytes, 0);
  std::vector<std::vector<std::uint8_t>> cols(d, std::vector<std::uint8_t>(n));

  for (const auto& field : schema) {
    const std::size_t f = field.field_id;
    const auto& col = table.columns[f];
    const std::string where = "field " + std::to_string(f);
    if (col.kind != field.kind) throw InvalidArgument(where + ": column kind does not match schema");
    if (col.values.size() != n) throw InvalidArgument(where + ": column length != label count");
    if (field.n_bins() > kMaxBinsPerField) {
      throw InvalidArgument(where + ": needs " + std::to_string(field.n_bins()) +
                            " bins, more than the one-byte limit of " +
                            std::to_string(kMaxBinsPerField));
    }
    const BinMap& map = bin_maps[f];
    for (std::size_t r = 0; r < n; ++r) {
      const double v = col.values[r];
      std::uint32_t b;
      if (field.kind == FieldKind::kCategorical) {
        if (is_missing(v)) {
          b = field.missing_bin();
        } else if (v < 0 || v >= field.n_categories || v != std::floor(v)) {
          throw InvalidArgument(where + ", record " + std::to_string(r) + ": category " +
                                std::to_string(v) + " outside [0, " +
                                std::to_string(field.n_categories) + ")");
        } else {
          b = static_cast<std::uint32_t>(v);
        }
      } else {
        b = map.bin_of(v);
      }
      rows[r * stride + f] = static_cast<std::uint8_t>(b);
      cols[f][r] = static_cast<std::uint8_t>(b);
    }
  }
  return QuantizedDataset(schema, bin_maps, std::move(rows), std::move(cols), table.labels,
                          std::vector<GradPair>(n));
}

QuantizedDataset quantize(const RawTable& table, std::uint32_t max_bins) {
  Schema schema = table.schema(max_bins);
  auto maps = build_bin_maps(table, schema);
  return quantize_dataset(table, schema, maps);
}

}  // namespace booster::data
