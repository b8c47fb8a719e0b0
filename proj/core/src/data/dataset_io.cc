/*!
 * Copyright 2026 by Contributors
 * \file dataset_io.cc
 */
#include "booster/data/dataset_io.h"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "booster/error.h"

namespace booster::data {

static_assert(std::endian::native == std::endian::little,
              "dataset files are written with the host byte order, which must be little-endian");

std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

class Writer {
 public:
  template <typename T>
  void put(T v) {
    static_assert(std::is_trivially_copyable_v<T>);
    const auto* p = reinterpret_cast<const std::uint8_t*>(&v);
    out_.insert(out_.end(), p, p + sizeof(T));
  }
  void bytes(std::span<const std::uint8_t> b) {
    put<std::uint64_t>(b.size());
    out_.insert(out_.end(), b.begin(), b.end());
  }
  std::vector<std::uint8_t> take() { return std::move(out_); }
  [[nodiscard]] std::span<const std::uint8_t> view() const { return out_; }

 private:
  std::vector<std::uint8_t> out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  template <typename T>
  T get(const char* what) {
    need(sizeof(T), what);
    T v;
    std::memcpy(&v, in_.data() + pos_, sizeof(T));
    pos_ += sizeof(T);
    return v;
  }
  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    need(n, what);
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  [[nodiscard]] std::size_t pos() const { return pos_; }

 private:
  void need(std::size_t n, const char* what) const {
    if (in_.size() - pos_ < n) {
      throw FormatError(std::string("dataset file truncated while reading ") + what + " at byte " +
                        std::to_string(pos_));
    }
  }
  std::span<const std::uint8_t> in_;
  std::size_t pos_{0};
};

}  // namespace

std::vector<std::uint8_t> serialize(const QuantizedDataset& d) {
  Writer w;
  for (char c : kDatasetMagic) w.put<char>(c);
  w.put<std::uint64_t>(d.n_records());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(d.n_fields()));
  w.put<std::uint32_t>(d.block_bytes());
  for (std::size_t f = 0; f < d.n_fields(); ++f) {
    const auto& fs = d.schema()[f];
    const auto& bm = d.bin_maps()[f];
    w.put<std::uint32_t>(fs.field_id);
    w.put<std::uint8_t>(static_cast<std::uint8_t>(fs.kind));
    w.put<std::uint32_t>(fs.n_categories);
    w.put<std::uint32_t>(fs.max_bins);
    w.put<std::uint32_t>(fs.start_feature);
    w.put<std::uint32_t>(bm.missing_bin);
    w.put<std::uint8_t>(bm.all_missing ? 1 : 0);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(bm.upper_boundaries.size()));
    for (double b : bm.upper_boundaries) w.put<double>(b);
  }
  w.bytes(d.row_blocks());
  for (const auto& c : d.columns()) w.bytes(c);
  w.put<std::uint64_t>(d.labels().size());
  for (double y : d.labels()) w.put<double>(y);
  w.put<std::uint64_t>(d.grad_buffer().size());
  for (const auto& gp : d.grad_buffer()) {
    w.put<double>(gp.g);
    w.put<double>(gp.h);
  }
  const std::uint64_t sum = fnv1a64(w.view());
  w.put<std::uint64_t>(sum);
  return w.take();
}

QuantizedDataset deserialize(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto magic = r.take(sizeof(kDatasetMagic), "magic");
  if (std::memcmp(magic.data(), kDatasetMagic, sizeof(kDatasetMagic)) != 0) {
    throw FormatError("dataset file magic mismatch (expected BSTRDSv1)");
  }
  const auto n = r.get<std::uint64_t>("record count");
  const auto d = r.get<std::uint32_t>("field count");
  const auto block = r.get<std::uint32_t>("block size");
  if (block == 0 || block % 2 != 0) throw FormatError("dataset file has invalid block size");

  std::vector<FieldSchema> fields;
  std::vector<BinMap> maps;
  for (std::uint32_t f = 0; f < d; ++f) {
    FieldSchema fs;
    BinMap bm;
    fs.field_id = r.get<std::uint32_t>("schema");
    const auto kind = r.get<std::uint8_t>("schema");
    if (kind > 1) throw FormatError("dataset file has unknown field kind");
    fs.kind = static_cast<FieldKind>(kind);
    fs.n_categories = r.get<std::uint32_t>("schema");
    fs.max_bins = r.get<std::uint32_t>("schema");
    fs.start_feature = r.get<std::uint32_t>("schema");
    bm.field_id = fs.field_id;
    bm.missing_bin = r.get<std::uint32_t>("schema");
    bm.all_missing = r.get<std::uint8_t>("schema") != 0;
    const auto nb = r.get<std::uint32_t>("schema");
    bm.upper_boundaries.resize(nb);
    for (auto& b : bm.upper_boundaries) b = r.get<double>("bin boundaries");
    fields.push_back(fs);
    maps.push_back(std::move(bm));
  }
  auto read_section = [&](const char* what) {
    const auto len = r.get<std::uint64_t>(what);
    auto s = r.take(len, what);
    return std::vector<std::uint8_t>(s.begin(), s.end());
  };
  auto rows = read_section("row-major section");
  std::vector<std::vector<std::uint8_t>> cols;
  for (std::uint32_t f = 0; f < d; ++f) cols.push_back(read_section("column section"));
  const auto nl = r.get<std::uint64_t>("label section");
  if (nl != n) throw FormatError("label count disagrees with record count");
  std::vector<double> labels(nl);
  for (auto& y : labels) y = r.get<double>("label section");
  const auto ng = r.get<std::uint64_t>("grad section");
  if (ng != n) throw FormatError("grad count disagrees with record count");
  std::vector<GradPair> grads(ng);
  for (auto& gp : grads) {
    gp.g = r.get<double>("grad section");
    gp.h = r.get<double>("grad section");
  }
  const std::size_t body = r.pos();
  const auto stored = r.get<std::uint64_t>("checksum");
  if (stored != fnv1a64(bytes.first(body))) throw FormatError("dataset file checksum mismatch");
  if (r.pos() != bytes.size()) throw FormatError("dataset file has trailing bytes");

  try {
    return QuantizedDataset(Schema(std::move(fields)), std::move(maps), std::move(rows),
                            std::move(cols), std::move(labels), std::move(grads), block);
  } catch (const Error& e) {
    throw FormatError(std::string("dataset file is inconsistent: ") + e.what());
  }
}

void save_dataset(const QuantizedDataset& dataset, const std::filesystem::path& path) {
  const auto bytes = serialize(dataset);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

QuantizedDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return deserialize(bytes);
}

}  // namespace booster::data
