/*!
 * Copyright 2026 by Contributors
 * \file work_trace.cc
 */
#include "booster/gbt/work_trace.h"

#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "booster/error.h"

namespace booster::gbt {

std::uint64_t WorkTrace::total_bins() const {
  return std::accumulate(field_bins.begin(), field_bins.end(), std::uint64_t{0});
}

std::vector<TraceEvent> WorkTrace::step_events(Step step) const {
  std::vector<TraceEvent> out;
  for (const auto& e : events) {
    if (e.step == step) out.push_back(e);
  }
  return out;
}

std::uint64_t WorkTrace::records_touched(Step step) const {
  std::uint64_t n = 0;
  for (const auto& e : events) {
    if (e.step == step) n += e.records;
  }
  return n;
}

WorkTrace trace_header(const data::QuantizedDataset& dataset) {
  WorkTrace t;
  t.n_records = dataset.n_records();
  t.n_fields = static_cast<std::uint32_t>(dataset.n_fields());
  t.record_stride = dataset.record_stride();
  t.block_bytes = dataset.block_bytes();
  for (const auto& f : dataset.schema().fields()) t.field_bins.push_back(f.n_bins());
  return t;
}

namespace {

std::uint64_t distinct_blocks(std::span<const std::uint32_t> records, std::uint64_t bytes_per_record,
                              std::uint32_t block_bytes) {
  std::uint64_t n = 0;
  std::uint64_t last = UINT64_MAX;
  for (std::uint32_t r : records) {
    const std::uint64_t first = r * bytes_per_record / block_bytes;
    const std::uint64_t end = (r * bytes_per_record + bytes_per_record - 1) / block_bytes;
    for (std::uint64_t b = first; b <= end; ++b) {
      if (b != last) ++n;
      last = b;
    }
  }
  return n;
}

}  // namespace

void count_blocks(TraceEvent& ev, std::span<const std::uint32_t> records, std::uint64_t n_records,
                  std::uint32_t record_stride, std::uint32_t block_bytes) {
  ev.records = records.size();
  ev.contiguous = records.size() == n_records;
  ev.row_blocks = distinct_blocks(records, record_stride, block_bytes);
  ev.col_blocks = distinct_blocks(records, 1, block_bytes);
  ev.grad_blocks = distinct_blocks(records, kGradBytes, block_bytes);
}

std::uint64_t data_bytes(const TraceEvent& ev, const WorkTrace& trace, data::Layout layout) {
  if (layout == data::Layout::kRowMajor) {
    return ev.contiguous ? ev.records * trace.record_stride : ev.row_blocks * trace.block_bytes;
  }
  return ev.contiguous ? ev.records * ev.fields : ev.col_blocks * trace.block_bytes * ev.fields;
}

void write_trace(const WorkTrace& t, std::ostream& os) {
  os << "trace n_records=" << t.n_records << " n_fields=" << t.n_fields << " record_stride=" << t.record_stride
     << " block_bytes=" << t.block_bytes << " n_trees=" << t.n_trees << " max_depth=" << t.max_depth
     << " field_bins=";
  for (std::size_t i = 0; i < t.field_bins.size(); ++i) os << (i ? "," : "") << t.field_bins[i];
  os << '\n';
  for (const auto& e : t.events) {
    os << "event tree=" << e.tree << " vertex=" << e.vertex << " depth=" << e.depth
       << " step=" << static_cast<int>(e.step) << " records=" << e.records << " fields=" << e.fields
       << " row_blocks=" << e.row_blocks << " col_blocks=" << e.col_blocks << " grad_blocks=" << e.grad_blocks
       << " contiguous=" << (e.contiguous ? 1 : 0) << " bin_updates=" << e.bin_updates
       << " bins_scanned=" << e.bins_scanned << " node_visits=" << e.node_visits << " max_path=" << e.max_path
       << " fields_used=" << e.fields_used << '\n';
  }
}

namespace {

std::map<std::string, std::string> parse_kv(std::istringstream& line, std::size_t line_no) {
  std::map<std::string, std::string> kv;
  std::string tok;
  while (line >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("trace line " + std::to_string(line_no) + ": expected key=value");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

std::uint64_t get_u(const std::map<std::string, std::string>& kv, const std::string& key, std::size_t line_no) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw FormatError("trace line " + std::to_string(line_no) + ": missing key " + key);
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw FormatError("trace line " + std::to_string(line_no) + ": bad value for " + key);
  }
}

}  // namespace

WorkTrace read_trace(std::istream& is) {
  WorkTrace t;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(is, raw)) {
    ++line_no;
    if (raw.empty()) continue;
    std::istringstream line(raw);
    std::string kind;
    line >> kind;
    const auto kv = parse_kv(line, line_no);
    const auto u = [&](const char* k) { return get_u(kv, k, line_no); };
    if (kind == "trace") {
      t.n_records = u("n_records");
      t.n_fields = static_cast<std::uint32_t>(u("n_fields"));
      t.record_stride = static_cast<std::uint32_t>(u("record_stride"));
      t.block_bytes = static_cast<std::uint32_t>(u("block_bytes"));
      t.n_trees = static_cast<std::uint32_t>(u("n_trees"));
      t.max_depth = static_cast<std::uint32_t>(u("max_depth"));
      const auto it = kv.find("field_bins");
      if (it != kv.end() && !it->second.empty()) {
        std::istringstream bins(it->second);
        std::string b;
        while (std::getline(bins, b, ',')) t.field_bins.push_back(static_cast<std::uint32_t>(std::stoul(b)));
      }
      if (t.field_bins.size() != t.n_fields) throw FormatError("trace: field_bins length does not match n_fields");
      have_header = true;
    } else if (kind == "event") {
      if (!have_header) throw FormatError("trace: event before header");
      TraceEvent e;
      e.tree = static_cast<std::uint32_t>(u("tree"));
      e.vertex = static_cast<std::uint32_t>(u("vertex"));
      e.depth = static_cast<std::uint32_t>(u("depth"));
      const auto step = u("step");
      if (step != 1 && step != 2 && step != 3 && step != 5) {
        throw FormatError("trace line " + std::to_string(line_no) + ": unknown step");
      }
      e.step = static_cast<Step>(step);
      e.records = u("records");
      e.fields = static_cast<std::uint32_t>(u("fields"));
      e.row_blocks = u("row_blocks");
      e.col_blocks = u("col_blocks");
      e.grad_blocks = u("grad_blocks");
      e.contiguous = u("contiguous") != 0;
      e.bin_updates = u("bin_updates");
      e.bins_scanned = u("bins_scanned");
      e.node_visits = u("node_visits");
      e.max_path = static_cast<std::uint32_t>(u("max_path"));
      e.fields_used = static_cast<std::uint32_t>(u("fields_used"));
      t.events.push_back(e);
    } else {
      throw FormatError("trace line " + std::to_string(line_no) + ": unknown record '" + kind + "'");
    }
  }
  if (!have_header) throw FormatError("trace: missing header");
  return t;
}

void save_trace(const WorkTrace& trace, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path + " for writing");
  write_trace(trace, os);
}

WorkTrace load_trace(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return read_trace(is);
}

}  // namespace booster::gbt
