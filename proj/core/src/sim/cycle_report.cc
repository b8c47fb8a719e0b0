/*!
 * Copyright 2026 by Contributors
 * \file cycle_report.cc
 */
#include "booster/sim/cycle_report.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "booster/error.h"

namespace booster::sim {

const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::kStep1:
      return "step1";
    case StepKind::kStep2Host:
      return "step2_host";
    case StepKind::kStep3:
      return "step3";
    case StepKind::kStep5:
      return "step5";
    case StepKind::kInference:
      return "inference";
  }
  return "?";
}

StepKind step_kind_from_string(const std::string& s) {
  for (auto k : kAllStepKinds) {
    if (s == to_string(k)) return k;
  }
  throw InvalidArgument("unknown step '" + s + "'");
}

StepCost& StepCost::operator+=(const StepCost& o) {
  cycles += o.cycles;
  dram_cycles += o.dram_cycles;
  compute_cycles += o.compute_cycles;
  bytes_read += o.bytes_read;
  bytes_written += o.bytes_written;
  sram_accesses += o.sram_accesses;
  row_hits += o.row_hits;
  row_misses += o.row_misses;
  bu_busy += o.bu_busy;
  bu_capacity += o.bu_capacity;
  invocations += o.invocations;
  return *this;
}

void CycleReport::add(StepKind k, const StepCost& cost, std::size_t tree) {
  step(k) += cost;
  if (k == StepKind::kInference) return;
  if (per_tree.size() <= tree) per_tree.resize(tree + 1);
  per_tree[tree][static_cast<std::size_t>(k)] += cost;
}

double CycleReport::total_cycles() const {
  double t = 0.0;
  for (const auto& s : steps) t += s.cycles;
  return t;
}

double CycleReport::share(StepKind k) const {
  const double t = total_cycles();
  return t > 0.0 ? step(k).cycles / t : 0.0;
}

std::uint64_t CycleReport::bytes_read() const {
  std::uint64_t n = 0;
  for (const auto& s : steps) n += s.bytes_read;
  return n;
}

std::uint64_t CycleReport::bytes_written() const {
  std::uint64_t n = 0;
  for (const auto& s : steps) n += s.bytes_written;
  return n;
}

std::uint64_t CycleReport::sram_accesses() const {
  std::uint64_t n = 0;
  for (const auto& s : steps) n += s.sram_accesses;
  return n;
}

double CycleReport::sram_utilization() const {
  const auto& s = step(StepKind::kStep1);
  return s.bu_capacity > 0.0 ? std::min(1.0, s.bu_busy / s.bu_capacity) : 0.0;
}

double CycleReport::dram_utilization() const {
  const auto& s = step(StepKind::kStep1);
  return s.cycles > 0.0 ? std::min(1.0, s.dram_cycles / s.cycles) : 0.0;
}

namespace {

void write_cost(std::ostream& os, const StepCost& c) {
  os << " cycles=" << c.cycles << " dram_cycles=" << c.dram_cycles << " compute_cycles=" << c.compute_cycles
     << " bytes_read=" << c.bytes_read << " bytes_written=" << c.bytes_written
     << " sram_accesses=" << c.sram_accesses << " row_hits=" << c.row_hits << " row_misses=" << c.row_misses
     << " bu_busy=" << c.bu_busy << " bu_capacity=" << c.bu_capacity << " invocations=" << c.invocations;
}

using Kv = std::map<std::string, std::string>;

Kv parse(std::istringstream& in) {
  Kv kv;
  std::string tok;
  while (in >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("report: expected key=value, got '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

const std::string& need(const Kv& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw FormatError("report: missing key " + key);
  return it->second;
}

StepCost read_cost(const Kv& kv) {
  StepCost c;
  try {
    c.cycles = std::stod(need(kv, "cycles"));
    c.dram_cycles = std::stod(need(kv, "dram_cycles"));
    c.compute_cycles = std::stod(need(kv, "compute_cycles"));
    c.bytes_read = std::stoull(need(kv, "bytes_read"));
    c.bytes_written = std::stoull(need(kv, "bytes_written"));
    c.sram_accesses = std::stoull(need(kv, "sram_accesses"));
    c.row_hits = std::stoull(need(kv, "row_hits"));
    c.row_misses = std::stoull(need(kv, "row_misses"));
    c.bu_busy = std::stod(need(kv, "bu_busy"));
    c.bu_capacity = std::stod(need(kv, "bu_capacity"));
    c.invocations = std::stoull(need(kv, "invocations"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::exception&) {
    throw FormatError("report: malformed number");
  }
  return c;
}

std::string encode_note(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '%') {
      out += "%25";
    } else if (c == ' ') {
      out += "%20";
    } else {
      out += c;
    }
  }
  return out;
}

std::string decode_note(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.compare(i, 3, "%20") == 0) {
      out += ' ';
      i += 2;
    } else if (s.compare(i, 3, "%25") == 0) {
      out += '%';
      i += 2;
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

void write_report(const CycleReport& r, std::ostream& os) {
  const auto old = os.precision(17);
  os << "report platform=" << r.platform << " workload=" << r.workload << " clock_ghz=" << r.clock_ghz
     << " feasible=" << (r.feasible ? 1 : 0) << " note=" << encode_note(r.note) << '\n';
  for (std::size_t t = 0; t < r.per_tree.size(); ++t) {
    for (auto k : kAllStepKinds) {
      const auto& c = r.per_tree[t][static_cast<std::size_t>(k)];
      if (c.invocations == 0) continue;
      os << "tree index=" << t << " step=" << to_string(k);
      write_cost(os, c);
      os << '\n';
    }
  }
  for (auto k : kAllStepKinds) {
    os << "summary step=" << to_string(k);
    write_cost(os, r.step(k));
    os << '\n';
  }
  os.precision(old);
}

CycleReport read_report(std::istream& is) {
  CycleReport r;
  std::string raw;
  bool header = false;
  while (std::getline(is, raw)) {
    if (raw.empty()) continue;
    std::istringstream line(raw);
    std::string kind;
    line >> kind;
    const Kv kv = parse(line);
    if (kind == "report") {
      r.platform = need(kv, "platform");
      r.workload = need(kv, "workload");
      r.clock_ghz = std::stod(need(kv, "clock_ghz"));
      r.feasible = need(kv, "feasible") == "1";
      r.note = decode_note(need(kv, "note"));
      header = true;
    } else if (kind == "tree") {
      const auto t = std::stoull(need(kv, "index"));
      const auto k = step_kind_from_string(need(kv, "step"));
      if (r.per_tree.size() <= t) r.per_tree.resize(t + 1);
      r.per_tree[t][static_cast<std::size_t>(k)] = read_cost(kv);
    } else if (kind == "summary") {
      r.step(step_kind_from_string(need(kv, "step"))) = read_cost(kv);
    } else {
      throw FormatError("report: unknown record '" + kind + "'");
    }
  }
  if (!header) throw FormatError("report: missing header");
  return r;
}

}  // namespace booster::sim
