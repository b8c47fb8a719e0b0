/*!
 * Copyright 2026 by Contributors
 * \file experiment.cc
 */
#include "booster/report/experiment.h"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "booster/data/dataset_io.h"
#include "booster/error.h"
#include "booster/report/report.h"

namespace booster::report {

const std::vector<std::string> kPlatformNames{"booster",   "booster_no_opts", "booster_naive", "booster_row_major",
                                              "ideal32",   "ideal_gpu",       "inter_record",  "sequential"};

void ExperimentSpec::validate() const {
  if (platforms.empty()) throw ConfigError("platforms: at least one platform required");
  for (const auto& p : platforms) {
    if (std::find(kPlatformNames.begin(), kPlatformNames.end(), p) == kPlatformNames.end()) {
      throw ConfigError("platforms: unknown platform '" + p + "'");
    }
  }
  if (scale_factor < 1) throw ConfigError("scale: must be >= 1");
  try {
    train.validate();
    booster.validate();
    dram.validate();
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
  if (host.cores == 0 || !(host.clock_ghz > 0.0)) throw ConfigError("host: cores and clock_ghz must be positive");
}

namespace {

void check_keys(const YAML::Node& node, const std::string& where, const std::set<std::string>& allowed) {
  if (!node.IsMap()) throw ConfigError(where + ": expected a mapping");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.count(key)) throw ConfigError((where.empty() ? "" : where + ".") + key + ": unknown key");
  }
}

template <typename T>
void read(const YAML::Node& node, const char* key, const std::string& where, T& out) {
  const auto v = node[key];
  if (!v) return;
  try {
    out = v.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError((where.empty() ? "" : where + ".") + key + ": invalid value");
  }
}

void parse_synth(const YAML::Node& n, data::SynthSpec& s) {
  const std::string w = "dataset.synth";
  check_keys(n, w,
             {"preset", "records", "numeric_fields", "categorical_fields", "label_model", "skew", "missing_rate",
              "seed", "name"});
  std::size_t records = s.n_records;
  read(n, "records", w, records);
  if (n["preset"]) {
    std::string preset;
    read(n, "preset", w, preset);
    try {
      s = data::analog_spec(preset, records, s.seed);
    } catch (const InvalidArgument& e) {
      throw ConfigError(w + ".preset: " + e.what());
    }
  }
  s.n_records = records;
  read(n, "name", w, s.name);
  read(n, "numeric_fields", w, s.numeric_fields);
  read(n, "categorical_fields", w, s.categorical_fields);
  if (n["label_model"]) {
    std::string m;
    read(n, "label_model", w, m);
    try {
      s.label_model = data::label_model_from_string(m);
    } catch (const Error& e) {
      throw ConfigError(w + ".label_model: " + e.what());
    }
  }
  read(n, "skew", w, s.skew);
  read(n, "missing_rate", w, s.missing_rate);
  read(n, "seed", w, s.seed);
}

template <typename F>
void convert(const std::string& where, F&& f) {
  try {
    f();
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

}  // namespace

ExperimentSpec parse_spec(const std::string& yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml_text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config is not valid YAML: ") + e.what());
  }
  ExperimentSpec spec;
  if (!root || root.IsNull()) return spec;
  check_keys(root, "",
             {"name", "seed", "scale", "dataset", "train", "platforms", "booster", "dram", "host", "baselines",
              "energy", "inference", "out"});
  read(root, "name", "", spec.name);
  read(root, "scale", "", spec.scale_factor);
  read(root, "inference", "", spec.inference);
  read(root, "out", "", spec.out_dir);
  read(root, "platforms", "", spec.platforms);

  if (const auto d = root["dataset"]) {
    check_keys(d, "dataset", {"synth", "csv", "binary", "max_bins"});
    read(d, "max_bins", "dataset", spec.dataset.max_bins);
    const int sources = (d["synth"] ? 1 : 0) + (d["csv"] ? 1 : 0) + (d["binary"] ? 1 : 0);
    if (sources > 1) throw ConfigError("dataset: give exactly one of synth, csv, binary");
    if (d["synth"]) {
      spec.dataset.kind = SourceKind::kSynth;
      parse_synth(d["synth"], spec.dataset.synth);
    } else if (d["csv"]) {
      spec.dataset.kind = SourceKind::kCsv;
      const auto c = d["csv"];
      check_keys(c, "dataset.csv", {"path", "label", "categorical"});
      read(c, "path", "dataset.csv", spec.dataset.path);
      read(c, "label", "dataset.csv", spec.dataset.csv.label_column);
      std::vector<std::string> cats;
      read(c, "categorical", "dataset.csv", cats);
      spec.dataset.csv.categorical = {cats.begin(), cats.end()};
      if (spec.dataset.path.empty()) throw ConfigError("dataset.csv.path: required");
    } else if (d["binary"]) {
      spec.dataset.kind = SourceKind::kBinary;
      read(d, "binary", "dataset", spec.dataset.path);
    }
  }
  if (root["seed"]) {
    read(root, "seed", "", spec.dataset.synth.seed);
  }

  if (const auto t = root["train"]) {
    const std::string w = "train";
    check_keys(t, w, {"trees", "max_depth", "loss", "lambda", "gamma", "learning_rate", "growth", "layout", "threads"});
    read(t, "trees", w, spec.train.n_trees);
    read(t, "max_depth", w, spec.train.max_depth);
    read(t, "lambda", w, spec.train.lambda);
    read(t, "gamma", w, spec.train.gamma);
    read(t, "learning_rate", w, spec.train.learning_rate);
    read(t, "threads", w, spec.train.n_threads);
    std::string s;
    if (t["loss"]) {
      read(t, "loss", w, s);
      convert("train.loss", [&] { spec.train.loss = gbt::loss_from_string(s); });
    }
    if (t["growth"]) {
      read(t, "growth", w, s);
      convert("train.growth", [&] { spec.train.growth_order = gbt::growth_order_from_string(s); });
    }
    if (t["layout"]) {
      read(t, "layout", w, s);
      if (s == "row_major") {
        spec.train.layout = data::Layout::kRowMajor;
      } else if (s == "column_major") {
        spec.train.layout = data::Layout::kColumnMajor;
      } else {
        throw ConfigError("train.layout: expected row_major or column_major");
      }
    }
  }

  if (const auto b = root["booster"]) {
    const std::string w = "booster";
    auto& c = spec.booster;
    check_keys(b, w,
               {"n_clusters", "bus_per_cluster", "sram_bytes", "bin_entry_bytes", "bus_per_link", "clock_ghz",
                "block_bytes", "bu_cycles_per_field", "tree_entry_bytes", "tree_node_cycles", "field_partitioning",
                "fetch_grads_in_step1"});
    read(b, "n_clusters", w, c.n_clusters);
    read(b, "bus_per_cluster", w, c.bus_per_cluster);
    read(b, "sram_bytes", w, c.sram_bytes);
    read(b, "bin_entry_bytes", w, c.bin_entry_bytes);
    read(b, "bus_per_link", w, c.bus_per_link);
    read(b, "clock_ghz", w, c.clock_ghz);
    read(b, "block_bytes", w, c.block_bytes);
    read(b, "bu_cycles_per_field", w, c.bu_cycles_per_field);
    read(b, "tree_entry_bytes", w, c.tree_entry_bytes);
    read(b, "tree_node_cycles", w, c.tree_node_cycles);
    read(b, "field_partitioning", w, c.field_partitioning);
    read(b, "fetch_grads_in_step1", w, c.fetch_grads_in_step1);
  }
  if (const auto d = root["dram"]) {
    const std::string w = "dram";
    auto& c = spec.dram;
    check_keys(d, w,
               {"channels", "banks_per_channel", "row_bytes", "t_cas", "t_rp", "t_rcd", "t_ras", "mem_clock_ghz",
                "bus_bytes_per_clock", "sustained_gbps"});
    read(d, "channels", w, c.channels);
    read(d, "banks_per_channel", w, c.banks_per_channel);
    read(d, "row_bytes", w, c.row_bytes);
    read(d, "t_cas", w, c.t_cas);
    read(d, "t_rp", w, c.t_rp);
    read(d, "t_rcd", w, c.t_rcd);
    read(d, "t_ras", w, c.t_ras);
    read(d, "mem_clock_ghz", w, c.mem_clock_ghz);
    read(d, "bus_bytes_per_clock", w, c.bus_bytes_per_clock);
    read(d, "sustained_gbps", w, c.sustained_gbps);
  }
  if (const auto h = root["host"]) {
    const std::string w = "host";
    check_keys(h, w, {"clock_ghz", "cores", "cycles_per_bin_scanned", "cycles_per_bin_reduced"});
    read(h, "clock_ghz", w, spec.host.clock_ghz);
    read(h, "cores", w, spec.host.cores);
    read(h, "cycles_per_bin_scanned", w, spec.host.cycles_per_bin_scanned);
    read(h, "cycles_per_bin_reduced", w, spec.host.cycles_per_bin_reduced);
  }
  if (const auto b = root["baselines"]) {
    const std::string w = "baselines";
    check_keys(b, w, {"bin_update", "predicate", "node_visit", "grad_update", "leaf", "ir_bytes_per_bin"});
    read(b, "bin_update", w, spec.ops.bin_update);
    read(b, "predicate", w, spec.ops.predicate);
    read(b, "node_visit", w, spec.ops.node_visit);
    read(b, "grad_update", w, spec.ops.grad_update);
    read(b, "leaf", w, spec.ops.leaf);
    read(b, "ir_bytes_per_bin", w, spec.ir_bytes_per_bin);
  }
  if (const auto e = root["energy"]) {
    check_keys(e, "energy", {"dram_energy_per_byte", "sram_norm"});
    read(e, "dram_energy_per_byte", "energy", spec.energy.dram_energy_per_byte);
    if (const auto s = e["sram_norm"]) {
      std::map<std::string, double> m;
      read(e, "sram_norm", "energy", m);
      for (const auto& [k, v] : m) spec.energy.sram_norm[k] = v;
    }
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

data::QuantizedDataset prepare_dataset(const DatasetSource& source, std::uint32_t scale_factor) {
  data::QuantizedDataset ds;
  switch (source.kind) {
    case SourceKind::kSynth:
      ds = data::quantize(data::synth_dataset(source.synth), source.max_bins);
      break;
    case SourceKind::kCsv:
      ds = data::quantize(data::read_csv(source.path, source.csv), source.max_bins);
      break;
    case SourceKind::kBinary:
      ds = data::load_dataset(source.path);
      break;
  }
  return scale_factor > 1 ? data::replicate(ds, scale_factor) : ds;
}

data::Schema schema_from_trace(const sim::StepTrace& trace) {
  std::vector<data::FieldSchema> fields;
  std::uint32_t start = 0;
  for (std::uint32_t f = 0; f < trace.field_bins.size(); ++f) {
    data::FieldSchema fs;
    fs.field_id = f;
    fs.kind = data::FieldKind::kNumeric;
    fs.max_bins = trace.field_bins[f];
    fs.start_feature = start++;
    fields.push_back(fs);
  }
  return data::Schema(std::move(fields));
}

namespace {

bool is_booster(const std::string& p) { return p.rfind("booster", 0) == 0; }

sim::BoosterOptions booster_options(const std::string& p) {
  sim::BoosterOptions o;
  if (p == "booster_no_opts" || p == "booster_naive") o.mapping = arch::MapStrategy::kNaivePack;
  if (p == "booster_no_opts" || p == "booster_row_major") o.layout = data::Layout::kRowMajor;
  return o;
}

baselines::BaselineConfig baseline_config(const std::string& p, const ExperimentSpec& spec) {
  auto cfg = baselines::BaselineConfig::of(baselines::baseline_kind_from_string(p));
  cfg.ops = spec.ops;
  cfg.ir_bytes_per_bin = spec.ir_bytes_per_bin;
  cfg.ir_sram_bytes = std::uint64_t{spec.booster.total_bus()} * spec.booster.sram_bytes;
  cfg.fetch_grads_in_step1 = spec.booster.fetch_grads_in_step1;
  return cfg;
}

sim::CycleReport infeasible(const std::string& platform, const std::string& workload, double clock,
                            const std::string& why) {
  sim::CycleReport r;
  r.platform = platform;
  r.workload = workload;
  r.clock_ghz = clock;
  r.feasible = false;
  r.note = why;
  return r;
}

}  // namespace

sim::CycleReport simulate_platform(const std::string& platform, const sim::StepTrace& trace,
                                   const ExperimentSpec& spec) {
  if (is_booster(platform)) {
    try {
      auto r = sim::sim_training(trace, schema_from_trace(trace), spec.booster, spec.dram, spec.host,
                                 booster_options(platform));
      r.platform = platform;
      return r;
    } catch (const CapacityError& e) {
      return infeasible(platform, sim::workload_id(trace), spec.booster.clock_ghz, e.what());
    }
  }
  const auto cfg = baseline_config(platform, spec);
  try {
    return baselines::baseline_step_cycles(trace, cfg, spec.dram, spec.host);
  } catch (const InfeasibleError& e) {
    return infeasible(platform, sim::workload_id(trace), cfg.clock_ghz, e.what());
  }
}

sim::CycleReport simulate_inference(const std::string& platform, const sim::InferenceProfile& profile,
                                    const ExperimentSpec& spec) {
  const std::string workload =
      "infer_n" + std::to_string(profile.n_records) + "_t" + std::to_string(profile.mean_path.size());
  if (is_booster(platform)) {
    try {
      auto r = sim::sim_batch_inference(profile, spec.booster, spec.dram);
      r.platform = platform;
      return r;
    } catch (const CapacityError& e) {
      return infeasible(platform, workload, spec.booster.clock_ghz, e.what());
    }
  }
  const auto cfg = baseline_config(platform, spec);
  if (cfg.kind == baselines::BaselineKind::kInterRecord) {
    return infeasible(platform, workload, cfg.clock_ghz, "inference not modeled for inter_record");
  }
  return baselines::baseline_inference(profile, cfg, spec.dram);
}

ReportBundle simulate_bundle(const std::string& name, const sim::StepTrace& trace, const ExperimentSpec& spec,
                             const sim::InferenceProfile* profile) {
  ReportBundle b;
  b.name = name;
  b.workload = sim::workload_id(trace);
  for (const auto& p : spec.platforms) b.training.push_back(simulate_platform(p, trace, spec));
  if (profile) {
    for (const auto& p : spec.platforms) b.inference.push_back(simulate_inference(p, *profile, spec));
  }
  for (const auto& r : b.training) {
    if (r.feasible) b.energy.push_back(energy::energy_report(r, spec.energy));
  }
  const bool has_ref = std::any_of(b.energy.begin(), b.energy.end(),
                                   [](const energy::EnergyReport& e) { return e.platform == "ideal32"; });
  if (has_ref) energy::normalize(b.energy, "ideal32");
  return b;
}

ReportBundle run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const auto ds = prepare_dataset(spec.dataset, spec.scale_factor);
  const auto res = gbt::train(ds, spec.train);
  std::optional<sim::InferenceProfile> profile;
  if (spec.inference) profile = sim::profile_inference(res.ensemble, ds);
  auto bundle = simulate_bundle(spec.name, res.trace, spec, profile ? &*profile : nullptr);
  bundle.loss_history = res.loss_history;
  if (!spec.out_dir.empty()) write_bundle(bundle, spec.out_dir);
  return bundle;
}

namespace {

std::string reference_of(const std::vector<sim::CycleReport>& reports) {
  for (const auto& r : reports) {
    if (r.feasible && r.platform == "ideal32") return r.platform;
  }
  for (const auto& r : reports) {
    if (r.feasible) return r.platform;
  }
  return {};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot write " + path.string());
  os << text;
}

}  // namespace

std::string summary_text(const ReportBundle& b) {
  std::ostringstream os;
  os << std::fixed;
  os << "experiment " << b.name << "\nworkload " << b.workload << '\n';
  if (!b.loss_history.empty()) {
    os << std::setprecision(6) << "loss first " << b.loss_history.front() << " last " << b.loss_history.back()
       << '\n';
  }
  const auto section = [&](const char* title, const std::vector<sim::CycleReport>& reports) {
    if (reports.empty()) return;
    const auto ref = reference_of(reports);
    if (ref.empty()) return;
    os << '\n' << title << " (speedup over " << ref << ")\n";
    for (const auto& row : speedup_table(reports, ref)) {
      os << "  " << std::left << std::setw(18) << row.platform << std::right;
      if (!row.feasible) {
        os << "infeasible: " << row.note << '\n';
        continue;
      }
      os << std::setprecision(6) << std::setw(14) << row.seconds * 1e3 << " ms" << std::setprecision(2)
         << std::setw(10) << row.speedup << "x\n";
    }
  };
  section("training", b.training);
  os << "\nstep shares\n";
  for (const auto& r : b.training) {
    if (!r.feasible) continue;
    os << "  " << std::left << std::setw(18) << r.platform << std::right << std::setprecision(4);
    for (auto k : {sim::StepKind::kStep1, sim::StepKind::kStep2Host, sim::StepKind::kStep3, sim::StepKind::kStep5}) {
      os << ' ' << sim::to_string(k) << '=' << r.share(k);
    }
    os << '\n';
  }
  if (!b.energy.empty()) {
    os << "\nenergy (relative to ideal32)\n";
    for (const auto& e : b.energy) {
      os << "  " << std::left << std::setw(18) << e.platform << std::right << std::setprecision(4)
         << " sram=" << e.sram_relative << " dram=" << e.dram_relative << '\n';
    }
  }
  section("inference", b.inference);
  return os.str();
}

void write_bundle(const ReportBundle& b, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir / "reports");
  std::ostringstream index;
  index << "bundle " << b.name << '\n';
  for (const auto& r : b.training) {
    std::ostringstream os;
    sim::write_report(r, os);
    write_file(dir / "reports" / (r.platform + ".train.kv"), os.str());
    index << "train " << r.platform << '\n';
  }
  for (const auto& r : b.inference) {
    std::ostringstream os;
    sim::write_report(r, os);
    write_file(dir / "reports" / (r.platform + ".infer.kv"), os.str());
    index << "infer " << r.platform << '\n';
  }
  write_file(dir / "reports" / "index.txt", index.str());

  std::ostringstream steps, breakdown, speed, energy_csv;
  write_steps_csv(b.training, steps);
  write_breakdown_csv(emit_breakdown(b.training), breakdown);
  const auto ref = reference_of(b.training);
  if (!ref.empty()) write_speedup_csv(speedup_table(b.training, ref), speed);
  write_energy_csv(b.energy, energy_csv);
  write_file(dir / "steps.csv", steps.str());
  write_file(dir / "breakdown.csv", breakdown.str());
  write_file(dir / "speedup.csv", speed.str());
  write_file(dir / "energy.csv", energy_csv.str());
  if (!b.inference.empty()) {
    std::ostringstream inf;
    const auto iref = reference_of(b.inference);
    if (!iref.empty()) write_speedup_csv(speedup_table(b.inference, iref), inf);
    write_file(dir / "inference_speedup.csv", inf.str());
  }
  write_file(dir / "summary.txt", summary_text(b));
}

ReportBundle read_bundle(const std::filesystem::path& dir) {
  std::ifstream index(dir / "reports" / "index.txt");
  if (!index) throw Error("no report index in " + dir.string());
  ReportBundle b;
  std::string kind, name;
  if (!(index >> kind >> b.name) || kind != "bundle") throw FormatError("report index: bad header");
  while (index >> kind >> name) {
    const bool train = kind == "train";
    if (!train && kind != "infer") throw FormatError("report index: unknown entry '" + kind + "'");
    std::ifstream in(dir / "reports" / (name + (train ? ".train.kv" : ".infer.kv")));
    if (!in) throw Error("missing report for " + name);
    (train ? b.training : b.inference).push_back(sim::read_report(in));
  }
  for (const auto& r : b.training) {
    if (r.feasible) {
      b.workload = r.workload;
      break;
    }
  }
  energy::EnergyParams params;
  for (const auto& r : b.training) {
    if (r.feasible) b.energy.push_back(energy::energy_report(r, params));
  }
  if (std::any_of(b.energy.begin(), b.energy.end(), [](const auto& e) { return e.platform == "ideal32"; })) {
    energy::normalize(b.energy, "ideal32");
  }
  return b;
}

}  // namespace booster::report
