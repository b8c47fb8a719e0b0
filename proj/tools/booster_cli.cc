/*!
 * Copyright 2026 by Contributors
 * \file booster_cli.cc
 * \brief Command-line driver: synth, prepare, train, simulate, report, run.
 */
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "booster/data/csv.h"
#include "booster/data/dataset_io.h"
#include "booster/data/synth.h"
#include "booster/error.h"
#include "booster/gbt/model_io.h"
#include "booster/gbt/trainer.h"
#include "booster/gbt/work_trace.h"
#include "booster/report/experiment.h"
#include "booster/report/report.h"

namespace fs = std::filesystem;
using namespace booster;

namespace {

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint32_t> scale;
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config, "YAML experiment spec")->check(CLI::ExistingFile);
  cmd->add_option("--seed", c.seed, "Seed for synthetic data");
  cmd->add_option("--scale", c.scale, "Replicate every record this many times")->check(CLI::PositiveNumber);
  cmd->add_option("--out", c.out, "Output path");
}

report::ExperimentSpec spec_from(const Common& c) {
  auto spec = c.config.empty() ? report::ExperimentSpec{} : report::load_spec(c.config);
  if (c.seed) spec.dataset.synth.seed = *c.seed;
  if (c.scale) spec.scale_factor = *c.scale;
  if (!c.out.empty()) spec.out_dir = c.out;
  return spec;
}

std::string require_out(const Common& c, const std::string& what) {
  if (c.out.empty()) throw ConfigError("--out is required for " + what);
  return c.out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient boosted tree training and accelerator timing models"};
  app.require_subcommand(1);

  Common synth_c, prep_c, train_c, sim_c, report_c, run_c;

  auto* synth = app.add_subcommand("synth", "Write a synthetic table as CSV");
  add_common(synth, synth_c);
  std::string preset = "higgs";
  std::size_t records = 100000;
  synth->add_option("--preset", preset, "iot, higgs, allstate, mq2008 or flight");
  synth->add_option("--records", records, "Number of records");

  auto* prep = app.add_subcommand("prepare", "Quantize a CSV into a binary dataset");
  add_common(prep, prep_c);
  std::string csv_path, label = "label";
  std::vector<std::string> categorical;
  std::uint32_t max_bins = data::kDefaultMaxBins;
  prep->add_option("--csv", csv_path, "Input CSV")->required()->check(CLI::ExistingFile);
  prep->add_option("--label", label, "Label column");
  prep->add_option("--categorical", categorical, "Categorical columns")->delimiter(',');
  prep->add_option("--max-bins", max_bins, "Bins per numeric field, missing bin included");

  auto* trn = app.add_subcommand("train", "Train the reference model; writes model.txt and trace.kv");
  add_common(trn, train_c);
  std::string dataset_path;
  trn->add_option("--dataset", dataset_path, "Binary dataset (default: the config's data source)");

  auto* simc = app.add_subcommand("simulate", "Time a trace on every configured platform");
  add_common(simc, sim_c);
  std::string trace_path, model_path, sim_dataset;
  simc->add_option("--trace", trace_path, "Trace written by train")->required()->check(CLI::ExistingFile);
  simc->add_option("--model", model_path, "Model for batch inference timing")->check(CLI::ExistingFile);
  simc->add_option("--dataset", sim_dataset, "Dataset for batch inference timing")->check(CLI::ExistingFile);

  auto* rep = app.add_subcommand("report", "Rebuild tables from a simulate or run output directory");
  add_common(rep, report_c);
  std::string bundle_dir;
  rep->add_option("--in", bundle_dir, "Directory with reports/")->required()->check(CLI::ExistingDirectory);

  auto* run = app.add_subcommand("run", "Whole experiment from a config");
  add_common(run, run_c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      auto spec = data::analog_spec(preset, records, synth_c.seed.value_or(1));
      auto table = data::synth_dataset(spec);
      if (synth_c.scale) table = table.replicate(*synth_c.scale);
      data::write_csv(table, fs::path(require_out(synth_c, "synth")));
    } else if (*prep) {
      data::CsvOptions opts;
      opts.label_column = label;
      opts.categorical = {categorical.begin(), categorical.end()};
      auto ds = data::quantize(data::read_csv(fs::path(csv_path), opts), max_bins);
      if (prep_c.scale) ds = data::replicate(ds, *prep_c.scale);
      data::save_dataset(ds, require_out(prep_c, "prepare"));
    } else if (*trn) {
      auto spec = spec_from(train_c);
      const fs::path out = require_out(train_c, "train");
      auto ds = dataset_path.empty() ? report::prepare_dataset(spec.dataset, spec.scale_factor)
                                     : data::load_dataset(dataset_path);
      if (!dataset_path.empty() && spec.scale_factor > 1) ds = data::replicate(ds, spec.scale_factor);
      const auto res = gbt::train(ds, spec.train);
      fs::create_directories(out);
      gbt::save_model(res.ensemble, (out / "model.txt").string());
      gbt::save_trace(res.trace, (out / "trace.kv").string());
      std::ofstream loss(out / "loss.txt");
      loss.precision(17);
      for (double l : res.loss_history) loss << l << '\n';
    } else if (*simc) {
      auto spec = spec_from(sim_c);
      const auto trace = gbt::load_trace(trace_path);
      std::optional<sim::InferenceProfile> profile;
      if (!model_path.empty() || !sim_dataset.empty()) {
        if (model_path.empty() || sim_dataset.empty()) throw ConfigError("--model and --dataset go together");
        profile = sim::profile_inference(gbt::load_model(model_path), data::load_dataset(sim_dataset));
      }
      const auto bundle = report::simulate_bundle(spec.name, trace, spec, profile ? &*profile : nullptr);
      report::write_bundle(bundle, require_out(sim_c, "simulate"));
      std::cout << report::summary_text(bundle);
    } else if (*rep) {
      const auto bundle = report::read_bundle(bundle_dir);
      if (!report_c.out.empty()) report::write_bundle(bundle, report_c.out);
      std::cout << report::summary_text(bundle);
    } else if (*run) {
      const auto spec = spec_from(run_c);
      const auto bundle = report::run_experiment(spec);
      std::cout << report::summary_text(bundle);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
