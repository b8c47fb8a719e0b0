/*!
 * Copyright 2026 by Contributors
 * \file synth.cc
 */
#include "booster/data/synth.h"

#include <cmath>
#include <numbers>
#include <random>

#include "booster/error.h"

namespace booster::data {
namespace {

// mt19937_64 output is fixed by the standard; the std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

const char* to_string(LabelModel m) {
  return m == LabelModel::kLinearThreshold ? "linear_threshold" : "noisy_tree";
}

LabelModel label_model_from_string(const std::string& s) {
  if (s == "linear_threshold") return LabelModel::kLinearThreshold;
  if (s == "noisy_tree") return LabelModel::kNoisyTree;
  throw InvalidArgument("unknown label model '" + s + "'");
}

RawTable synth_dataset(const SynthSpec& spec) {
  const std::size_t d = spec.n_fields();
  if (d == 0) throw InvalidArgument("synth: at least one field required");
  if (spec.skew < 0.0 || spec.skew > 1.0) throw InvalidArgument("synth: skew must be in [0, 1]");
  for (auto c : spec.categorical_fields) {
    if (c == 0) throw InvalidArgument("synth: categorical field with zero categories");
  }

  RawTable table;
  table.columns.resize(d);
  for (std::size_t f = 0; f < d; ++f) {
    auto& col = table.columns[f];
    col.name = "f" + std::to_string(f);
    if (f >= spec.numeric_fields) {
      col.kind = FieldKind::kCategorical;
      col.n_categories = spec.categorical_fields[f - spec.numeric_fields];
    }
    col.values.resize(spec.n_records);
  }
  table.labels.resize(spec.n_records);

  const std::size_t n_signal = std::min<std::size_t>(8, d);
  std::vector<std::size_t> signal(n_signal);
  std::vector<double> weight(n_signal);
  double expected = 0.0;
  for (std::size_t k = 0; k < n_signal; ++k) {
    signal[k] = k * d / n_signal;
    weight[k] = 2.0 * std::pow(0.8, static_cast<double>(k));
    expected += weight[k] * (1.0 - spec.skew);
  }

  Rng rng(spec.seed);
  std::vector<double> u(d);
  for (std::size_t r = 0; r < spec.n_records; ++r) {
    for (std::size_t f = 0; f < d; ++f) {
      u[f] = rng.uniform();
      auto& col = table.columns[f];
      const bool missing = rng.uniform() < spec.missing_rate;
      if (missing) {
        col.values[r] = kMissing;
      } else if (col.kind == FieldKind::kCategorical) {
        col.values[r] = std::floor(u[f] * col.n_categories);
      } else {
        col.values[r] = u[f];
      }
    }
    double s = 0.0;
    for (std::size_t k = 0; k < n_signal; ++k) {
      s += weight[k] * (u[signal[k]] > spec.skew ? 1.0 : 0.0);
      s += 0.25 * weight[k] * (u[signal[k]] - 0.5);
    }
    if (n_signal >= 2) {
      s += weight[0] * (u[signal[0]] > spec.skew && u[signal[1]] > spec.skew ? 1.0 : 0.0);
    }
    if (spec.label_model == LabelModel::kNoisyTree) {
      table.labels[r] = s + 0.1 * rng.normal();
    } else {
      table.labels[r] = s + 0.3 * rng.normal() > expected ? 1.0 : 0.0;
    }
  }
  return table;
}

std::vector<std::string> analog_names() { return {"iot", "higgs", "allstate", "mq2008", "flight"}; }

SynthSpec analog_spec(const std::string& name, std::size_t n_records, std::uint64_t seed) {
  SynthSpec s;
  s.name = name;
  s.n_records = n_records;
  s.seed = seed;
  if (name == "iot") {
    s.numeric_fields = 115;
    s.label_model = LabelModel::kLinearThreshold;
  } else if (name == "higgs") {
    s.numeric_fields = 28;
    s.label_model = LabelModel::kLinearThreshold;
  } else if (name == "allstate") {
    // Mostly wide categoricals at the one-byte cap plus two narrow ones.
    s.numeric_fields = 16;
    s.categorical_fields.assign(14, 255);
    s.categorical_fields.push_back(31);
    s.categorical_fields.push_back(3);
    s.label_model = LabelModel::kNoisyTree;
    s.skew = 0.99;
  } else if (name == "mq2008") {
    s.numeric_fields = 46;
    s.label_model = LabelModel::kNoisyTree;
  } else if (name == "flight") {
    s.numeric_fields = 1;
    s.categorical_fields = {255, 255, 100, 31, 12, 7, 5};
    s.label_model = LabelModel::kLinearThreshold;
    s.skew = 0.99;
  } else {
    throw InvalidArgument("unknown benchmark analog '" + name + "'");
  }
  return s;
}

}  // namespace booster::data
