/*!
 * Copyright 2026 by Contributors
 * \file synth.h
 * \brief Deterministic synthetic tables shaped like common GB benchmarks.
 */
#ifndef BOOSTER_DATA_SYNTH_H_
#define BOOSTER_DATA_SYNTH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "booster/data/raw_table.h"

namespace booster::data {

enum class LabelModel : std::uint8_t {
  kLinearThreshold = 0,  ///< binary label, use with logistic loss
  kNoisyTree = 1,        ///< real label, use with squared error
};

const char* to_string(LabelModel m);
LabelModel label_model_from_string(const std::string& s);

/*!
 * \brief Generator parameters.
 *
 * Every field draws a latent u ~ U(0,1). Numeric cells hold u, categorical
 * cells floor(u * n_categories). Up to eight evenly spaced "signal" fields
 * contribute an indicator [u > skew] to the label, so skew = 0.5 yields
 * balanced splits and skew = 0.99 yields 99%/1% splits.
 */
struct SynthSpec {
  std::string name{"synth"};
  std::size_t n_records{1000};
  std::size_t numeric_fields{8};
  std::vector<std::uint32_t> categorical_fields;
  LabelModel label_model{LabelModel::kNoisyTree};
  double skew{0.5};
  std::uint64_t seed{1};
  double missing_rate{0.01};

  [[nodiscard]] std::size_t n_fields() const { return numeric_fields + categorical_fields.size(); }
};

RawTable synth_dataset(const SynthSpec& spec);

/*!
 * \brief Desk-scale stand-ins for the five benchmark shapes: "iot", "higgs",
 *  "allstate", "mq2008", "flight". Throws InvalidArgument for other names.
 */
SynthSpec analog_spec(const std::string& name, std::size_t n_records, std::uint64_t seed = 1);
std::vector<std::string> analog_names();

}  // namespace booster::data

#endif  // BOOSTER_DATA_SYNTH_H_
