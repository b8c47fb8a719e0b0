/*!
 * Copyright 2026 by Contributors
 * \file gradients.cc
 */
#include "booster/gbt/gradients.h"

#include <cmath>

#include "booster/error.h"

namespace booster::gbt {

const char* to_string(Loss loss) { return loss == Loss::kSquaredError ? "squared_error" : "logistic"; }

Loss loss_from_string(const std::string& s) {
  if (s == "squared_error") return Loss::kSquaredError;
  if (s == "logistic") return Loss::kLogistic;
  throw InvalidArgument("unknown loss '" + s + "'");
}

namespace {
double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// log(1 + exp(x)) without overflow.
double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }
}  // namespace

double loss_value(Loss loss, double prediction, double label) {
  if (loss == Loss::kSquaredError) {
    const double d = prediction - label;
    return 0.5 * d * d;
  }
  // -[y log p + (1-y) log(1-p)] with p = sigmoid(prediction)
  return softplus(prediction) - label * prediction;
}

GradientResult compute_gradients(std::span<const double> labels, std::span<const double> predictions,
                                 Loss loss) {
  if (labels.size() != predictions.size()) {
    throw InvalidArgument("compute_gradients: labels and predictions differ in length");
  }
  GradientResult out;
  out.grads.resize(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double pred = predictions[i];
    if (!std::isfinite(pred)) {
      throw InvalidArgument("compute_gradients: non-finite prediction at record " + std::to_string(i));
    }
    const double y = labels[i];
    if (loss == Loss::kSquaredError) {
      out.grads[i] = {pred - y, 1.0};
    } else {
      const double p = sigmoid(pred);
      out.grads[i] = {p - y, p * (1.0 - p)};
    }
    out.total_loss += loss_value(loss, pred, y);
  }
  return out;
}

}  // namespace booster::gbt
