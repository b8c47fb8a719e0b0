/*!
 * Copyright 2026 by Contributors
 * \file gradients.h
 * \brief Loss functions and their first/second derivatives.
 */
#ifndef BOOSTER_GBT_GRADIENTS_H_
#define BOOSTER_GBT_GRADIENTS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "booster/data/dataset.h"

namespace booster::gbt {

using data::GradPair;

enum class Loss : std::uint8_t { kSquaredError = 0, kLogistic = 1 };

const char* to_string(Loss loss);
Loss loss_from_string(const std::string& s);

/*! \brief l(prediction, label); logistic takes the prediction as a margin. */
double loss_value(Loss loss, double prediction, double label);

struct GradientResult {
  std::vector<GradPair> grads;
  double total_loss{0.0};
};

/*!
 * squared_error: g = pred - y, h = 1, l = (pred - y)^2 / 2.
 * logistic: p = sigmoid(pred), g = p - y, h = p (1 - p).
 * Throws InvalidArgument naming the record on a non-finite prediction.
 */
GradientResult compute_gradients(std::span<const double> labels, std::span<const double> predictions,
                                 Loss loss);

}  // namespace booster::gbt

#endif  // BOOSTER_GBT_GRADIENTS_H_
