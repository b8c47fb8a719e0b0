// Best split by enumerating every predicate and summing record statistics directly.
#ifndef BOOSTER_TESTS_ORACLES_EXHAUSTIVE_SPLIT_H_
#define BOOSTER_TESTS_ORACLES_EXHAUSTIVE_SPLIT_H_

#include <optional>
#include <span>
#include <vector>

#include "booster/data/dataset.h"
#include "booster/gbt/split.h"

namespace booster::oracle {

struct OracleSplit {
  gbt::Predicate predicate;
  double gain{0.0};
  std::vector<std::uint32_t> left;
};

inline double oracle_gain(double gl, double hl, double gr, double hr, double lambda, double gamma) {
  const double g = gl + gr, h = hl + hr;
  return 0.5 * (gl * gl / (hl + lambda) + gr * gr / (hr + lambda) - g * g / (h + lambda)) - gamma;
}

inline std::optional<OracleSplit> exhaustive_split(std::span<const std::uint32_t> records,
                                                   const data::QuantizedDataset& ds,
                                                   std::span<const data::GradPair> grads, double lambda,
                                                   double gamma) {
  std::optional<OracleSplit> best;
  double best_gain = 0.0;
  for (std::uint32_t f = 0; f < ds.n_fields(); ++f) {
    const std::uint32_t missing = ds.schema()[f].missing_bin();
    for (std::uint32_t b = 0; b < missing; ++b) {
      for (bool miss_left : {false, true}) {
        gbt::Predicate p{f, b, miss_left};
        double gl = 0, hl = 0, gr = 0, hr = 0;
        std::vector<std::uint32_t> left;
        std::size_t n_right = 0;
        for (auto r : records) {
          if (p.goes_left(ds.bin(r, f, data::Layout::kColumnMajor), missing)) {
            gl += grads[r].g;
            hl += grads[r].h;
            left.push_back(r);
          } else {
            gr += grads[r].g;
            hr += grads[r].h;
            ++n_right;
          }
        }
        if (left.empty() || n_right == 0) continue;
        const double gain = oracle_gain(gl, hl, gr, hr, lambda, gamma);
        if (gain > best_gain) {
          best_gain = gain;
          best = OracleSplit{p, gain, left};
        }
      }
    }
  }
  return best;
}

}  // namespace booster::oracle

#endif  // BOOSTER_TESTS_ORACLES_EXHAUSTIVE_SPLIT_H_
