#ifndef BOOSTER_TESTS_UNIT_HELPERS_H_
#define BOOSTER_TESTS_UNIT_HELPERS_H_

#include <numeric>
#include <random>
#include <vector>

#include "booster/data/dataset.h"
#include "booster/data/raw_table.h"
#include "booster/data/synth.h"

namespace booster::testing {

// Categorical fields with the given category counts; codes drawn uniformly,
// missing with probability `missing`.
inline data::RawTable categorical_table(std::size_t n, const std::vector<std::uint32_t>& cats, std::uint64_t seed,
                                        double missing = 0.0) {
  std::mt19937_64 rng(seed);
  data::RawTable t;
  for (std::size_t f = 0; f < cats.size(); ++f) {
    data::RawColumn c;
    c.name = "c" + std::to_string(f);
    c.kind = data::FieldKind::kCategorical;
    c.n_categories = cats[f];
    std::uniform_int_distribution<std::uint32_t> code(0, cats[f] - 1);
    std::uniform_real_distribution<double> u(0, 1);
    for (std::size_t r = 0; r < n; ++r) c.values.push_back(u(rng) < missing ? data::kMissing : code(rng));
    t.columns.push_back(std::move(c));
  }
  std::normal_distribution<double> y(0, 1);
  for (std::size_t r = 0; r < n; ++r) t.labels.push_back(y(rng));
  return t;
}

inline data::QuantizedDataset synth_quantized(std::size_t n, std::size_t numeric, std::uint64_t seed = 1,
                                              double skew = 0.5) {
  data::SynthSpec s;
  s.n_records = n;
  s.numeric_fields = numeric;
  s.seed = seed;
  s.skew = skew;
  return data::quantize(data::synth_dataset(s));
}

inline std::vector<data::GradPair> random_grads(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0, 1);
  std::uniform_real_distribution<double> h(0.1, 1.0);
  std::vector<data::GradPair> out(n);
  for (auto& gp : out) gp = {g(rng), h(rng)};
  return out;
}

inline std::vector<std::uint32_t> all_records(std::size_t n) {
  std::vector<std::uint32_t> r(n);
  std::iota(r.begin(), r.end(), 0U);
  return r;
}

inline double rel_err(double a, double b) {
  const double s = std::max({std::abs(a), std::abs(b), 1e-12});
  return std::abs(a - b) / s;
}

}  // namespace booster::testing

#endif  // BOOSTER_TESTS_UNIT_HELPERS_H_
