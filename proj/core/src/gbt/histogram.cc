/*!
 * Copyright 2026 by Contributors
 * \file histogram.cc
 */
#include "booster/gbt/histogram.h"

#include <string>
#include <thread>

#include "booster/error.h"

namespace booster::gbt {

BinStats operator+(BinStats a, const BinStats& b) { return a += b; }

BinStats Histogram::total() const {
  BinStats s;
  for (const auto& b : bins) s += b;
  return s;
}

HistogramSet empty_histograms(const data::Schema& schema) {
  HistogramSet hs(schema.size());
  for (std::size_t f = 0; f < schema.size(); ++f) {
    hs[f].field_id = static_cast<std::uint32_t>(f);
    hs[f].bins.resize(schema[f].n_bins());
  }
  return hs;
}

HistogramSet bin_gradients(std::span<const std::uint32_t> records, const QuantizedDataset& dataset,
                           std::span<const GradPair> grads, Layout layout) {
  HistogramSet hs = empty_histograms(dataset.schema());
  const std::size_t d = dataset.n_fields();
  if (layout == Layout::kRowMajor) {
    for (std::uint32_t r : records) {
      const auto row = dataset.row(r);
      const GradPair& gp = grads[r];
      for (std::size_t f = 0; f < d; ++f) hs[f].bins[row[f]].add(gp);
    }
  } else {
    for (std::size_t f = 0; f < d; ++f) {
      const auto col = dataset.column(f);
      auto& bins = hs[f].bins;
      for (std::uint32_t r : records) bins[col[r]].add(grads[r]);
    }
  }
  return hs;
}

HistogramSet bin_gradients_sharded(std::span<const std::uint32_t> records, const QuantizedDataset& dataset,
                                   std::span<const GradPair> grads, std::size_t n_shards, Layout layout) {
  if (n_shards <= 1 || records.size() < n_shards) return bin_gradients(records, dataset, grads, layout);
  std::vector<HistogramSet> partial(n_shards);
  std::vector<std::thread> workers;
  workers.reserve(n_shards);
  const std::size_t chunk = (records.size() + n_shards - 1) / n_shards;
  for (std::size_t s = 0; s < n_shards; ++s) {
    const std::size_t begin = std::min(records.size(), s * chunk);
    const std::size_t end = std::min(records.size(), begin + chunk);
    workers.emplace_back([&, s, begin, end] {
      partial[s] = bin_gradients(records.subspan(begin, end - begin), dataset, grads, layout);
    });
  }
  for (auto& t : workers) t.join();

  HistogramSet out = std::move(partial[0]);
  for (std::size_t s = 1; s < n_shards; ++s) {
    for (std::size_t f = 0; f < out.size(); ++f) {
      for (std::size_t b = 0; b < out[f].bins.size(); ++b) out[f].bins[b] += partial[s][f].bins[b];
    }
  }
  return out;
}

HistogramSet subtract_histograms(const HistogramSet& parent, const HistogramSet& small_child) {
  if (parent.size() != small_child.size()) throw InvariantError("subtract_histograms: field count mismatch");
  HistogramSet out(parent.size());
  for (std::size_t f = 0; f < parent.size(); ++f) {
    const auto& p = parent[f].bins;
    const auto& c = small_child[f].bins;
    if (p.size() != c.size()) throw InvariantError("subtract_histograms: bin count mismatch in field " + std::to_string(f));
    out[f].field_id = parent[f].field_id;
    out[f].bins.resize(p.size());
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (c[b].count > p[b].count) {
        throw InvariantError("subtract_histograms: negative count at field " + std::to_string(f) + ", bin " +
                             std::to_string(b));
      }
      out[f].bins[b] = {p[b].count - c[b].count, p[b].G - c[b].G, p[b].H - c[b].H};
    }
  }
  return out;
}

}  // namespace booster::gbt
