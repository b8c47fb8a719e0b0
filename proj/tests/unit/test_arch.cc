#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "booster/arch/sram_map.h"
#include "booster/arch/tree_table.h"
#include "booster/error.h"
#include "booster/gbt/trainer.h"
#include "helpers.h"

namespace booster {
namespace {

using arch::BoosterConfig;
using data::FieldKind;

data::Schema categorical_schema(const std::vector<std::uint32_t>& n_bins) {
  std::vector<FieldKind> kinds(n_bins.size(), FieldKind::kCategorical);
  std::vector<std::uint32_t> cats;
  for (auto b : n_bins) cats.push_back(b - 1);
  return data::Schema::make(kinds, cats, data::kDefaultMaxBins);
}

BoosterConfig six_bin_srams() {
  BoosterConfig c;
  c.n_clusters = 1;
  c.bus_per_cluster = 8;
  c.bin_entry_bytes = 8;
  c.sram_bytes = 48;
  return c;
}

TEST(BoosterConfig, Defaults) {
  BoosterConfig c;
  EXPECT_EQ(c.total_bus(), 3200U);
  EXPECT_EQ(c.fill_cycles(), 200U);
  EXPECT_EQ(c.bins_per_sram(), 256U);
  c.sram_bytes = 0;
  EXPECT_THROW(c.validate(), InvalidArgument);
}

TEST(SramMap, GroupByFieldOneFieldPerSram) {
  auto schema = categorical_schema({3, 2, 6});
  auto m = arch::map_group_by_field(schema, six_bin_srams());
  EXPECT_EQ(m.bus_used(), 3U);
  EXPECT_EQ(m.max_fields_hosted(), 1U);
  for (std::uint32_t f = 0; f < 3; ++f) EXPECT_EQ(m.field_bus(f), std::make_pair(f, f + 1));
  std::vector<std::uint8_t> rec{1, 0, 5};
  EXPECT_EQ(m.replay(rec), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(SramMap, SingleFieldUsesBuZero) {
  auto m = arch::map_group_by_field(data::Schema::numeric(1, 64), BoosterConfig{});
  ASSERT_EQ(m.bus_used(), 1U);
  EXPECT_EQ(m.slices().at(0).bu, 0U);
  auto n = arch::map_naive_pack(data::Schema::numeric(1, 64), BoosterConfig{});
  EXPECT_EQ(n.slices(), m.slices());
  EXPECT_EQ(n.occupancy(), m.occupancy());
}

TEST(SramMap, WideFieldSpansGroup) {
  BoosterConfig c;
  c.bin_entry_bytes = 20;  // 102 bins per SRAM
  ASSERT_EQ(c.bins_per_sram(), 102U);
  auto m = arch::map_group_by_field(categorical_schema({300}), c);
  EXPECT_EQ(m.bus_used(), 3U);
  EXPECT_EQ(m.field_bus(0), std::make_pair(0U, 3U));
  std::mt19937_64 rng(1);
  std::vector<int> touches(3, 0);
  for (int r = 0; r < 100; ++r) {
    const std::uint32_t bin = rng() % 300;
    const auto bu = m.bu_of(0, bin);
    ASSERT_EQ(bu, bin / 102);
    ++touches[bu];
  }
  EXPECT_EQ(touches[0] + touches[1] + touches[2], 100);
}

TEST(SramMap, NaivePackSerializesFirstSram) {
  auto m = arch::map_naive_pack(categorical_schema({3, 2, 6}), six_bin_srams());
  ASSERT_EQ(m.bus_used(), 2U);
  EXPECT_EQ(m.occupancy()[0].fields, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(m.occupancy()[1].fields, (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(m.max_fields_hosted(), 3U);
  // Last field's value in its tail bins: SRAM 0 takes three updates, SRAM 1 none.
  std::vector<std::uint8_t> rec{0, 1, 0};
  EXPECT_EQ(m.replay(rec), (std::vector<std::uint32_t>{3, 0}));
}

TEST(SramMap, StrategiesAgreeOnUniformNumericFields) {
  auto schema = data::Schema::numeric(28, 256);
  BoosterConfig c;
  auto a = arch::map_group_by_field(schema, c);
  auto b = arch::map_naive_pack(schema, c);
  EXPECT_EQ(a.slices(), b.slices());
  EXPECT_EQ(a.occupancy(), b.occupancy());
}

TEST(SramMap, ReplayTouchesOncePerField) {
  auto ds = data::quantize(data::synth_dataset(data::analog_spec("allstate", 500)));
  BoosterConfig c;
  auto g = arch::map_group_by_field(ds.schema(), c);
  auto n = arch::map_naive_pack(ds.schema(), c);
  EXPECT_EQ(g.max_fields_hosted(), 1U);
  for (std::size_t r = 0; r < ds.n_records(); ++r) {
    auto tg = g.replay(ds.row(r));
    std::uint32_t sum = 0;
    for (auto t : tg) {
      EXPECT_LE(t, 1U);
      sum += t;
    }
    EXPECT_EQ(sum, ds.n_fields());
    auto tn = n.replay(ds.row(r));
    for (std::size_t bu = 0; bu < tn.size(); ++bu) {
      EXPECT_LE(tn[bu], n.occupancy()[bu].fields.size());
    }
  }
  EXPECT_GT(n.max_fields_hosted(), 1U);
}

TEST(SramMap, AggregateCapacityError) {
  BoosterConfig c;
  c.n_clusters = 1;
  c.bus_per_cluster = 2;
  try {
    arch::map_group_by_field(data::Schema::numeric(3, 256), c);
    FAIL();
  } catch (const CapacityError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("6144"), std::string::npos) << msg;
    EXPECT_NE(msg.find("4096"), std::string::npos) << msg;
  }
}

TEST(SramMap, FieldPartitioningToggle) {
  BoosterConfig c;
  c.n_clusters = 1;
  c.bus_per_cluster = 4;
  c.bin_entry_bytes = 4;  // 512 bins per SRAM, 6 fields fit in aggregate
  auto schema = data::Schema::numeric(6, 256);
  EXPECT_EQ(arch::map_group_by_field(schema, c).bus_used(), 6U);
  c.field_partitioning = false;
  EXPECT_THROW(arch::map_group_by_field(schema, c), CapacityError);
}

TEST(SramMap, DumpMentionsStrategy) {
  std::ostringstream os;
  arch::dump(arch::map_naive_pack(categorical_schema({3, 2, 6}), six_bin_srams()), os);
  EXPECT_NE(os.str().find("slice field=2"), std::string::npos);
}

TEST(TreeTable, SingleLeaf) {
  gbt::Tree t;
  auto tab = arch::encode_tree_table(t, data::Schema::numeric(4), BoosterConfig{});
  EXPECT_EQ(tab.entries.size(), 1U);
  EXPECT_TRUE(tab.field_remap.empty());
}

TEST(TreeTable, DenseOrderPreservingRemap) {
  auto schema = data::Schema::numeric(300, 16);
  using gbt::Node;
  gbt::Tree t({Node{false, {228, 3, false}, 1, 2, 0, 0, 0}, Node{false, {3, 5, true}, 3, 4, 0, 0, 1},
               Node{false, {40, 7, false}, 5, 6, 0, 0, 1}, Node{true, {}, -1, -1, 1, 0, 2},
               Node{true, {}, -1, -1, 2, 0, 2}, Node{true, {}, -1, -1, 3, 0, 2}, Node{true, {}, -1, -1, 4, 0, 2}});
  auto tab = arch::encode_tree_table(t, schema, BoosterConfig{});
  EXPECT_EQ(tab.field_remap, (std::vector<std::uint32_t>{3, 40, 228}));
  EXPECT_EQ(tab.entries[0].field, 2);
  EXPECT_EQ(tab.entries[1].field, 0);
  EXPECT_EQ(tab.entries[2].field, 1);
}

TEST(TreeTable, TraversalMatchesEngine) {
  auto ds = data::quantize(data::synth_dataset(data::analog_spec("allstate", 3000)));
  gbt::TrainConfig cfg;
  cfg.n_trees = 3;
  cfg.max_depth = 6;
  auto r = gbt::train(ds, cfg);
  std::mt19937_64 rng(2);
  for (const auto& tree : r.ensemble.trees) {
    auto tab = arch::encode_tree_table(tree, ds.schema(), BoosterConfig{});
    EXPECT_LE(tab.bytes(), BoosterConfig{}.sram_bytes);
    EXPECT_EQ(tab.field_remap.size(), tree.fields_used().size());
    for (int i = 0; i < 1000; ++i) {
      const auto rec = rng() % ds.n_records();
      const auto proj = tab.project(ds.row(rec));
      ASSERT_EQ(tab.traverse(proj), tree.leaf_index(ds.row(rec), ds.schema()));
      ASSERT_EQ(tab.path_length(proj), tree.path_length(ds.row(rec), ds.schema()));
    }
  }
}

TEST(TreeTable, TooLargeTreeRejected) {
  std::vector<gbt::Node> nodes;
  const int internal = 100;
  for (int i = 0; i < internal; ++i) nodes.push_back({false, {0, 1, false}, 2 * i + 1, 2 * i + 2, 0, 0, 0});
  for (int i = 0; i <= internal; ++i) nodes.push_back({true, {}, -1, -1, 0, 0, 0});
  gbt::Tree t(nodes);
  EXPECT_THROW(arch::encode_tree_table(t, data::Schema::numeric(1), BoosterConfig{}), CapacityError);
}

}  // namespace
}  // namespace booster
