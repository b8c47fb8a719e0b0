#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "booster/error.h"
#include "booster/report/experiment.h"
#include "booster/report/report.h"

namespace booster {
namespace {

sim::CycleReport fake(const std::string& platform, const std::string& workload, std::vector<double> cycles,
                      double clock = 1.0) {
  sim::CycleReport r;
  r.platform = platform;
  r.workload = workload;
  r.clock_ghz = clock;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    sim::StepCost c;
    c.cycles = cycles[i];
    r.add(sim::kAllStepKinds[i], c, 0);
  }
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(Speedup, IdenticalReportsGiveOne) {
  auto a = fake("ideal32", "w", {10, 20, 30, 40});
  auto b = a;
  b.platform = "booster";
  auto rows = report::speedup_table({a, b});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[0].speedup, 1.0);
  EXPECT_DOUBLE_EQ(rows[1].speedup, 1.0);
}

TEST(Speedup, ClockDifferenceCounts) {
  auto a = fake("ideal32", "w", {100});
  auto b = fake("booster", "w", {100}, 2.0);
  auto rows = report::speedup_table({a, b});
  EXPECT_DOUBLE_EQ(rows[1].speedup, 2.0);
}

TEST(Speedup, MismatchedWorkloadsThrow) {
  EXPECT_THROW(report::speedup_table({fake("ideal32", "w1", {1}), fake("booster", "w2", {1})}), InvalidArgument);
}

TEST(Speedup, MissingReferenceThrows) {
  EXPECT_THROW(report::speedup_table({fake("booster", "w", {1})}), InvalidArgument);
  auto rows = report::speedup_table({fake("booster", "w", {1})}, "booster");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_DOUBLE_EQ(rows[0].speedup, 1.0);
}

TEST(Speedup, InfeasibleRowKeptWithZero) {
  auto bad = fake("inter_record", "other", {});
  bad.feasible = false;
  bad.note = "too big, really";
  auto rows = report::speedup_table({fake("ideal32", "w", {5}), bad});
  EXPECT_FALSE(rows[1].feasible);
  EXPECT_EQ(rows[1].speedup, 0.0);
  std::ostringstream os;
  report::write_speedup_csv(rows, os);
  EXPECT_NE(os.str().find("\"too big, really\""), std::string::npos);
}

TEST(GeometricMean, HandComputed) {
  const std::vector<double> v{2.0, 8.0, 4.0};
  EXPECT_NEAR(report::geometric_mean(v), 4.0, 1e-12);
  const std::vector<double> one{7.5};
  EXPECT_DOUBLE_EQ(report::geometric_mean(one), 7.5);
  EXPECT_THROW(report::geometric_mean(std::vector<double>{}), InvalidArgument);
  EXPECT_THROW(report::geometric_mean(std::vector<double>{1.0, 0.0}), InvalidArgument);
}

TEST(Breakdown, SharesSumToOne) {
  auto rows = report::emit_breakdown({fake("ideal32", "w", {3, 1, 4, 1, 0}), fake("booster", "w", {5, 9, 2, 6})});
  for (const std::string p : {"ideal32", "booster"}) {
    double sum = 0.0;
    for (const auto& r : rows) {
      if (r.platform == p) sum += r.share;
    }
    EXPECT_NEAR(sum, 1.0, 1e-9) << p;
  }
}

TEST(Breakdown, SingleStepIsAll) {
  auto rows = report::emit_breakdown({fake("x", "w", {0, 0, 42})});
  for (const auto& r : rows) EXPECT_DOUBLE_EQ(r.share, r.step == sim::StepKind::kStep3 ? 1.0 : 0.0);
}

TEST(Breakdown, CsvSharesMatchCycles) {
  auto rows = report::emit_breakdown({fake("a", "w", {1.5, 2.5, 3.5, 4.5})});
  std::ostringstream os;
  report::write_breakdown_csv(rows, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, report::kBreakdownColumns);
  std::vector<double> cycles, shares;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string platform, step, c, s;
    std::getline(ls, platform, ',');
    std::getline(ls, step, ',');
    std::getline(ls, c, ',');
    std::getline(ls, s, ',');
    cycles.push_back(std::stod(c));
    shares.push_back(std::stod(s));
  }
  const double total = std::accumulate(cycles.begin(), cycles.end(), 0.0);
  for (std::size_t i = 0; i < cycles.size(); ++i) EXPECT_NEAR(shares[i], cycles[i] / total, 1e-12);
}

TEST(ParseSpec, UnknownKeyNamed) {
  try {
    report::parse_spec("train:\n  trees: 3\n  depth: 4\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("train.depth"), std::string::npos) << e.what();
  }
}

TEST(ParseSpec, BadValueNamed) {
  try {
    report::parse_spec("booster:\n  n_clusters: lots\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("booster.n_clusters"), std::string::npos) << e.what();
  }
}

TEST(ParseSpec, UnknownPlatformRejected) {
  EXPECT_THROW(report::parse_spec("platforms: [booster, tpu]\n").validate(), ConfigError);
  EXPECT_THROW(report::parse_spec("dataset: [1, 2\n"), ConfigError);
}

TEST(ParseSpec, ReadsValues) {
  auto s = report::parse_spec(
      "name: t\nscale: 2\ntrain:\n  trees: 3\n  max_depth: 4\n  layout: column_major\n"
      "dataset:\n  synth:\n    records: 500\n    numeric_fields: 4\n    categorical_fields: [5]\n"
      "platforms: [ideal32]\n");
  EXPECT_EQ(s.name, "t");
  EXPECT_EQ(s.scale_factor, 2u);
  EXPECT_EQ(s.train.n_trees, 3u);
  EXPECT_EQ(s.train.max_depth, 4u);
  EXPECT_EQ(s.dataset.synth.n_records, 500u);
  ASSERT_EQ(s.platforms.size(), 1u);
  EXPECT_NO_THROW(s.validate());
}

report::ExperimentSpec small_spec() {
  return report::parse_spec(
      "name: small\ntrain:\n  trees: 2\n  max_depth: 3\n"
      "dataset:\n  synth:\n    records: 2000\n    numeric_fields: 6\n    categorical_fields: [4, 12]\n    seed: 5\n");
}

TEST(RunExperiment, DeterministicBundle) {
  auto spec = small_spec();
  spec.platforms = {"booster", "ideal32", "ideal_gpu", "sequential"};
  spec.inference = true;
  const auto base = std::filesystem::temp_directory_path() / "booster_report_test";
  std::filesystem::remove_all(base);
  spec.out_dir = (base / "a").string();
  auto a = report::run_experiment(spec);
  spec.out_dir = (base / "b").string();
  auto b = report::run_experiment(spec);
  EXPECT_EQ(a.training, b.training);
  for (const char* f : {"steps.csv", "breakdown.csv", "speedup.csv", "energy.csv", "summary.txt",
                        "inference_speedup.csv"}) {
    EXPECT_EQ(slurp(base / "a" / f), slurp(base / "b" / f)) << f;
    EXPECT_FALSE(slurp(base / "a" / f).empty()) << f;
  }
  auto back = report::read_bundle(base / "a");
  EXPECT_EQ(back.training, a.training);
  EXPECT_EQ(back.inference, a.inference);
  std::filesystem::remove_all(base);
}

TEST(RunExperiment, ReferenceOnly) {
  auto spec = small_spec();
  spec.platforms = {"ideal32"};
  auto b = report::run_experiment(spec);
  ASSERT_EQ(b.training.size(), 1u);
  EXPECT_TRUE(b.training[0].feasible);
  ASSERT_EQ(b.energy.size(), 1u);
  EXPECT_DOUBLE_EQ(b.energy[0].sram_relative, 1.0);
  EXPECT_NE(report::summary_text(b).find("ideal32"), std::string::npos);
}

TEST(RunExperiment, InfeasibleInterRecordDoesNotStopRun) {
  auto spec = small_spec();
  spec.platforms = {"ideal32", "inter_record", "booster"};
  spec.ir_bytes_per_bin = 1e9;
  auto b = report::run_experiment(spec);
  ASSERT_EQ(b.training.size(), 3u);
  EXPECT_FALSE(b.training[1].feasible);
  EXPECT_FALSE(b.training[1].note.empty());
  EXPECT_TRUE(b.training[2].feasible);
  auto rows = report::speedup_table(b.training);
  EXPECT_EQ(rows[1].speedup, 0.0);
  EXPECT_GT(rows[2].speedup, 0.0);
}

}  // namespace
}  // namespace booster
