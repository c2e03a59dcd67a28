// Randomized cross-checks of the three searches against the enumeration
// oracle. The acceptance binary runs the large version of this sweep.
#include <gtest/gtest.h>

#include "mbd/harness.h"
#include "mbd/hbfhs.h"
#include "mbd/hstree.h"
#include "mbd/rbfhs.h"
#include "mbd/sequential.h"
#include "oracles.h"

namespace mbd {
namespace {

Dpi Instance(std::uint64_t seed) {
  GeneratorParams p;
  p.seed = seed;
  p.num_components = 6 + seed % 6;
  p.conflict_count = 1 + seed % 5;
  p.conflict_size_max = 4;
  p.mode = seed % 2 ? GeneratorMode::kCnf : GeneratorMode::kExplicitConflicts;
  p.max_minimal_conflicts = p.mode == GeneratorMode::kCnf ? 6 : 0;
  return GenerateRandomDpi(p);
}

TEST(SearchProperties, AllAlgorithmsMatchOracle) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Dpi dpi = Instance(seed);
    const auto expected = oracle::MinimalDiagnoses(dpi);
    const auto min_conflicts = oracle::MinimalConflicts(dpi);
    for (CostMode mode : {CostMode::kMinCard, CostMode::kMaxProb}) {
      const CostModel model = MakeCostModel(dpi, mode);
      SearchOptions opt;
      opt.verify = true;
      for (Algorithm a : {Algorithm::kHsTree, Algorithm::kRbfHs, Algorithm::kHbfHs}) {
        auto r = RunSearch(a, dpi, model, kAllDiagnoses, NodeCount{1 + seed % 9}, opt);
        ASSERT_EQ(oracle::AsSet(r.diagnoses), expected)
            << "seed " << seed << ' ' << ToString(a) << ' ' << ToString(mode);
        ASSERT_EQ(r.diagnoses.size(), expected.size()) << "duplicates, seed " << seed;
        for (std::size_t i = 1; i < r.diagnoses.size(); ++i) {
          EXPECT_GE(model.f(r.diagnoses[i - 1]), model.f(r.diagnoses[i]));
        }
        EXPECT_LE(r.metrics.conflicts_computed, min_conflicts.size() + r.diagnoses.size());
        for (const auto& c : r.conflicts) EXPECT_TRUE(min_conflicts.count(c));
      }
    }
  }
}

TEST(SearchProperties, LeadingPrefixesAgree) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Dpi dpi = Instance(seed);
    const CostModel model = MakeCostModel(dpi, CostMode::kMaxProb);
    const auto all = BruteForceMinDiagnoses(dpi, model);
    for (std::size_t ld : {1, 2, 3, 5}) {
      for (Algorithm a : {Algorithm::kHsTree, Algorithm::kRbfHs, Algorithm::kHbfHs}) {
        auto r = RunSearch(a, dpi, model, ld, NodeCount{3});
        ASSERT_EQ(r.diagnoses.size(), std::min(ld, all.size()));
        // The i-th result costs as much as the i-th best overall.
        for (std::size_t i = 0; i < r.diagnoses.size(); ++i) {
          EXPECT_EQ(model.f(r.diagnoses[i]), model.f(all[i])) << "seed " << seed;
        }
      }
    }
  }
}

TEST(SearchProperties, RepeatedRunsAreIdentical) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Dpi dpi = Instance(seed);
    const CostModel model = MakeCostModel(dpi, CostMode::kMaxProb);
    for (Algorithm a : {Algorithm::kHsTree, Algorithm::kRbfHs, Algorithm::kHbfHs}) {
      auto x = RunSearch(a, dpi, model, 4);
      auto y = RunSearch(a, dpi, model, 4);
      EXPECT_EQ(x.diagnoses, y.diagnoses);
      EXPECT_EQ(x.conflicts, y.conflicts);
      EXPECT_EQ(x.metrics.nodes_generated, y.metrics.nodes_generated);
    }
  }
}

TEST(SearchProperties, LinearSpaceOfRecursiveSearch) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Dpi dpi = Instance(seed);
    const auto mc = oracle::MinimalConflicts(dpi);
    const std::size_t bound = LinearSpaceBound({mc.begin(), mc.end()});
    for (CostMode mode : {CostMode::kMinCard, CostMode::kMaxProb}) {
      const CostModel model = MakeCostModel(dpi, mode);
      EXPECT_LE(RunRbfHs(dpi, model).metrics.peak_tree_nodes, bound) << "seed " << seed;
      auto h = RunHbfHs(dpi, model, kAllDiagnoses, NodeCount{4});
      if (h.metrics.switched) {
        EXPECT_LE(h.metrics.post_switch_peak, bound);
      }
    }
  }
}

}  // namespace
}  // namespace mbd
