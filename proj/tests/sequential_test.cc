#include "mbd/sequential.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "mbd/error.h"
#include "mbd/harness.h"
#include "oracles.h"

namespace mbd {
namespace {

TEST(SelectProbeSpl, MatchesExhaustiveArgmin) {
  const std::vector<ComponentSet> d = {{0, 3}, {0, 5}, {3, 4}, {1, 3, 5}};
  const auto best = oracle::SplArgmins(d);
  const Probe p = SelectProbeSpl(d);
  EXPECT_TRUE(best.count(p.target));
  EXPECT_EQ(p.target, *best.begin());
}

TEST(SelectProbeSpl, TieGoesToLowestId) {
  EXPECT_EQ(SelectProbeSpl({{2}, {1}}).target, 1u);
}

TEST(SelectProbeSpl, SkipsComponentsInEveryDiagnosis) {
  EXPECT_EQ(SelectProbeSpl({{0, 1}, {0, 2}}).target, 1u);
  EXPECT_THROW(SelectProbeSpl({{0, 1}}), NoProbeError);
}

TEST(SelectProbeEnt, EquiprobableDisjointPair) {
  const std::vector<double> pr = {.2, .2};
  auto p = SelectProbeEnt({{0}, {1}}, pr);
  EXPECT_EQ(p.target, 0u);
}

TEST(SelectProbeEnt, NormalizedProbabilitiesOfFourDiagnoses) {
  const std::vector<double> pr = {.1, .05, .1, .05, .15};
  auto n = NormalizedDiagnosisProbabilities({{0, 2}, {0, 3}, {1, 2}, {1, 4}}, pr);
  const std::vector<double> expected = {.37, .175, .175, .28};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(n[i], expected[i], 5e-3);
}

TEST(SelectProbeEnt, MatchesExpectedEntropyArgmin) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.01, 0.49);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorParams p;
    p.seed = seed;
    p.num_components = 10;
    p.conflict_count = 4;
    const Dpi dpi = GenerateRandomDpi(p);
    const auto all = oracle::MinimalDiagnoses(dpi);
    std::vector<ComponentSet> d(all.begin(), all.end());
    if (d.size() < 2) continue;
    std::vector<double> pr(dpi.size());
    for (auto& x : pr) x = u(rng);
    const Probe chosen = SelectProbeEnt(d, pr);
    EXPECT_NEAR(oracle::ExpectedEntropy(d, pr, chosen.target),
                oracle::MinExpectedEntropy(d, pr), 1e-9)
        << "seed " << seed;
  }
}

TEST(ApplyAnswer, ExplicitHealthyAndFaulty) {
  const Dpi dpi = fixtures::Explicit(3, {{0, 1}, {1, 2}});
  const Dpi healthy = ApplyAnswer(dpi, {1}, false);
  EXPECT_EQ(healthy.names(), (std::vector<std::string>{"c0", "c2"}));
  EXPECT_EQ(std::get<ExplicitConflicts>(healthy.backend()).conflicts,
            (std::vector<ComponentSet>{{0}, {1}}));
  const Dpi faulty = ApplyAnswer(dpi, {1}, true);
  EXPECT_TRUE(std::get<ExplicitConflicts>(faulty.backend()).conflicts.empty());
  EXPECT_EQ(oracle::MinimalDiagnoses(faulty), (std::set<ComponentSet>{{}}));
}

TEST(ApplyAnswer, CnfHealthyMovesSentenceToBackground) {
  const Dpi dpi = fixtures::AbcTheory();
  const Dpi next = ApplyAnswer(dpi, {0}, false);
  ASSERT_EQ(next.size(), 4u);
  std::set<std::vector<std::string>> names;
  for (const auto& d : oracle::MinimalDiagnoses(next)) names.insert(next.names_of(d));
  EXPECT_EQ(names, (std::set<std::vector<std::string>>{{"ax2", "ax3"}, {"ax2", "ax5"}}));
  ASSERT_TRUE(next.probabilities());
  EXPECT_EQ(next.probabilities()->size(), 4u);
}

TEST(RunSession, AbcTheorySplRecoversActual) {
  const Dpi dpi = fixtures::AbcTheory();
  SessionConfig config;
  config.ld = 4;
  auto r = RunSession(dpi, dpi.ids_of({"ax1", "ax3"}), config);
  ASSERT_FALSE(r.failed) << r.failure;
  EXPECT_EQ(r.final_diagnosis, (std::vector<std::string>{"ax1", "ax3"}));
  EXPECT_GE(r.iterations, 1u);
  std::ostringstream os;
  for (const auto& rec : r.log) WriteTranscriptLine(os, rec);
  EXPECT_NE(os.str().find("iteration=1 probe="), std::string::npos);
}

TEST(RunSession, SingleDiagnosisNeedsNoProbe) {
  const Dpi dpi = fixtures::Explicit(3, {{1}});
  auto r = RunSession(dpi, ComponentSet{1}, SessionConfig{});
  EXPECT_FALSE(r.failed);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_EQ(r.final_diagnosis, (std::vector<std::string>{"c1"}));
}

TEST(RunSession, RejectsNonMinimalActual) {
  const Dpi dpi = fixtures::AbcTheory();
  EXPECT_THROW(RunSession(dpi, ComponentSet{0, 2, 3}, SessionConfig{}), DomainError);
  EXPECT_THROW(RunSession(dpi, ComponentSet{0}, SessionConfig{}), DomainError);
}

TEST(RunSession, AllAlgorithmsAndSelectorsRecoverActual) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GeneratorParams p;
    p.seed = seed;
    p.num_components = 12;
    p.conflict_count = 5;
    const Dpi dpi = GenerateRandomDpi(p);
    std::mt19937_64 rng(seed);
    const ComponentSet actual = RandomMinimalDiagnosis(dpi, rng);
    std::vector<std::vector<std::string>> probes_by_algo;
    for (Algorithm algo : {Algorithm::kHsTree, Algorithm::kRbfHs, Algorithm::kHbfHs}) {
      for (Selector sel : {Selector::kSpl, Selector::kEnt}) {
        for (CostMode mode : {CostMode::kMinCard, CostMode::kMaxProb}) {
          SessionConfig config;
          config.algorithm = algo;
          config.selector = sel;
          config.mode = mode;
          config.criterion = NodeCount{5};
          auto r = RunSession(dpi, actual, config);
          ASSERT_FALSE(r.failed) << r.failure;
          EXPECT_EQ(dpi.ids_of(r.final_diagnosis), actual) << "seed " << seed;
        }
      }
    }
  }
}

}  // namespace
}  // namespace mbd
