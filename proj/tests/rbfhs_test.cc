#include "mbd/rbfhs.h"

#include <map>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "mbd/hstree.h"
#include "oracles.h"

namespace mbd {
namespace {

const std::vector<ComponentSet> kSevenLeading = {{0, 3}, {0, 5}, {3, 4}, {1, 3, 5}};

TEST(RbfHs, SevenComponentsLeadingFour) {
  const Dpi dpi = fixtures::SevenComponents();
  SearchOptions opt;
  opt.verify = true;
  auto r = RunRbfHs(dpi, CostModel::MaxProb(fixtures::kSevenPr), 4, opt);
  EXPECT_EQ(r.diagnoses, kSevenLeading);
}

TEST(RbfHs, AbcTheoryMatchesHsTree) {
  const Dpi dpi = fixtures::AbcTheory();
  auto model = CostModel::MinCard(dpi.size());
  EXPECT_EQ(oracle::AsSet(RunRbfHs(dpi, model).diagnoses),
            oracle::AsSet(RunHsTree(dpi, model).diagnoses));
}

TEST(RbfHs, EmptyConflictGivesNoDiagnosis) {
  CnfTheory t;
  t.variables = {"A"};
  t.component_sentences = {{}, {}};
  t.background = {{1}};
  t.negative = {{{{1}}}};
  const Dpi dpi({"a", "b"}, t);
  EXPECT_TRUE(RunRbfHs(dpi, CostModel::MinCard(2)).diagnoses.empty());
}

TEST(RbfHs, NoConflictGivesEmptyDiagnosis) {
  const Dpi dpi = fixtures::Explicit(2, {});
  EXPECT_EQ(RunRbfHs(dpi, CostModel::MinCard(2)).diagnoses,
            (std::vector<ComponentSet>{{}}));
}

TEST(Expand, RootAndChildNodes) {
  auto model = CostModel::MaxProb(fixtures::kSevenPr);
  auto root = Expand({}, {0, 1, 4}, model);
  ASSERT_EQ(root.size(), 3u);
  EXPECT_EQ(root[0].members, (ComponentSet{0}));
  EXPECT_EQ(root[1].members, (ComponentSet{1}));
  EXPECT_EQ(root[2].members, (ComponentSet{4}));
  EXPECT_EQ(root[1].f, model.f({1}));
  auto below = Expand({0}, {1, 3, 5}, model);
  ASSERT_EQ(below.size(), 3u);
  EXPECT_EQ(below[0].members, (ComponentSet{0, 1}));
  EXPECT_EQ(below[1].members, (ComponentSet{0, 3}));
  EXPECT_EQ(below[2].members, (ComponentSet{0, 5}));
  EXPECT_EQ(Expand({}, {2}, model).size(), 1u);
}

TEST(ChildList, SortingIsStableAndInsertionFifo) {
  auto mk = [](ComponentId id, double f) {
    return ChildEntry{{id}, Cost::Finite(f), Cost::Finite(f), false};
  };
  std::vector<ChildEntry> list = {mk(0, 1), mk(1, 3), mk(2, 1), mk(3, 3)};
  SortDecreasingByF(list);
  std::vector<ComponentId> order;
  for (const auto& e : list) order.push_back(e.members[0]);
  EXPECT_EQ(order, (std::vector<ComponentId>{1, 3, 0, 2}));

  InsertSortedByF(mk(4, 1), list);
  InsertSortedByF(mk(5, 3), list);
  InsertSortedByF(ChildEntry::Dummy(), list);
  order.clear();
  for (const auto& e : list) order.push_back(e.dummy ? 99 : e.members[0]);
  EXPECT_EQ(order, (std::vector<ComponentId>{1, 3, 5, 0, 2, 4, 99}));
}

struct Trace {
  struct Visit {
    ComponentSet node;
    Cost f, F, bound;
  };
  std::vector<Visit> visits;
  std::vector<std::pair<ComponentSet, Cost>> returns;
};

Trace TraceSevenComponents() {
  Trace trace;
  SearchOptions opt;
  opt.verify = true;
  opt.hooks.on_process = [&](const ComponentSet& n, Cost f, Cost F, Cost b) {
    trace.visits.push_back({n, f, F, b});
  };
  opt.hooks.on_return = [&](const ComponentSet& n, Cost v) {
    trace.returns.emplace_back(n, v);
  };
  RunRbfHs(fixtures::SevenComponents(), CostModel::MaxProb(fixtures::kSevenPr), 4, opt);
  return trace;
}

// The first subtree abandoned is {ax1}: both {ax1,ax4} and {ax1,ax6} are
// diagnoses, so its best remaining child is {ax1,ax2}, which is worse than
// the alternative {ax2}.
TEST(RbfHsTrace, FirstBacktrackFromAx1) {
  auto model = CostModel::MaxProb(fixtures::kSevenPr);
  Trace t = TraceSevenComponents();
  ASSERT_FALSE(t.returns.empty());
  std::pair<ComponentSet, Cost> first_internal{{}, Cost::NegInfinity()};
  for (const auto& r : t.returns) {
    if (r.first.size() == 1) {
      first_internal = r;
      break;
    }
  }
  EXPECT_EQ(first_internal.first, (ComponentSet{0}));
  EXPECT_EQ(first_internal.second, model.f({0, 1}));
  EXPECT_LT(first_internal.second, model.f({1}));
  // On the two-digit label scale: .09 for the returned value, .25 for the bound.
  EXPECT_NEAR(model.display_value({0, 1}) / model.display_value({1}), .09 / .25, 0.03);
}

// {ax2,ax4} is generated under {ax2} more than once; on a later
// regeneration it inherits the parent's learned value, which is below its
// own f.
TEST(RbfHsTrace, InheritanceOnRegeneration) {
  auto model = CostModel::MaxProb(fixtures::kSevenPr);
  Trace t = TraceSevenComponents();
  const ComponentSet n{1, 3};
  int visits = 0;
  bool inherited = false;
  for (const auto& v : t.visits) {
    if (v.node != n) continue;
    ++visits;
    EXPECT_EQ(v.f, model.f(n));
    EXPECT_LE(v.F, v.f);
    if (v.F < v.f) inherited = true;
  }
  EXPECT_GE(visits, 2);
  EXPECT_TRUE(inherited);
}

TEST(RbfHsTrace, BacktrackingInvariants) {
  Trace t = TraceSevenComponents();
  for (const auto& v : t.visits) {
    EXPECT_LE(v.F, v.f) << v.node;
  }
}

TEST(RbfHs, ClosedNodeBacksUpNegativeInfinity) {
  const Dpi dpi = fixtures::SevenComponents();
  auto model = CostModel::MaxProb(fixtures::kSevenPr);
  SessionState state;
  state.diagnoses = {{0, 3}};
  state.conflicts = {{0, 1, 4}};
  RbfHsSearch search(dpi, model, kAllDiagnoses, {}, state);
  auto v = search.Process({0, 3, 5}, model.f({0, 3, 5}), Cost::NegInfinity());
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(v->is_neg_infinity());
}

TEST(RbfHs, LabelReusesDisjointStoredConflict) {
  const Dpi dpi = fixtures::SevenComponents();
  SessionState state;
  state.conflicts = {{0, 1, 4}, {1, 3, 5}, {0, 2, 3}};
  auto r = Label({4}, dpi, state);
  EXPECT_EQ(r.kind, LabelResult::Kind::kConflict);
  EXPECT_TRUE(r.reused);
  EXPECT_EQ(r.conflict, (ComponentSet{1, 3, 5}));

  state.diagnoses = {{0, 3}};
  EXPECT_EQ(Label({0, 3, 6}, dpi, state).kind, LabelResult::Kind::kClosed);
  EXPECT_EQ(Label({3, 4}, dpi, state).kind, LabelResult::Kind::kValid);
}

TEST(RbfHs, PeakWithinLinearBound) {
  const Dpi dpi = fixtures::SevenComponents();
  auto r = RunRbfHs(dpi, CostModel::MaxProb(fixtures::kSevenPr));
  // Four minimal conflicts, the largest of size four.
  EXPECT_LE(r.metrics.peak_tree_nodes, 16u);
}

}  // namespace
}  // namespace mbd
