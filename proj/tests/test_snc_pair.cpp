#include <gtest/gtest.h>

#include "test_support.hpp"
#include "thetamirror/snc_pair.hpp"

using namespace thetamirror;
using testing_support::load_pair;

TEST(PairDescriptor, BlowupFixtureValidates) {
  auto pair = load_pair("blowup.json");
  EXPECT_EQ(pair.num_components(), 4u);
  EXPECT_EQ(pair.class_rank(), 3u);
  EXPECT_FALSE(pair.is_degeneration());
  // E meets D1 once, C2 = D2 meets D1 and D3.
  EXPECT_EQ(pair.intersection_vector(ClassVector{0, 0, 1}), (LatticeVector{1, 0, 0, 0}));
  EXPECT_EQ(pair.intersection_vector(ClassVector{0, 1, 0}), (LatticeVector{1, 0, 1, 0}));
  EXPECT_EQ(pair.log_canonical_degree(ClassVector{2, 1, 1}), 0);
  EXPECT_EQ(pair.component_index("D3"), 2u);
  EXPECT_EQ(pair.class_index("C3"), 2u);
  EXPECT_THROW(pair.class_index("C9"), Error);
}

TEST(PairDescriptor, ShapeErrors) {
  auto pair = load_pair("blowup.json");
  auto bad = pair;
  bad.intersection_matrix.pop_back();
  EXPECT_THROW(bad.validate(), Error);
  bad = pair;
  bad.discrepancies = {0, 0, -1, 0};
  EXPECT_THROW(bad.validate(), Error);
  bad = pair;
  bad.curve_strata[BasisCone::from_indices({0, 1})][0] = 1;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(PairDescriptor, CentralFiberMustKillClasses) {
  auto pair = load_pair("i3_degeneration.json");
  auto bad = pair;
  bad.central_fiber = LatticeVector{1, 1, 2};
  EXPECT_THROW(bad.validate(), Error);
}

TEST(Tropicalize, BlowupIsMaximalAndConnected) {
  auto space = tropicalize(load_pair("blowup.json"));
  EXPECT_EQ(space.full.cones().size(), 9u);
  EXPECT_EQ(space.cy_sub.cones().size(), 9u);
  EXPECT_TRUE(maximality_check(space));
  EXPECT_TRUE(dual_graph_connected(space));
}

TEST(Tropicalize, PositiveDiscrepancyLeavesSkeleton) {
  auto pair = load_pair("p2_toric.json");
  pair.discrepancies = {0, 1, 1};
  auto space = tropicalize(pair);
  EXPECT_EQ(space.full.cones().size(), 7u);
  EXPECT_EQ(space.cy_sub.cones().size(), 2u);  // 0 and the ray of D1
  EXPECT_FALSE(maximality_check(space));
}

TEST(Tropicalize, GradingInDegenerationMode) {
  auto pair = load_pair("i3_degeneration.json");
  auto space = tropicalize(pair);
  EXPECT_EQ(grading(space, LatticeVector{1, 2, 0}), 3);
  EXPECT_EQ(grading(space, LatticeVector{0, 0, 0}), 0);
  auto plain = tropicalize(load_pair("blowup.json"));
  try {
    grading(plain, LatticeVector{1, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "absent-central-fiber");
  }
}

TEST(Tropicalize, StratumOfPoint) {
  auto pair = load_pair("blowup.json");
  EXPECT_EQ(stratum_of(pair, LatticeVector{2, 1, 0, 0}), BasisCone::from_indices({0, 1}));
  EXPECT_EQ(stratum_of(pair, LatticeVector{0, 0, 0, 5}), BasisCone::from_indices({3}));
  EXPECT_THROW(stratum_of(pair, LatticeVector{1, 0, 1, 0}), Error);
}

TEST(Tropicalize, DisconnectedDualGraph) {
  PairDescriptor pair;
  pair.name = "two squares";
  pair.dimension = 2;
  pair.components = {"A", "B", "C", "D"};
  pair.strata = {{0, 1}, {2, 3}};
  pair.discrepancies = {0, 0, 0, 0};
  auto space = tropicalize(pair);
  EXPECT_FALSE(dual_graph_connected(space));
  EXPECT_TRUE(maximality_check(space));
}
