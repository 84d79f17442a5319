#include <gtest/gtest.h>

#include "oracles/toric_fan.hpp"
#include "test_support.hpp"
#include "thetamirror/cone_complex.hpp"

using namespace thetamirror;

namespace {

ConeComplex triangle() {
  std::vector<std::vector<std::size_t>> strata{{0, 1}, {1, 2}, {0, 2}};
  return build_complex(strata, 3);
}

}  // namespace

TEST(BasisCone, OrderBySizeThenIndices) {
  auto a = BasisCone::from_indices({2});
  auto b = BasisCone::from_indices({0, 1});
  auto c = BasisCone::from_indices({0, 2});
  EXPECT_LT(BasisCone(), a);
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_TRUE(a.is_face_of(c));
  EXPECT_FALSE(a.is_face_of(b));
  EXPECT_EQ(c.without(0), a);
  EXPECT_EQ(a.with(0), c);
}

TEST(BasisCone, SupportRejectsNegativeEntries) {
  EXPECT_EQ(support(LatticeVector{0, 3, 1}), BasisCone::from_indices({1, 2}));
  EXPECT_THROW(support(LatticeVector{1, -1, 0}), Error);
}

TEST(ConeComplex, ClosesStrataUnderFaces) {
  auto cx = triangle();
  EXPECT_EQ(cx.cones().size(), 7u);  // 0, three rays, three 2-cones
  EXPECT_EQ(cx.dim(), 2u);
  EXPECT_EQ(cx.maximal_cones().size(), 3u);
  EXPECT_EQ(cx.cofaces(BasisCone::from_indices({0})).size(), 2u);
}

TEST(ConeComplex, RejectsDeclaredEmptyIntersection) {
  std::vector<std::vector<std::size_t>> strata{{0, 1}};
  std::vector<std::vector<std::size_t>> empty{{1, 0}};
  try {
    build_complex(strata, 2, empty);
    FAIL() << "expected inconsistent-poset";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "inconsistent-poset");
  }
}

TEST(ConeComplex, MissingFaceIsRejected) {
  std::set<BasisCone> cones{BasisCone(), BasisCone::from_indices({0, 1}), BasisCone::from_indices({0})};
  EXPECT_THROW(ConeComplex(2, cones), Error);
}

TEST(ConeComplex, MinConeAndMembership) {
  auto cx = triangle();
  EXPECT_EQ(min_cone(cx, LatticeVector{2, 0, 1}), BasisCone::from_indices({0, 2}));
  EXPECT_EQ(min_cone(cx, LatticeVector{0, 0, 0}), BasisCone());
  std::vector<std::vector<std::size_t>> strata{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  auto square = build_complex(strata, 4);
  try {
    min_cone(square, LatticeVector{1, 0, 1, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "not-in-complex");
  }
}

TEST(ConeComplex, IntegralPointCounts) {
  // Each 2-cone contributes k-1 interior points at height k, each ray one.
  auto cx = triangle();
  for (std::int64_t k = 1; k <= 6; ++k)
    EXPECT_EQ(integral_points_of_height(cx, k).size(), static_cast<std::size_t>(3 * k));
  EXPECT_EQ(integral_points(cx, 3).size(), 1u + 3 + 6 + 9);
  auto pts = integral_points(cx, 2);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

TEST(ParallelTransport, MatchesToricFanLinearAlgebra) {
  const std::vector<std::vector<oracle::Ray>> fans{
      {{1, 0}, {0, 1}, {-1, -1}},
      {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
      {{1, 0}, {0, 1}, {-1, 1}, {0, -1}},
      {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
  for (const auto& rays : fans) {
    auto pair = oracle::toric_pair(rays);
    auto space = tropicalize(pair);
    const std::size_t n = rays.size();
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t a = (b + n - 1) % n, c = (b + 1) % n;
      auto rho = BasisCone::from_indices({b});
      auto chart = parallel_transport(space.full, rho, BasisCone::from_indices({a, b}),
                                      BasisCone::from_indices({b, c}), pair.curve_strata.at(rho));
      // v_a written in the basis (v_b, v_c)
      auto xy = oracle::solve(rays[a], rays[b], rays[c]);
      auto img = chart.apply(testing_support::e(n, a));
      EXPECT_EQ(img[b], xy[0]);
      EXPECT_EQ(img[c], xy[1]);
      EXPECT_EQ(chart.apply(testing_support::e(n, b)), testing_support::e(n, b));
      EXPECT_EQ(std::abs(chart.restricted_determinant()), 1);
    }
  }
}

TEST(ParallelTransport, RequiresStratumNumbers) {
  auto cx = triangle();
  try {
    parallel_transport(cx, BasisCone::from_indices({1}), BasisCone::from_indices({0, 1}),
                       BasisCone::from_indices({1, 2}), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "missing-intersection-number");
  }
}

TEST(ParallelTransport, RejectsVectorOutsideSigma1) {
  auto cx = triangle();
  auto chart = parallel_transport(cx, BasisCone::from_indices({1}), BasisCone::from_indices({0, 1}),
                                  BasisCone::from_indices({1, 2}), {{1, 1}});
  EXPECT_THROW(chart.apply(LatticeVector{0, 0, 1}), Error);
}
