#include <gtest/gtest.h>

#include "oracles/planar_loop.hpp"
#include "test_support.hpp"
#include "thetamirror/scattering2d.hpp"

using namespace thetamirror;
using testing_support::e;
using testing_support::load_pair;
using testing_support::load_walls;

namespace {

oracle::Series to_series(const LaurentElement& f) {
  oracle::Series s;
  for (const auto& [k, c] : f.terms()) s[{k.beta[0], k.beta[1], k.exponent[0], k.exponent[1]}] = c;
  return s;
}

std::vector<oracle::PlanarWall> to_oracle(const WallStructure& s) {
  std::vector<oracle::PlanarWall> out;
  for (const auto& w : s.walls()) {
    oracle::PlanarWall pw{{w.direction[0], w.direction[1]}, to_series(w.fn)};
    out.push_back(pw);
    if (w.line) out.push_back({{-w.direction[0], -w.direction[1]}, pw.f});
  }
  return out;
}

LaurentElement z(const TruncationIdeal& I, std::int64_t x, std::int64_t y) {
  return laurent_monomial(I, ClassVector(I.rank()), LatticeVector{x, y});
}

}  // namespace

TEST(PlanarScattering, UncompletedLoopMatchesOracle) {
  auto s = load_walls("gps2.json");
  oracle::LoopOracle o(3);
  auto loop = loop_around_origin(s);
  for (auto [x, y] : {std::pair{1, 0}, {0, 1}, {1, 1}, {-1, 2}}) {
    auto m = z(s.ideal(), x, y);
    EXPECT_EQ(to_series(loop.apply(m)), o.loop(to_oracle(s), to_series(m)));
  }
  auto report = consistency_check(s);
  EXPECT_FALSE(report.consistent);
}

TEST(PlanarScattering, CompletionAddsOneRay) {
  auto s = load_walls("gps2.json");
  auto c = complete(s);
  ASSERT_EQ(c.walls().size(), 3u);
  const auto& w = c.walls().back();
  EXPECT_EQ(w.origin, "added");
  EXPECT_EQ(w.direction, (LatticeVector{-1, -1}));
  auto want = LaurentElement::one(s.ideal(), 2) +
              laurent_monomial(s.ideal(), ClassVector{1, 1}, LatticeVector{1, 1});
  EXPECT_EQ(w.fn, want);
  EXPECT_TRUE(consistency_check(c).consistent);
  oracle::LoopOracle o(3);
  for (auto [x, y] : {std::pair{1, 0}, {0, 1}}) {
    auto m = to_series(z(s.ideal(), x, y));
    EXPECT_EQ(o.loop(to_oracle(c), m), m);
  }
}

TEST(PlanarScattering, RayAlongExponentIsInconsistent) {
  auto s = load_walls("gps2.json");
  auto fn = LaurentElement::one(s.ideal(), 2) +
            laurent_monomial(s.ideal(), ClassVector{1, 1}, LatticeVector{1, 1});
  s.add_wall({LatticeVector{1, 1}, false, fn, "added"});
  EXPECT_FALSE(consistency_check(s).consistent);
}

TEST(PlanarScattering, HigherBoundCompletionIsConsistent) {
  auto s = load_walls("gps2.json").with_ideal(TruncationIdeal::uniform(2, 5));
  auto c = complete(s);
  EXPECT_TRUE(consistency_check(c).consistent);
  oracle::LoopOracle o(5);
  auto m = to_series(z(c.ideal(), 1, 0));
  EXPECT_EQ(o.loop(to_oracle(c), m), m);
}

TEST(PlanarScattering, CrossingIsInvertedBySecondCrossing) {
  auto s = load_walls("gps2.json");
  const auto& w = s.walls()[0];
  auto m = z(s.ideal(), 2, 3);
  EXPECT_EQ(cross(w, cross(w, m, 1), -1), m);
  EXPECT_NE(cross(w, m, 1), m);
}

TEST(PlanarScattering, WallValidation) {
  auto s = load_walls("gps2.json");
  const auto& I = s.ideal();
  Wall bad{LatticeVector{2, 0}, true,
           LaurentElement::one(I, 2) + laurent_monomial(I, ClassVector{1, 0}, LatticeVector{1, 0})};
  EXPECT_THROW(s.add_wall(bad), Error);
  Wall transverse{LatticeVector{1, 0}, true,
                  LaurentElement::one(I, 2) + laurent_monomial(I, ClassVector{1, 0}, LatticeVector{0, 1})};
  EXPECT_THROW(s.add_wall(transverse), Error);
  Wall unit{LatticeVector{1, 0}, true,
            LaurentElement::one(I, 2) + laurent_monomial(I, ClassVector{0, 0}, LatticeVector{1, 0})};
  EXPECT_THROW(s.add_wall(unit), Error);
}

TEST(LooijengaGeometry, TransitionMatchesToricRelation) {
  for (const char* name : {"blowup.json", "p2_toric.json", "p1xp1.json"}) {
    auto pair = load_pair(name);
    auto g = LooijengaGeometry::from_pair(pair);
    const std::size_t n = pair.num_components();
    for (std::size_t j = 0; j < g.num_chambers(); ++j) {
      auto a = g.ray(j), b = g.ray(j + 1), c = g.ray(j + 2);
      auto img = g.to_next(j, e(n, a));
      EXPECT_EQ(img, -e(n, c) - g.stratum_number(b) * e(n, b)) << name << " " << j;
      EXPECT_EQ(g.to_next(j, e(n, b)), e(n, b));
      auto m = 2 * e(n, a) + 3 * e(n, b);
      EXPECT_EQ(g.to_prev(j + 1, g.to_next(j, m)), m);
    }
  }
}

TEST(LooijengaScattering, BlowupStructures) {
  auto pair = load_pair("blowup.json");
  auto one = load_walls("blowup_walls.json", &pair);
  auto two = load_walls("blowup_walls_two.json", &pair);
  auto r1 = consistency_check(one);
  EXPECT_FALSE(r1.consistent);
  for (const auto& d : r1.defects) {
    auto diff = d.actual - d.expected;
    for (const auto& [k, c] : diff.terms()) EXPECT_EQ(k.beta, (ClassVector{1, 1, 0}));
  }
  EXPECT_TRUE(consistency_check(two).consistent);
  EXPECT_TRUE(consistency_check(two, {.probe_height = 3}).consistent);
  try {
    complete(one);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), "unsupported");
  }
  EXPECT_EQ(complete(two).walls().size(), two.walls().size());
}

TEST(LooijengaScattering, RayCrossingRoundTrip) {
  auto pair = load_pair("blowup.json");
  auto s = load_walls("blowup_walls.json", &pair);
  const auto& g = s.geometry();
  for (std::size_t j = 0; j < g.num_chambers(); ++j) {
    auto m = laurent_monomial(s.ideal(), ClassVector(3), e(4, g.ray(j)) + e(4, g.ray(j + 1)));
    auto there = cross_ray(s, j, true, m);
    EXPECT_EQ(cross_ray(s, j + 1, false, there), m) << j;
  }
}

TEST(CanonicalWalls, ExponentialWallFunction) {
  auto pair = load_pair("blowup.json");
  auto I = TruncationIdeal::uniform(3, 3);
  CanonicalWallEntry entry{e(4, 0), ClassVector{0, 0, 1}, e(4, 0), 1, Rational(1)};
  auto s = canonical_walls(pair, {entry}, I);
  ASSERT_EQ(s.walls().size(), 1u);
  auto want = LaurentElement::one(I, 4) +
              laurent_monomial(I, ClassVector{0, 0, 1}, -e(4, 0)) +
              laurent_monomial(I, ClassVector{0, 0, 2}, -2 * e(4, 0), Rational(1, 2));
  EXPECT_EQ(s.walls()[0].fn, want);
}
