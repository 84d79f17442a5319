#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "oracles/brute_candidates.hpp"
#include "oracles/planar_loop.hpp"
#include "oracles/presentation_ring.hpp"
#include "oracles/zeroth_order.hpp"
#include "test_support.hpp"
#include "thetamirror/broken_lines.hpp"
#include "thetamirror/theta_algebra.hpp"

using namespace thetamirror;
using testing_support::e;
using testing_support::load_pair;
using testing_support::load_table;
using testing_support::load_walls;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

ThetaElement from_ring(const oracle::Poly& poly, const TruncationIdeal& I) {
  ThetaElement out(I);
  for (const auto& [mono, c] : poly)
    out.add(LatticeVector(mono.x), series_monomial(I, ClassVector(mono.beta), c));
  return out;
}

std::vector<LatticeVector> generators_with_unit() {
  std::vector<LatticeVector> pts{LatticeVector(4)};
  for (std::size_t i = 0; i < 4; ++i) pts.push_back(e(4, i));
  return pts;
}

// theta_p theta_q for the four generators, as stated for the blowup.
std::map<std::pair<std::size_t, std::size_t>, ThetaElement> expected_products(const TruncationIdeal& I) {
  std::map<std::pair<std::size_t, std::size_t>, ThetaElement> out;
  ThetaElement x13(I);
  x13.add(LatticeVector(4), series_monomial(I, ClassVector{0, 1, 0}));
  out[{0, 2}] = x13;
  ThetaElement x24(I);
  x24.add(LatticeVector(4), series_monomial(I, ClassVector{1, 0, 1}));
  x24.add(e(4, 0), series_monomial(I, ClassVector{1, 0, 0}));
  out[{1, 3}] = x24;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t j = (i + 1) % 4;
    out[{std::min(i, j), std::max(i, j)}] = ThetaElement::basis(I, e(4, i) + e(4, j));
  }
  return out;
}

Outcome criterion1() {
  Outcome o;
  auto pair = load_pair("blowup.json");
  ThetaAlgebra A(pair, load_table("blowup_N.json", pair), TruncationIdeal::uniform(3, 3));
  auto ring = oracle::blowup_ring(3);
  for (const auto& [ij, want] : expected_products(A.ideal())) {
    auto [i, j] = ij;
    auto got = A.product(e(4, i), e(4, j));
    o.expect(got == want, "theta_p" + std::to_string(i + 1) + " theta_p" + std::to_string(j + 1) +
                              " = " + format_theta(got, pair));
    o.expect(from_ring(ring.product(e(4, i).values(), e(4, j).values(), 3), A.ideal()) == want,
             "presented ring disagrees at " + std::to_string(i + 1) + "," + std::to_string(j + 1));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto pair = load_pair("blowup.json");
  auto space = tropicalize(pair);
  auto I = TruncationIdeal::uniform(3, 3);
  auto as_set = [](const CandidateSet& s) {
    std::set<oracle::BruteCandidate> out;
    for (const auto& c : s.entries) out.insert({c.r.values(), c.beta.values()});
    return out;
  };
  auto s13 = as_set(candidates(pair, space, e(4, 0), e(4, 2), I));
  auto s24 = as_set(candidates(pair, space, e(4, 1), e(4, 3), I));
  std::set<oracle::BruteCandidate> want13{{{0, 0, 0, 0}, {0, 1, 0}}};
  std::set<oracle::BruteCandidate> want24{{{0, 0, 0, 0}, {1, 0, 1}}, {{1, 0, 0, 0}, {1, 0, 0}}};
  o.expect(s13 == want13, "(p1,p3) candidate set");
  o.expect(s24 == want24, "(p2,p4) candidate set");
  o.expect(oracle::brute_candidates(pair, {1, 0, 0, 0}, {0, 0, 1, 0}, 4, 3, {1, 1, 1}, 3) == s13,
           "brute force disagrees on (p1,p3)");
  o.expect(oracle::brute_candidates(pair, {0, 1, 0, 0}, {0, 0, 0, 1}, 4, 3, {1, 1, 1}, 3) == s24,
           "brute force disagrees on (p2,p4)");
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto pair = load_pair("blowup.json");
  auto printed = load_table("blowup_N.json", pair);
  auto full = load_table("blowup_N_full.json", pair);
  for (const auto& [k, v] : printed.entries())
    o.expect(full.find(k) == v, "extended table changes printed entry " + to_string(k));
  const auto pts = generators_with_unit();
  ThetaAlgebra A(pair, full, TruncationIdeal::uniform(3, 3));
  auto violations = A.associativity_check(pts);
  o.expect(violations.empty(), std::to_string(violations.size()) + " violations with the table");
  for (const auto& [key, value] : printed.entries()) {
    InvariantTable t;
    for (const auto& [k, v] : full.entries()) t.set(k, k == key ? v + 1 : v);
    ThetaAlgebra B(pair, t, TruncationIdeal::uniform(3, 3));
    o.expect(!B.associativity_check(pts).empty(), "perturbing " + to_string(key) + " goes unnoticed");
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const char* name : {"p2_toric.json", "p1xp1.json"}) {
    auto pair = load_pair(name);
    ThetaAlgebra A(pair, {}, TruncationIdeal::uniform(pair.class_rank(), 1));
    auto pts = integral_points(A.space().cy_sub, 3);
    for (const auto& p : pts)
      for (const auto& q : pts) {
        auto got = A.product(p, q);
        auto rule = oracle::zeroth_rule(pair, p.values(), q.values());
        const bool match = rule ? got == A.basis(LatticeVector(*rule)) : got.is_zero();
        o.expect(match, std::string(name) + " " + to_string(p) + "*" + to_string(q));
        o.expect(got == A.product(q, p), std::string(name) + " not commutative");
      }
    o.expect(A.associativity_check(pts).empty(), std::string(name) + " not associative");
  }
  return o;
}

oracle::Series to_series(const LaurentElement& f) {
  oracle::Series s;
  for (const auto& [k, c] : f.terms()) s[{k.beta[0], k.beta[1], k.exponent[0], k.exponent[1]}] = c;
  return s;
}

Outcome criterion5() {
  Outcome o;
  auto s = load_walls("gps2.json");
  auto c = complete(s);
  std::vector<Wall> added;
  for (const auto& w : c.walls())
    if (w.origin == "added") added.push_back(w);
  o.expect(added.size() == 1, std::to_string(added.size()) + " rays added");
  if (added.size() != 1) return o;
  const auto& w = added.front();
  auto want = LaurentElement::one(s.ideal(), 2) +
              laurent_monomial(s.ideal(), ClassVector{1, 1}, LatticeVector{1, 1});
  o.expect(w.fn == want, "added function is not 1 + t1 t2 z^(1,1)");
  const auto& d = w.direction;
  o.expect(!w.line && d[0] == d[1] && d[0] != 0, "added ray is not on the diagonal");
  o.expect(consistency_check(c).consistent, "completed structure inconsistent");
  auto report = consistency_check(s);
  o.expect(!report.consistent, "structure without the added ray is consistent");
  for (const auto& defect : report.defects) {
    const auto diff = defect.actual - defect.expected;
    for (const auto& [k, coeff] : diff.terms())
      o.expect(k.beta == ClassVector{1, 1}, "defect outside t1 t2");
  }
  oracle::LoopOracle loop(3);
  std::vector<oracle::PlanarWall> walls;
  for (const auto& x : c.walls()) {
    walls.push_back({{x.direction[0], x.direction[1]}, to_series(x.fn)});
    if (x.line) walls.push_back({{-x.direction[0], -x.direction[1]}, to_series(x.fn)});
  }
  for (auto m : {LatticeVector{1, 0}, LatticeVector{0, 1}}) {
    auto z = to_series(laurent_monomial(s.ideal(), ClassVector{0, 0}, m));
    o.expect(loop.loop(walls, z) == z, "independent loop is not the identity");
  }
  if (o.ok) o.detail = "added ray " + to_string(d) + ", the line through (1,1) opposite its exponent";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto pair = load_pair("blowup.json");
  auto s = load_walls("blowup_walls.json", &pair);
  const auto& I = s.ideal();
  for (std::uint64_t seed : {1u, 2u, 3u})
    for (const auto& [ij, want] : expected_products(I)) {
      auto [i, j] = ij;
      auto terms = theta_product(s, e(4, i), e(4, j), {.seed = seed});
      ThetaElement got(I);
      for (const auto& t : terms) got.add(t.r, t.coefficient);
      o.expect(got == want, "seed " + std::to_string(seed) + " product " + std::to_string(i + 1) +
                                std::to_string(j + 1) + " = " + format_theta(got, pair));
    }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"p2_line_generic.json", 0}, {"p2_line_degenerate.json", 1}, {"p2xa1_line.json", 2}};
  for (const auto& [name, dim] : cases) {
    auto j = io::read_json(testing_support::fixture(name));
    auto t = io::trop_type_from_json(j);
    auto cone = basic_monoid(t);
    o.expect(cone.dimension == dim, name + " has dimension " + std::to_string(cone.dimension));
    if (auto a = io::assignment_from_json(j)) o.expect(node_equation_check(t, *a), name + " node equations");
  }
  auto figure = io::trop_type_from_json(io::read_json(testing_support::fixture("p2_line_degenerate.json")));
  auto bal = balancing_check(figure);
  o.expect(bal.balanced && bal.residuals.size() == 2, "two-vertex curve is not balanced");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const std::string cmd = std::string("\"") + THETAMIRROR_PROPERTY_TESTS + "\" --gtest_brief=1 > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  o.expect(status == 0, "property suites failed (status " + std::to_string(status) + ")");
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "blowup multiplication table", 1.0, criterion1},
      {2, "candidate classes vs brute force", 5.0, criterion2},
      {3, "associativity and perturbation", 10.0, criterion3},
      {4, "zeroth-order products on P2 and P1xP1", 5.0, criterion4},
      {5, "planar completion", 1.0, criterion5},
      {6, "broken-line products", 5.0, criterion6},
      {7, "tropical type dimensions and balancing", 1.0, criterion7},
      {8, "property suites", 60.0, criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out.ok = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) out.expect(false, "over time limit");
    std::ostringstream line;
    line << "criterion " << c.id << " " << (out.ok ? "PASS" : "FAIL") << "  " << c.name << " ("
         << static_cast<long>(secs * 1000) << " ms, limit " << c.limit_seconds << " s)";
    if (!out.detail.empty()) line << "  " << out.detail;
    std::cout << line.str() << std::endl;
    if (!out.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
