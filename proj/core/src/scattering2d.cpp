#include "thetamirror/scattering2d.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <map>
#include <set>

#include "thetamirror/broken_lines.hpp"

namespace thetamirror {

// ---------------------------------------------------------------- geometry

LooijengaGeometry LooijengaGeometry::from_pair(const PairDescriptor& pair) {
  auto space = tropicalize(pair);
  require(pair.dimension == 2, "unsupported", "scattering needs a surface pair");
  require(pair.component_classes.has_value(), "precondition",
          "component classes are needed for the kinks");
  auto top = space.cy_sub.maximal_cones();
  require(top.size() >= 3, "unsupported", "B must be a complete fan with at least 3 rays");
  for (auto c : top) require(c.size() == 2, "unsupported", "B is not pure of dimension 2");
  for (auto r : space.cy_sub.cones_of_size(1)) {
    std::size_t count = 0;
    for (auto c : top) count += r.is_face_of(c);
    require(count == 2, "unsupported", "ray " + to_string(r) + " is not in exactly two chambers");
  }

  LooijengaGeometry g;
  g.pair_ = pair;
  auto first = top.front().indices();
  g.rays_ = {first[0], first[1]};
  while (true) {
    const std::size_t prev = g.rays_[g.rays_.size() - 2];
    const std::size_t cur = g.rays_.back();
    std::size_t next = prev;
    for (auto c : top) {
      if (!c.contains(cur) || c.contains(prev)) continue;
      next = c.without(cur).indices().front();
    }
    if (next == g.rays_.front()) break;
    require(std::find(g.rays_.begin(), g.rays_.end(), next) == g.rays_.end(), "unsupported",
            "chambers do not form a single cycle");
    g.rays_.push_back(next);
  }
  require(g.rays_.size() == top.size(), "unsupported", "chambers do not form a single cycle");
  for (auto i : g.rays_) (void)g.stratum_number(i);
  return g;
}

BasisCone LooijengaGeometry::chamber(std::size_t j) const {
  return BasisCone::from_indices({ray(j), ray(j + 1)});
}

std::size_t LooijengaGeometry::ray_position(std::size_t component) const {
  for (std::size_t j = 0; j < rays_.size(); ++j)
    if (rays_[j] == component) return j;
  fail("not-in-complex", "component " + std::to_string(component) + " is not a ray of B");
}

ClassVector LooijengaGeometry::kink(std::size_t component) const {
  return pair_.component_classes->at(component);
}

std::int64_t LooijengaGeometry::stratum_number(std::size_t component) const {
  auto it = pair_.curve_strata.find(BasisCone::from_indices({component}));
  require(it != pair_.curve_strata.end(), "missing-intersection-number",
          "no curve stratum data for " + pair_.components.at(component));
  auto jt = it->second.find(component);
  require(jt != it->second.end(), "missing-intersection-number",
          "no self-intersection for " + pair_.components.at(component));
  return jt->second;
}

LatticeVector LooijengaGeometry::to_next(std::size_t j, const LatticeVector& m) const {
  const std::size_t a = ray(j), b = ray(j + 1), c = ray(j + 2);
  for (std::size_t i = 0; i < m.size(); ++i)
    require(m[i] == 0 || i == a || i == b, "precondition", "vector not in the chamber chart");
  LatticeVector out(m.size());
  out[b] = m[b] - m[a] * stratum_number(b);
  out[c] = -m[a];
  return out;
}

LatticeVector LooijengaGeometry::to_prev(std::size_t j, const LatticeVector& m) const {
  const std::size_t a = ray(j), b = ray(j + 1), z = ray(j + rays_.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i)
    require(m[i] == 0 || i == a || i == b, "precondition", "vector not in the chamber chart");
  LatticeVector out(m.size());
  out[a] = m[a] - m[b] * stratum_number(a);
  out[z] = -m[b];
  return out;
}

std::vector<std::size_t> LooijengaGeometry::chambers_containing(BasisCone c) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < rays_.size(); ++j)
    if (c.is_face_of(chamber(j))) out.push_back(j);
  return out;
}

// ---------------------------------------------------------------- structure

WallStructure WallStructure::planar(TruncationIdeal ideal, std::vector<Wall> walls,
                                    std::vector<std::string> class_names) {
  WallStructure s;
  s.mode_ = StructureMode::planar;
  s.ideal_ = std::move(ideal);
  s.class_names_ = std::move(class_names);
  for (auto& w : walls) s.add_wall(std::move(w));
  return s;
}

WallStructure WallStructure::looijenga(const PairDescriptor& pair, TruncationIdeal ideal,
                                       std::vector<Wall> walls) {
  WallStructure s;
  s.mode_ = StructureMode::looijenga;
  require(ideal.rank() == pair.class_rank(), "dimension-mismatch",
          "truncation rank differs from the class rank");
  s.ideal_ = std::move(ideal);
  s.class_names_ = pair.class_names;
  s.geometry_ = LooijengaGeometry::from_pair(pair);
  for (auto& w : walls) s.add_wall(std::move(w));
  return s;
}

std::size_t WallStructure::lattice_rank() const {
  return mode_ == StructureMode::planar ? 2 : geometry_->lattice_rank();
}

const LooijengaGeometry& WallStructure::geometry() const {
  require(geometry_.has_value(), "precondition", "planar structures have no chamber geometry");
  return *geometry_;
}

void WallStructure::add_wall(Wall wall) {
  const std::size_t n = lattice_rank();
  const auto& u = wall.direction;
  require(u.size() == n, "dimension-mismatch", "wall direction has wrong length");
  require(!u.is_zero() && u.is_primitive(), "non-primitive-direction",
          to_string(u) + " is not a primitive vector");
  if (mode_ == StructureMode::looijenga) {
    require(!wall.line, "precondition", "looijenga walls are rays");
    require(u.is_nonnegative(), "not-in-complex", "wall direction must lie in B");
    auto c = support(u);
    require(c.size() <= 2 && geometry_->pair().num_components() == n &&
                !geometry_->chambers_containing(c).empty(),
            "not-in-complex", "wall direction " + to_string(u) + " lies in no chamber");
  }
  require(wall.fn.ideal().rank() == ideal_.rank() && wall.fn.lattice_rank() == n,
          "dimension-mismatch", "wall function has wrong shape");
  LaurentElement f(ideal_, n);
  for (const auto& [key, c] : wall.fn.terms()) f.add_term(key, c);
  require(f.constant_term() == 1, "precondition", "wall function must have constant term 1");
  for (const auto& [key, c] : f.terms()) {
    (void)c;
    if (key.beta.is_zero() && key.exponent.is_zero()) continue;
    require(ideal_.weight(key.beta) >= 1, "precondition",
            "wall term " + to_string(key.beta) + " is not in the maximal ideal");
    // exponent must be k u with k != 0
    std::int64_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (u[i] != 0) k = key.exponent[i] / u[i];
    require(k != 0 && key.exponent == k * u, "not-tangent",
            "exponent " + to_string(key.exponent) + " is not a multiple of " + to_string(u));
  }
  wall.fn = std::move(f);
  walls_.push_back(std::move(wall));
}

WallStructure WallStructure::with_ideal(const TruncationIdeal& ideal) const {
  WallStructure s = *this;
  s.ideal_ = ideal;
  s.walls_.clear();
  for (const auto& w : walls_) {
    Wall c = w;
    LaurentElement f(ideal, lattice_rank());
    for (const auto& [key, v] : w.fn.terms()) f.add_term(key, v);
    c.fn = std::move(f);
    s.walls_.push_back(std::move(c));
  }
  return s;
}

LaurentElement WallStructure::ray_function(std::size_t component) const {
  LaurentElement f = LaurentElement::one(ideal_, lattice_rank());
  const auto e = LatticeVector::unit(lattice_rank(), component);
  for (const auto& w : walls_)
    if (w.direction == e) f = f * w.fn;
  return f;
}

std::vector<std::size_t> WallStructure::interior_walls(std::size_t chamber) const {
  std::vector<std::size_t> out;
  if (mode_ != StructureMode::looijenga) return out;
  const auto c = geometry_->chamber(chamber);
  for (std::size_t i = 0; i < walls_.size(); ++i)
    if (support(walls_[i].direction) == c) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- crossings

namespace {

// f^a with f reduced into an ideal of the given bound.
LaurentElement power_with_bound(const LaurentElement& f, std::int64_t a, std::int64_t bound) {
  TruncationIdeal wide(f.ideal().weights(), bound);
  LaurentElement g(wide, f.lattice_rank());
  for (const auto& [key, c] : f.terms()) g.add_term(key, c);
  return g.pow(a);
}

// Multiplies c t^beta z^m by f^a and adds the result to out.
void add_times_power(LaurentElement& out, const Rational& c, const ClassVector& beta,
                     const LatticeVector& m, const LaurentElement& f, std::int64_t a,
                     std::map<std::pair<std::int64_t, std::int64_t>, LaurentElement>& cache) {
  const auto& ideal = out.ideal();
  const std::int64_t shift = ideal.weight(beta);
  if (shift >= ideal.bound()) return;
  const std::int64_t bound = ideal.bound() - shift;
  auto key = std::make_pair(a, bound);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, power_with_bound(f, a, bound)).first;
  for (const auto& [k, v] : it->second.terms())
    out.add_term({beta + k.beta, m + k.exponent}, c * v);
}

}  // namespace

LaurentElement cross_with_normal(const LaurentElement& f, const LatticeVector& n,
                                 const LaurentElement& x) {
  LaurentElement out(x.ideal(), x.lattice_rank());
  std::map<std::pair<std::int64_t, std::int64_t>, LaurentElement> cache;
  for (const auto& [key, c] : x.terms())
    add_times_power(out, c, key.beta, key.exponent, f, n.dot(key.exponent), cache);
  return out;
}

namespace {

LatticeVector planar_ccw_normal(const LatticeVector& u) { return LatticeVector{u[1], -u[0]}; }

}  // namespace

LaurentElement cross(const Wall& wall, const LaurentElement& x, int side) {
  require(wall.direction.size() == 2, "precondition", "planar crossing needs a planar wall");
  require(side == 1 || side == -1, "precondition", "side must be +1 or -1");
  return cross_with_normal(wall.fn, side * planar_ccw_normal(wall.direction), x);
}

LaurentElement cross_ray(const WallStructure& s, std::size_t chamber, bool forward,
                         const LaurentElement& x) {
  const auto& g = s.geometry();
  const std::size_t departing_extra = forward ? g.ray(chamber) : g.ray(chamber + 1);
  const std::size_t crossed = forward ? g.ray(chamber + 1) : g.ray(chamber);
  const ClassVector kappa = g.kink(crossed);
  const LaurentElement f = s.ray_function(crossed);
  LaurentElement out(x.ideal(), x.lattice_rank());
  std::map<std::pair<std::int64_t, std::int64_t>, LaurentElement> cache;
  for (const auto& [key, c] : x.terms()) {
    const std::int64_t a = key.exponent[departing_extra];
    LatticeVector m = forward ? g.to_next(chamber, key.exponent) : g.to_prev(chamber, key.exponent);
    add_times_power(out, c, key.beta + a * kappa, m, f, a, cache);
  }
  return out;
}

LaurentElement cross_interior(const WallStructure& s, const Wall& wall, bool ccw,
                              const LaurentElement& x) {
  const auto& g = s.geometry();
  auto chambers = g.chambers_containing(support(wall.direction));
  require(chambers.size() == 1, "precondition", "wall is not in the interior of a chamber");
  const std::size_t j = chambers.front();
  const std::size_t a = g.ray(j), b = g.ray(j + 1);
  LatticeVector n(x.lattice_rank());
  n[a] = wall.direction[b];
  n[b] = -wall.direction[a];
  if (!ccw) n = -n;
  return cross_with_normal(wall.fn, n, x);
}

// ---------------------------------------------------------------- loops

namespace {

// Counterclockwise angular order starting at the positive x-axis.
bool angle_less(const LatticeVector& u, const LatticeVector& v) {
  auto half = [](const LatticeVector& w) { return (w[1] > 0 || (w[1] == 0 && w[0] > 0)) ? 0 : 1; };
  if (half(u) != half(v)) return half(u) < half(v);
  return u[0] * v[1] - u[1] * v[0] > 0;
}

}  // namespace

LaurentElement PathOrderedProduct::apply(const LaurentElement& x) const {
  LaurentElement e = x;
  for (const auto& [u, f] : crossings) e = cross_with_normal(f, planar_ccw_normal(u), e);
  return e;
}

PathOrderedProduct loop_around_origin(const WallStructure& s) {
  require(s.mode() == StructureMode::planar, "precondition", "loop needs a planar structure");
  std::map<std::vector<std::int64_t>, LaurentElement> by_ray;
  auto add = [&](const LatticeVector& u, const LaurentElement& f) {
    auto [it, inserted] = by_ray.try_emplace(u.values(), f);
    if (!inserted) it->second = it->second * f;
  };
  for (const auto& w : s.walls()) {
    add(w.direction, w.fn);
    if (w.line) add(-w.direction, w.fn);
  }
  PathOrderedProduct loop;
  for (auto& [u, f] : by_ray) loop.crossings.emplace_back(LatticeVector(u), f);
  std::sort(loop.crossings.begin(), loop.crossings.end(),
            [](const auto& a, const auto& b) { return angle_less(a.first, b.first); });
  return loop;
}

// ---------------------------------------------------------------- consistency

namespace {

ConsistencyReport planar_consistency(const WallStructure& s) {
  ConsistencyReport report;
  auto loop = loop_around_origin(s);
  for (std::size_t i = 0; i < 2; ++i) {
    auto e = LatticeVector::unit(2, i);
    auto z = laurent_monomial(s.ideal(), ClassVector(s.ideal().rank()), e);
    auto image = loop.apply(z);
    ++report.checks;
    if (!(image == z)) {
      report.consistent = false;
      report.defects.push_back({"loop around the origin", e, z, image});
    }
  }
  return report;
}

struct Sample {
  Rational lambda;
  LaurentElement theta;
};

RationalPoint chamber_point(const LooijengaGeometry& g, std::size_t j, const Rational& lambda) {
  RationalPoint q(g.lattice_rank(), Rational(0));
  q[g.ray(j)] = 1 - lambda;
  q[g.ray(j + 1)] = lambda;
  return q;
}

// Direction parameter of a vector in the chamber (x e_a + y e_b -> y/(x+y)).
Rational lambda_of(const Rational& x, const Rational& y) { return y / (x + y); }

LaurentElement theta_at(const WallStructure& s, const LatticeVector& p, std::size_t j,
                        Rational lambda, const Rational& lo, const Rational& hi) {
  // Nudge away from directions that send a broken line through the origin.
  for (int attempt = 0; attempt < 16; ++attempt) {
    try {
      return theta_function(s, p, chamber_point(s.geometry(), j, lambda));
    } catch (const Error& e) {
      if (e.code() != "non-generic-endpoint") throw;
      lambda = (lambda * 7 + (attempt % 2 ? lo : hi)) / 8;
    }
  }
  fail("non-generic-endpoint", "no generic endpoint found in chamber " + std::to_string(j));
}

// Terms t^beta z^m on the far side of ray(j+1) whose preimage in chamber j
// has class weight below the bound; the others are lost to truncation in
// chamber j when the kink enters with a negative exponent.
LaurentElement reliable_after_ray(const WallStructure& s, std::size_t j, const LaurentElement& x) {
  const auto& g = s.geometry();
  const auto& ideal = s.ideal();
  const std::int64_t kink_weight = ideal.weight(g.kink(g.ray(j + 1)));
  LaurentElement out(ideal, x.lattice_rank());
  for (const auto& [key, c] : x.terms()) {
    const std::int64_t a = -key.exponent[g.ray(j + 2)];
    if (ideal.weight(key.beta) - a * kink_weight < ideal.bound()) out.add_term(key, c);
  }
  return out;
}

ConsistencyReport looijenga_consistency(const WallStructure& s, const ConsistencyOptions& o) {
  ConsistencyReport report;
  const auto& g = s.geometry();
  auto space = tropicalize(g.pair());
  const std::size_t N = g.num_chambers();
  for (const auto& p : integral_points(space.cy_sub, o.probe_height)) {
    if (p.is_zero()) continue;
    std::vector<std::vector<Sample>> samples(N);
    std::vector<std::map<Rational, std::size_t>> wall_at(N);  // lambda -> wall index
    for (std::size_t j = 0; j < N; ++j) {
      const std::size_t a = g.ray(j), b = g.ray(j + 1);
      std::set<Rational> crit;
      for (auto w : s.interior_walls(j)) {
        const auto& u = s.walls()[w].direction;
        Rational l = lambda_of(Rational(static_cast<long>(u[a])), Rational(static_cast<long>(u[b])));
        wall_at[j][l] = w;
        crit.insert(l);
      }
      for (int round = 0; round < 6; ++round) {
        std::vector<Rational> cuts{Rational(0)};
        cuts.insert(cuts.end(), crit.begin(), crit.end());
        cuts.push_back(Rational(1));
        samples[j].clear();
        bool grew = false;
        for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
          Rational mid = (cuts[k] + cuts[k + 1]) / 2;
          auto theta = theta_at(s, p, j, mid, cuts[k], cuts[k + 1]);
          for (const auto& [key, c] : theta.terms()) {
            (void)c;
            const auto& m = key.exponent;
            if (m[a] < 0 && m[b] < 0) {
              Rational l = lambda_of(Rational(static_cast<long>(-m[a])),
                                     Rational(static_cast<long>(-m[b])));
              grew = crit.insert(l).second || grew;
            }
          }
          samples[j].push_back({mid, std::move(theta)});
        }
        if (!grew) break;
      }
    }
    auto record = [&](const std::string& where, const LaurentElement& expected,
                      const LaurentElement& actual) {
      ++report.checks;
      if (!(expected == actual)) {
        report.consistent = false;
        report.defects.push_back({where, p, expected, actual});
      }
    };
    for (std::size_t j = 0; j < N; ++j) {
      const auto& row = samples[j];
      for (std::size_t k = 0; k + 1 < row.size(); ++k) {
        LaurentElement moved = row[k].theta;
        std::string where = "chamber " + to_string(g.chamber(j)) + " near lambda " +
                            to_string((row[k].lambda + row[k + 1].lambda) / 2);
        for (const auto& [l, w] : wall_at[j]) {
          if (row[k].lambda < l && l < row[k + 1].lambda) {
            moved = cross_interior(s, s.walls()[w], true, moved);
            where = "wall " + to_string(s.walls()[w].direction);
          }
        }
        record(where, row[k + 1].theta, moved);
      }
      const std::size_t next = (j + 1) % N;
      LaurentElement moved = cross_ray(s, j, true, row.back().theta);
      record("ray " + g.pair().components[g.ray(j + 1)],
             reliable_after_ray(s, j, samples[next].front().theta),
             reliable_after_ray(s, j, moved));
    }
  }
  return report;
}

}  // namespace

ConsistencyReport consistency_check(const WallStructure& s, const ConsistencyOptions& o) {
  if (s.mode() == StructureMode::planar) return planar_consistency(s);
  return looijenga_consistency(s, o);
}

WallStructure complete(const WallStructure& s, const ConsistencyOptions& o) {
  if (s.mode() == StructureMode::looijenga) {
    auto report = consistency_check(s, o);
    if (!report.consistent)
      fail("unsupported", "structure is inconsistent at " + report.defects.front().where +
                              "; only planar completion is implemented");
    return s;
  }
  const auto& ideal = s.ideal();
  WallStructure current = s;
  for (std::int64_t order = 1; order < ideal.bound(); ++order) {
    TruncationIdeal level(ideal.weights(), order + 1);
    auto loop = loop_around_origin(current.with_ideal(level));
    // defect coefficients on z^{e_1} and z^{e_2}
    std::map<LaurentKey, std::array<Rational, 2>> defect;
    for (std::size_t i = 0; i < 2; ++i) {
      auto e = LatticeVector::unit(2, i);
      auto z = laurent_monomial(level, ClassVector(level.rank()), e);
      auto zinv = laurent_monomial(level, ClassVector(level.rank()), -e);
      auto d = loop.apply(z) * zinv - LaurentElement::one(level, 2);
      for (const auto& [key, c] : d.terms()) {
        if (level.weight(key.beta) < order)
          throw std::logic_error("lower-order defect survived completion");
        defect[key][i] = c;
      }
    }
    std::map<std::vector<std::int64_t>, LaurentElement> added;
    for (const auto& [key, c] : defect) {
      const auto& m = key.exponent;
      require(!m.is_zero(), "not-fixable", "defect term without a monomial direction");
      require(c[0] * static_cast<long>(m[0]) + c[1] * static_cast<long>(m[1]) == 0,
              "not-fixable", "defect is not tangent to a ray");
      LatticeVector d = -m.primitive();
      LatticeVector n = planar_ccw_normal(d);
      Rational a = n[0] != 0 ? -c[0] / static_cast<long>(n[0]) : -c[1] / static_cast<long>(n[1]);
      auto it = added.try_emplace(d.values(), LaurentElement::one(ideal, 2)).first;
      it->second.add_term(key, a);
    }
    for (auto& [d, f] : added) {
      Wall w;
      w.direction = LatticeVector(d);
      w.fn = f;
      w.origin = "added";
      current.add_wall(std::move(w));
    }
  }
  // Merge added walls on the same ray.
  std::vector<Wall> initial;
  std::map<std::vector<std::int64_t>, LaurentElement> merged;
  for (const auto& w : current.walls()) {
    if (w.origin != "added") {
      initial.push_back(w);
      continue;
    }
    auto [it, inserted] = merged.try_emplace(w.direction.values(), w.fn);
    if (!inserted) it->second = it->second * w.fn;
  }
  for (auto& [d, f] : merged) initial.push_back({LatticeVector(d), false, f, "added"});
  auto out = WallStructure::planar(ideal, std::move(initial), s.class_names());
  if (!consistency_check(out, o).consistent)
    throw std::logic_error("planar completion did not converge");
  return out;
}

WallStructure canonical_walls(const PairDescriptor& pair,
                              const std::vector<CanonicalWallEntry>& entries,
                              const TruncationIdeal& ideal) {
  const std::size_t m = pair.num_components();
  std::map<std::vector<std::int64_t>, LaurentElement> logs;
  for (const auto& e : entries) {
    require(e.direction.size() == m && e.u.size() == m, "dimension-mismatch",
            "canonical wall entry has wrong length");
    auto [it, inserted] = logs.try_emplace(e.direction.primitive().values(), LaurentElement(ideal, m));
    it->second.add_term({e.beta, -e.u}, Rational(static_cast<long>(e.k)) * e.n);
  }
  std::vector<Wall> walls;
  for (auto& [d, x] : logs) {
    Wall w;
    w.direction = LatticeVector(d);
    w.fn = exp_nilpotent(x);
    w.origin = "canonical";
    walls.push_back(std::move(w));
  }
  return WallStructure::looijenga(pair, ideal, std::move(walls));
}

}  // namespace thetamirror
