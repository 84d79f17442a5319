#include "thetamirror/broken_lines.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace thetamirror {

std::string to_string(const RationalPoint& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x[i]);
  }
  return s + ")";
}

namespace {

Rational qz(std::int64_t v) { return Rational(static_cast<long>(v)); }

RationalPoint add_scaled(const RationalPoint& x, const Rational& t, const LatticeVector& m) {
  RationalPoint y = x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t * qz(m[i]);
  return y;
}

// Terms of f^a as (beta, exponent, coefficient), cached per (wall, a).
using TermList = std::vector<std::tuple<ClassVector, LatticeVector, Rational>>;

class PowerCache {
 public:
  const TermList& get(const void* id, const LaurentElement& f, std::int64_t a) {
    auto key = std::make_pair(id, a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    TermList terms;
    const LaurentElement power = f.pow(a);
    for (const auto& [k, c] : power.terms()) terms.emplace_back(k.beta, k.exponent, c);
    return cache_.emplace(key, std::move(terms)).first->second;
  }

 private:
  std::map<std::pair<const void*, std::int64_t>, TermList> cache_;
};

struct Transition {
  Rational coeff;
  ClassVector dbeta;
};

struct Ctx {
  const WallStructure& s;
  const LatticeVector& p;
  const RationalPoint& q;
  const EnumerationOptions& o;
  PowerCache powers;
  std::vector<LaurentElement> ray_fns;  // looijenga: per component; planar: per crossing ray
  std::vector<std::pair<LatticeVector, const LaurentElement*>> planar_rays;
  std::size_t steps = 0;
  std::vector<BrokenLine> out;
  // backward stacks
  std::vector<LineSegment> segs;  // coefficient/beta filled at emission
  std::vector<Transition> trans;
};

[[noreturn]] void non_generic(const std::string& why) { fail("non-generic-endpoint", why); }

void emit(Ctx& ctx) {
  BrokenLine line;
  line.asymptotic = ctx.p;
  line.endpoint = ctx.q;
  line.segments.assign(ctx.segs.rbegin(), ctx.segs.rend());
  Rational c = 1;
  ClassVector beta(ctx.s.ideal().rank());
  const std::size_t n = line.segments.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      // transitions are stored backward: the one before segment k (forward)
      const auto& t = ctx.trans[n - 1 - k];
      c *= t.coeff;
      beta += t.dbeta;
    }
    line.segments[k].coefficient = c;
    line.segments[k].beta = beta;
  }
  ctx.out.push_back(std::move(line));
}

void tick(Ctx& ctx) {
  if (++ctx.steps > ctx.o.max_steps) fail("step-limit", "broken line enumeration did not terminate");
}

// ---- looijenga backward trace

void trace_looijenga(Ctx& ctx, std::size_t j, const RationalPoint& x, const LatticeVector& m,
                     const ClassVector& beta) {
  tick(ctx);
  const auto& g = ctx.s.geometry();
  const auto& ideal = ctx.s.ideal();
  const std::size_t a = g.ray(j), b = g.ray(j + 1);
  const Rational xa = x[a], xb = x[b];
  const Rational ma = qz(m[a]), mb = qz(m[b]);

  enum class Kind { none, prev_ray, next_ray, wall };
  Kind kind = Kind::none;
  Rational best;
  std::size_t best_wall = 0;
  bool tie = false;
  auto consider = [&](const Rational& t, Kind k, std::size_t w) {
    if (t <= 0) return;
    if (kind == Kind::none || t < best) {
      best = t;
      kind = k;
      best_wall = w;
      tie = false;
    } else if (t == best) {
      tie = true;
    }
  };
  if (mb < 0) consider(xb / (-mb), Kind::prev_ray, 0);
  if (ma < 0) consider(xa / (-ma), Kind::next_ray, 0);
  for (auto w : ctx.s.interior_walls(j)) {
    const auto& u = ctx.s.walls()[w].direction;
    Rational d = ma * qz(u[b]) - mb * qz(u[a]);
    if (d == 0) continue;
    consider(-(xa * qz(u[b]) - xb * qz(u[a])) / d, Kind::wall, w);
  }
  if (tie) non_generic("broken line meets two walls at once");

  if (kind == Kind::none) {
    if (m == ctx.p) {
      ctx.segs.push_back({j, std::nullopt, x, Rational(0), beta, m});
      emit(ctx);
      ctx.segs.pop_back();
    }
    return;
  }
  const RationalPoint y = add_scaled(x, best, m);
  if (y[a] == 0 && y[b] == 0) non_generic("broken line through the origin");
  ctx.segs.push_back({j, y, x, Rational(0), beta, m});

  auto recurse = [&](std::size_t j2, const LatticeVector& m2, const ClassVector& beta2,
                     const Rational& c, const ClassVector& dbeta) {
    if (m2.is_zero() || ideal.contains(beta2)) return;
    ctx.trans.push_back({c, dbeta});
    trace_looijenga(ctx, j2, y, m2, beta2);
    ctx.trans.pop_back();
  };

  if (kind == Kind::wall) {
    const auto& wall = ctx.s.walls()[best_wall];
    const auto& u = wall.direction;
    Rational d = ma * qz(u[b]) - mb * qz(u[a]);
    const std::int64_t amount = Rational(abs(d)).get_num().get_si();
    for (const auto& [be, e, c] : ctx.powers.get(&wall, wall.fn, amount))
      recurse(j, m - e, beta + be, c, be);
  } else {
    const bool next = kind == Kind::next_ray;
    const std::size_t crossed = next ? b : a;
    const std::int64_t amount = next ? -m[a] : -m[b];
    const ClassVector kink = amount * g.kink(crossed);
    const std::size_t j2 = next ? j + 1 : j + g.num_chambers() - 1;
    const auto& f = ctx.ray_fns[crossed];
    for (const auto& [be, e, c] : ctx.powers.get(&f, f, amount)) {
      LatticeVector m2 = next ? g.to_next(j, m - e) : g.to_prev(j, m - e);
      recurse(j2 % g.num_chambers(), m2, beta + be + kink, c, be + kink);
    }
  }
  ctx.segs.pop_back();
}

// ---- planar backward trace

Rational det(const RationalPoint& x, const LatticeVector& u) {
  return x[0] * qz(u[1]) - x[1] * qz(u[0]);
}

void trace_planar(Ctx& ctx, const RationalPoint& x, const LatticeVector& m,
                  const ClassVector& beta) {
  tick(ctx);
  const auto& ideal = ctx.s.ideal();
  RationalPoint mq{qz(m[0]), qz(m[1])};
  // through the origin?
  if (x[0] * mq[1] - x[1] * mq[0] == 0 && x[0] * mq[0] + x[1] * mq[1] < 0)
    non_generic("broken line through the origin");
  bool found = false, tie = false;
  Rational best;
  std::size_t best_ray = 0;
  for (std::size_t r = 0; r < ctx.planar_rays.size(); ++r) {
    const auto& u = ctx.planar_rays[r].first;
    Rational d = mq[0] * qz(u[1]) - mq[1] * qz(u[0]);
    if (d == 0) continue;
    Rational t = -det(x, u) / d;
    if (t <= 0) continue;
    RationalPoint y = add_scaled(x, t, m);
    if (y[0] * qz(u[0]) + y[1] * qz(u[1]) <= 0) continue;
    if (!found || t < best) {
      found = true;
      best = t;
      best_ray = r;
      tie = false;
    } else if (t == best) {
      tie = true;
    }
  }
  if (tie) non_generic("broken line meets two walls at once");
  if (!found) {
    if (m == ctx.p) {
      ctx.segs.push_back({0, std::nullopt, x, Rational(0), beta, m});
      emit(ctx);
      ctx.segs.pop_back();
    }
    return;
  }
  const RationalPoint y = add_scaled(x, best, m);
  ctx.segs.push_back({0, y, x, Rational(0), beta, m});
  const auto& [u, f] = ctx.planar_rays[best_ray];
  Rational d = mq[0] * qz(u[1]) - mq[1] * qz(u[0]);
  const std::int64_t amount = Rational(abs(d)).get_num().get_si();
  for (const auto& [be, e, c] : ctx.powers.get(f, *f, amount)) {
    LatticeVector m2 = m - e;
    ClassVector beta2 = beta + be;
    if (m2.is_zero() || ideal.contains(beta2)) continue;
    ctx.trans.push_back({c, be});
    trace_planar(ctx, y, m2, beta2);
    ctx.trans.pop_back();
  }
  ctx.segs.pop_back();
}

// ---- forward closure of reachable final exponents

std::set<LatticeVector> reachable_exponents(Ctx& ctx, std::size_t target_chamber) {
  const auto& s = ctx.s;
  const auto& ideal = s.ideal();
  std::set<LatticeVector> result;
  if (s.mode() == StructureMode::planar) {
    std::set<std::pair<LatticeVector, ClassVector>> seen;
    std::vector<std::pair<LatticeVector, ClassVector>> todo{{ctx.p, ClassVector(ideal.rank())}};
    seen.insert(todo.front());
    while (!todo.empty()) {
      auto [m, beta] = todo.back();
      todo.pop_back();
      tick(ctx);
      result.insert(m);
      for (const auto& [u, f] : ctx.planar_rays) {
        std::int64_t d = m[0] * u[1] - m[1] * u[0];
        if (d == 0) continue;
        for (const auto& [be, e, c] : ctx.powers.get(f, *f, d < 0 ? -d : d)) {
          (void)c;
          if (e.is_zero()) continue;
          std::pair<LatticeVector, ClassVector> next{m + e, beta + be};
          if (ideal.contains(next.second) || next.first.is_zero()) continue;
          if (seen.insert(next).second) todo.push_back(next);
        }
      }
    }
    return result;
  }
  const auto& g = s.geometry();
  const std::size_t N = g.num_chambers();
  using State = std::tuple<std::size_t, LatticeVector, ClassVector>;
  std::set<State> seen;
  std::vector<State> todo;
  for (auto j : g.chambers_containing(support(ctx.p))) {
    State st{j, ctx.p, ClassVector(ideal.rank())};
    if (seen.insert(st).second) todo.push_back(st);
  }
  auto push = [&](std::size_t j, const LatticeVector& m, const ClassVector& beta) {
    if (ideal.contains(beta) || m.is_zero()) return;
    State st{j % N, m, beta};
    if (seen.insert(st).second) todo.push_back(st);
  };
  while (!todo.empty()) {
    auto [j, m, beta] = todo.back();
    todo.pop_back();
    tick(ctx);
    if (j == target_chamber) result.insert(m);
    const std::size_t a = g.ray(j), b = g.ray(j + 1);
    for (auto w : s.interior_walls(j)) {
      const auto& wall = s.walls()[w];
      const auto& u = wall.direction;
      std::int64_t d = m[a] * u[b] - m[b] * u[a];
      if (d == 0) continue;
      for (const auto& [be, e, c] : ctx.powers.get(&wall, wall.fn, d < 0 ? -d : d)) {
        (void)c;
        if (!e.is_zero()) push(j, m + e, beta + be);
      }
    }
    if (m[a] > 0) {
      const auto& f = ctx.ray_fns[b];
      const ClassVector kink = m[a] * g.kink(b);
      for (const auto& [be, e, c] : ctx.powers.get(&f, f, m[a])) {
        (void)c;
        push(j + 1, g.to_next(j, m) + e, beta + be + kink);
      }
    }
    if (m[b] > 0) {
      const auto& f = ctx.ray_fns[a];
      const ClassVector kink = m[b] * g.kink(a);
      for (const auto& [be, e, c] : ctx.powers.get(&f, f, m[b])) {
        (void)c;
        push(j + N - 1, g.to_prev(j, m) + e, beta + be + kink);
      }
    }
  }
  return result;
}

void prepare(Ctx& ctx) {
  const auto& s = ctx.s;
  if (s.mode() == StructureMode::planar) return;
  const auto& g = s.geometry();
  for (std::size_t i = 0; i < g.lattice_rank(); ++i) {
    ctx.ray_fns.push_back(s.ray_function(i));
  }
  for (std::size_t j = 0; j < g.num_chambers(); ++j)
    require(s.ideal().weight(g.kink(g.ray(j))) >= 1, "precondition",
            "kink classes must have positive weight");
}

}  // namespace

std::size_t chamber_of(const WallStructure& s, const RationalPoint& x) {
  const auto& g = s.geometry();
  require(x.size() == g.lattice_rank(), "dimension-mismatch", "point has wrong length");
  for (std::size_t j = 0; j < g.num_chambers(); ++j) {
    const std::size_t a = g.ray(j), b = g.ray(j + 1);
    bool ok = x[a] > 0 && x[b] > 0;
    for (std::size_t i = 0; i < x.size() && ok; ++i)
      if (i != a && i != b && x[i] != 0) ok = false;
    if (ok) return j;
  }
  non_generic(to_string(x) + " is not in the interior of a chamber");
}

std::vector<BrokenLine> enumerate(const WallStructure& s, const LatticeVector& p,
                                  const RationalPoint& q, const EnumerationOptions& o) {
  require(p.size() == s.lattice_rank() && q.size() == s.lattice_rank(), "dimension-mismatch",
          "p and Q must live in the structure's lattice");
  Ctx ctx{s, p, q, o, {}, {}, {}, 0, {}, {}, {}};
  auto loop = s.mode() == StructureMode::planar ? loop_around_origin(s) : PathOrderedProduct{};
  for (const auto& [u, f] : loop.crossings) ctx.planar_rays.emplace_back(u, &f);
  prepare(ctx);

  std::size_t j = 0;
  if (s.mode() == StructureMode::looijenga) {
    require(s.geometry().pair().num_components() == p.size(), "dimension-mismatch", "");
    require(p.is_nonnegative() && tropicalize(s.geometry().pair()).cy_sub.contains(support(p)),
            "not-in-complex", to_string(p) + " is not in B(Z)");
    j = chamber_of(s, q);
    for (auto w : s.interior_walls(j)) {
      const auto& u = s.walls()[w].direction;
      const std::size_t a = s.geometry().ray(j), b = s.geometry().ray(j + 1);
      if (q[a] * qz(u[b]) - q[b] * qz(u[a]) == 0) non_generic("endpoint lies on a wall");
    }
  } else {
    require(!(q[0] == 0 && q[1] == 0), "non-generic-endpoint", "endpoint is the origin");
    for (const auto& [u, f] : ctx.planar_rays)
      if (det(q, u) == 0 && q[0] * qz(u[0]) + q[1] * qz(u[1]) > 0)
        non_generic("endpoint lies on a wall");
  }

  if (p.is_zero()) {
    ctx.out.push_back({p, q, {{j, std::nullopt, q, Rational(1), ClassVector(s.ideal().rank()), p}}});
    return ctx.out;
  }
  for (const auto& m : reachable_exponents(ctx, j)) {
    if (s.mode() == StructureMode::planar)
      trace_planar(ctx, q, m, ClassVector(s.ideal().rank()));
    else
      trace_looijenga(ctx, j, q, m, ClassVector(s.ideal().rank()));
  }
  // canonical order: by final (beta, exponent), then by length
  std::sort(ctx.out.begin(), ctx.out.end(), [](const BrokenLine& x, const BrokenLine& y) {
    auto kx = std::tie(x.last().beta, x.last().exponent);
    auto ky = std::tie(y.last().beta, y.last().exponent);
    if (kx != ky) return kx < ky;
    return x.segments.size() < y.segments.size();
  });
  return ctx.out;
}

LaurentElement theta_function(const WallStructure& s, const LatticeVector& p,
                              const RationalPoint& q, const EnumerationOptions& o) {
  LaurentElement f(s.ideal(), s.lattice_rank());
  for (const auto& line : enumerate(s, p, q, o))
    f.add_term({line.last().beta, line.last().exponent}, line.last().coefficient);
  return f;
}

namespace {

bool same_point(const RationalPoint& a, const RationalPoint& b) { return a == b; }

// Does the open segment (x, y) or, if y is empty, the ray x + s*dir (s > 0)
// cross a wall transversally away from its ends?
bool crosses_wall_inside(const WallStructure& s, std::size_t chamber, const RationalPoint& x,
                         const std::optional<RationalPoint>& y, const LatticeVector& dir) {
  std::vector<LatticeVector> dirs;
  if (s.mode() == StructureMode::planar) {
    for (const auto& [u, f] : loop_around_origin(s).crossings) dirs.push_back(u);
  } else {
    for (auto w : s.interior_walls(chamber)) dirs.push_back(s.walls()[w].direction);
  }
  for (const auto& u : dirs) {
    // parametrize z(t) = x + t*(y - x) or x + t*dir
    RationalPoint v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) v[i] = y ? (*y)[i] - x[i] : qz(dir[i]);
    std::size_t a = 0, b = 1;
    if (s.mode() == StructureMode::looijenga) {
      a = s.geometry().ray(chamber);
      b = s.geometry().ray(chamber + 1);
    }
    Rational dv = v[a] * qz(u[b]) - v[b] * qz(u[a]);
    if (dv == 0) continue;
    Rational dx = x[a] * qz(u[b]) - x[b] * qz(u[a]);
    Rational t = -dx / dv;
    if (t <= 0 || (y && t >= 1)) continue;
    Rational za = x[a] + t * v[a], zb = x[b] + t * v[b];
    if (za * qz(u[a]) + zb * qz(u[b]) > 0) return true;
  }
  return false;
}

}  // namespace

bool verify_broken_line(const WallStructure& s, const BrokenLine& line) {
  const auto& segs = line.segments;
  if (segs.empty()) return false;
  const auto& ideal = s.ideal();
  const std::size_t rank = s.lattice_rank();
  if (segs.front().start || segs.front().exponent != line.asymptotic ||
      segs.front().coefficient != 1 || !segs.front().beta.is_zero())
    return false;
  if (!same_point(segs.back().end, line.endpoint)) return false;
  if (line.asymptotic.is_zero()) return segs.size() == 1;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    const auto& sg = segs[k];
    // direction of travel is -exponent
    if (sg.start) {
      Rational lambda;
      bool have = false;
      for (std::size_t i = 0; i < rank; ++i) {
        Rational diff = sg.end[i] - (*sg.start)[i];
        if (sg.exponent[i] == 0) {
          if (diff != 0) return false;
          continue;
        }
        Rational l = -diff / qz(sg.exponent[i]);
        if (have && l != lambda) return false;
        lambda = l;
        have = true;
      }
      if (!have || lambda <= 0) return false;
    }
    if (crosses_wall_inside(s, sg.chamber, sg.end, sg.start,
                            sg.start ? LatticeVector(rank) : sg.exponent))
      return false;
    if (k + 1 == segs.size()) break;
    const auto& nx = segs[k + 1];
    if (!nx.start || !same_point(*nx.start, sg.end)) return false;
    const RationalPoint& y = sg.end;
    auto mono = laurent_monomial(ideal, sg.beta, sg.exponent, sg.coefficient);
    LaurentElement image(ideal, rank);
    bool located = false;
    if (s.mode() == StructureMode::planar) {
      for (const auto& [u, f] : loop_around_origin(s).crossings) {
        if (det(y, u) != 0 || y[0] * qz(u[0]) + y[1] * qz(u[1]) <= 0) continue;
        LatticeVector n{u[1], -u[0]};
        if (n.dot(sg.exponent) < 0) n = -n;
        image = cross_with_normal(f, n, mono);
        located = true;
      }
    } else {
      const auto& g = s.geometry();
      const std::size_t j = sg.chamber, N = g.num_chambers();
      if (nx.chamber == j) {
        for (auto w : s.interior_walls(j)) {
          const auto& u = s.walls()[w].direction;
          const std::size_t a = g.ray(j), b = g.ray(j + 1);
          if (y[a] * qz(u[b]) - y[b] * qz(u[a]) != 0) continue;
          const bool ccw = sg.exponent[a] * u[b] - sg.exponent[b] * u[a] > 0;
          image = cross_interior(s, s.walls()[w], ccw, mono);
          located = true;
        }
      } else if (nx.chamber == (j + 1) % N) {
        if (y[g.ray(j)] != 0) return false;
        image = cross_ray(s, j, true, mono);
        located = true;
      } else if (nx.chamber == (j + N - 1) % N) {
        if (y[g.ray(j + 1)] != 0) return false;
        image = cross_ray(s, j, false, mono);
        located = true;
      }
    }
    if (!located) return false;
    if (image.coefficient({nx.beta, nx.exponent}) != nx.coefficient) return false;
  }
  return true;
}

// ---- theta products

namespace {

std::vector<LatticeVector> product_range(const WallStructure& s, const LatticeVector& p,
                                         const LatticeVector& q, std::int64_t extra) {
  std::vector<LatticeVector> out;
  if (s.mode() == StructureMode::looijenga) {
    auto space = tropicalize(s.geometry().pair());
    return integral_points(space.cy_sub, p.sum() + q.sum() + extra);
  }
  auto l1 = [](const LatticeVector& v) { return std::abs(v[0]) + std::abs(v[1]); };
  const std::int64_t h = l1(p) + l1(q) + extra;
  for (std::int64_t x = -h; x <= h; ++x)
    for (std::int64_t y = -h; y <= h; ++y)
      if (std::abs(x) + std::abs(y) <= h) out.push_back(LatticeVector{x, y});
  return out;
}

// Small positive rational in [1, 9] / den from the generator.
Rational draw(std::mt19937_64& rng, long den) {
  return make_rational(static_cast<std::int64_t>(rng() % 9 + 1), den);
}

RationalPoint sample_near(const WallStructure& s, const LatticeVector& r, std::size_t k,
                          std::mt19937_64& rng) {
  const Rational eps(1, static_cast<unsigned long>(500 + rng() % 500));
  RationalPoint x(s.lattice_rank());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = qz(r[i]);
  const bool origin = r.is_zero();
  const Rational scale = origin ? Rational(1) : eps;
  if (s.mode() == StructureMode::planar) {
    x[0] += scale * (draw(rng, 1) - Rational(5)) / 4;
    x[1] += scale * (draw(rng, 1) - Rational(5)) / 4;
    return x;
  }
  const auto& g = s.geometry();
  auto chambers = g.chambers_containing(support(r));
  const std::size_t j = chambers[k % chambers.size()];
  x[g.ray(j)] += scale * draw(rng, 1);
  x[g.ray(j + 1)] += scale * draw(rng, 1);
  return x;
}

}  // namespace

std::vector<ProductTerm> theta_product(const WallStructure& s, const LatticeVector& p,
                                       const LatticeVector& q, const ThetaProductOptions& o) {
  require(o.samples >= 1, "precondition", "at least one endpoint sample is needed");
  std::mt19937_64 rng(o.seed);
  const auto& ideal = s.ideal();
  std::vector<ProductTerm> out;
  for (const auto& r : product_range(s, p, q, o.extra_height)) {
    std::optional<LaurentElement> agreed;
    for (std::size_t k = 0; k < o.samples; ++k) {
      std::vector<BrokenLine> lp, lq;
      RationalPoint x;
      for (int attempt = 0;; ++attempt) {
        x = sample_near(s, r, k, rng);
        try {
          lp = enumerate(s, p, x);
          lq = enumerate(s, q, x);
          break;
        } catch (const Error& e) {
          if (e.code() != "non-generic-endpoint" || attempt > 50) throw;
        }
      }
      // collect alpha as a Laurent element with exponent 0 for comparison
      LaurentElement alpha(ideal, s.lattice_rank());
      for (const auto& a : lp)
        for (const auto& b : lq)
          if (a.last().exponent + b.last().exponent == r)
            alpha.add_term({a.last().beta + b.last().beta, LatticeVector(s.lattice_rank())},
                           a.last().coefficient * b.last().coefficient);
      if (!agreed) {
        agreed = alpha;
      } else if (!(*agreed == alpha)) {
        fail("inconsistent-structure", "theta product coefficient at r = " + to_string(r) +
                                           " depends on the endpoint (" + to_string(x) + ")");
      }
    }
    TruncatedSeries c(ideal);
    for (const auto& [key, v] : agreed->terms()) {
      require(key.beta.is_nonnegative(), "inconsistent-structure",
              "structure constant with non-effective class at r = " + to_string(r));
      c.add_term(key.beta, v);
    }
    if (!c.is_zero()) out.push_back({r, std::move(c)});
  }
  return out;
}

}  // namespace thetamirror
