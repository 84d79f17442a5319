#include "thetamirror/trop_types.hpp"

#include <algorithm>
#include <set>

#include "thetamirror/linalg.hpp"

namespace thetamirror {

void TropicalType::validate() const {
  require(rank > 0 && rank <= BasisCone::max_rank, "precondition", "bad lattice rank");
  for (const auto& v : vertices)
    for (auto i : v.cone.indices())
      require(i < rank, "precondition", "vertex cone uses an index >= m");
  for (const auto& e : edges) {
    require(e.from < vertices.size() && e.to < vertices.size(), "precondition",
            "edge endpoint out of range");
    require(e.slope.size() == rank, "dimension-mismatch", "edge slope has wrong length");
  }
  for (const auto& l : legs) {
    require(l.vertex < vertices.size(), "precondition", "leg vertex out of range");
    require(l.contact.size() == rank, "dimension-mismatch", "leg contact has wrong length");
    if (l.kind == LegKind::marked)
      require(l.contact.is_nonnegative(), "precondition",
              "marked leg " + l.name + " has a negative contact order");
  }
  if (fan_rays) {
    require(fan_rays->size() == rank, "precondition", "one fan ray per component");
    for (const auto& r : *fan_rays)
      require(r.size() == fan_rays->front().size(), "precondition", "ragged fan rays");
  }
}

bool node_equation_check(const TropicalType& type, const TropAssignment& a) {
  type.validate();
  require(a.positions.size() == type.vertices.size(), "precondition", "one position per vertex");
  require(a.lengths.size() == type.edges.size(), "precondition", "one length per edge");
  for (std::size_t v = 0; v < type.vertices.size(); ++v) {
    const auto& x = a.positions[v];
    require(x.size() == type.rank, "dimension-mismatch", "position has wrong length");
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0) return false;
      if (x[i] != 0 && !type.vertices[v].cone.contains(i)) return false;
    }
  }
  for (std::size_t k = 0; k < type.edges.size(); ++k) {
    const auto& e = type.edges[k];
    if (a.lengths[k] < 0) return false;
    for (std::size_t i = 0; i < type.rank; ++i) {
      Rational lhs = a.positions[e.to][i] - a.positions[e.from][i];
      if (lhs != a.lengths[k] * Rational(static_cast<long>(e.slope[i]))) return false;
    }
  }
  return true;
}

ModuliCone basic_monoid(const TropicalType& type) {
  type.validate();
  ModuliCone cone;
  // variable index of (vertex, coordinate)
  std::vector<std::vector<long>> var(type.vertices.size(), std::vector<long>(type.rank, -1));
  std::size_t sum_dims = 0;
  for (std::size_t v = 0; v < type.vertices.size(); ++v) {
    for (auto i : type.vertices[v].cone.indices()) {
      var[v][i] = static_cast<long>(cone.variables.size());
      cone.variables.push_back(type.vertices[v].name + "." + std::to_string(i));
    }
    sum_dims += type.vertices[v].cone.size();
  }
  const std::size_t first_length = cone.variables.size();
  for (std::size_t k = 0; k < type.edges.size(); ++k)
    cone.variables.push_back("l" + std::to_string(k));
  const std::size_t n = cone.variables.size();
  require(n <= 20, "too-large", "moduli cone with more than 20 variables");

  for (std::size_t k = 0; k < type.edges.size(); ++k) {
    const auto& e = type.edges[k];
    for (std::size_t i = 0; i < type.rank; ++i) {
      std::vector<Rational> row(n, Rational(0));
      if (var[e.to][i] >= 0) row[var[e.to][i]] += 1;
      if (var[e.from][i] >= 0) row[var[e.from][i]] -= 1;
      row[first_length + k] -= Rational(static_cast<long>(e.slope[i]));
      bool nonzero = std::any_of(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
      if (nonzero) cone.equations.push_back(std::move(row));
    }
  }
  const std::size_t rk = linalg::rank(cone.equations);
  cone.linear_dimension = sum_dims + type.edges.size() - rk;

  // Extreme rays of {x >= 0, A x = 0}: minimal supports with a
  // one-dimensional kernel whose generator is positive on the support.
  std::set<std::vector<std::int64_t>> rays;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) cols.push_back(j);
    linalg::RationalMatrix sub;
    for (const auto& row : cone.equations) {
      std::vector<Rational> r;
      for (auto j : cols) r.push_back(row[j]);
      sub.push_back(std::move(r));
    }
    auto ker = linalg::nullspace(sub, cols.size());
    if (ker.size() != 1) continue;
    auto& g = ker.front();
    bool pos = std::all_of(g.begin(), g.end(), [](const Rational& x) { return x > 0; });
    bool neg = std::all_of(g.begin(), g.end(), [](const Rational& x) { return x < 0; });
    if (!pos && !neg) continue;
    std::vector<Rational> full(n, Rational(0));
    for (std::size_t t = 0; t < cols.size(); ++t) full[cols[t]] = pos ? g[t] : Rational(-g[t]);
    rays.insert(linalg::primitive_integer(full));
  }
  cone.rays.assign(rays.begin(), rays.end());
  linalg::RationalMatrix rm;
  for (const auto& r : cone.rays) {
    std::vector<Rational> row;
    for (auto x : r) row.emplace_back(static_cast<long>(x));
    rm.push_back(std::move(row));
  }
  cone.dimension = linalg::rank(rm);
  return cone;
}

BalancingReport balancing_check(const TropicalType& type) {
  type.validate();
  const std::size_t dim = type.fan_rays ? type.fan_rays->front().size() : type.rank;
  auto push = [&](const LatticeVector& u) {
    std::vector<std::int64_t> out(dim, 0);
    for (std::size_t i = 0; i < type.rank; ++i) {
      if (type.fan_rays) {
        for (std::size_t c = 0; c < dim; ++c) out[c] += u[i] * (*type.fan_rays)[i][c];
      } else {
        out[i] += u[i];
      }
    }
    return out;
  };
  BalancingReport report;
  report.residuals.assign(type.vertices.size(), std::vector<std::int64_t>(dim, 0));
  auto add = [&](std::size_t v, const LatticeVector& u, std::int64_t sign) {
    auto w = push(u);
    for (std::size_t c = 0; c < dim; ++c) report.residuals[v][c] += sign * w[c];
  };
  for (const auto& e : type.edges) {
    add(e.from, e.slope, 1);
    add(e.to, e.slope, -1);
  }
  for (const auto& l : type.legs) add(l.vertex, l.contact, 1);
  for (const auto& r : report.residuals)
    for (auto x : r)
      if (x != 0) report.balanced = false;
  return report;
}

bool WeightCone::contains(const std::vector<std::int64_t>& a) const {
  require(a.size() == rank, "dimension-mismatch", "vector has wrong rank");
  for (const auto& w : inequalities) {
    require(w.size() == rank, "dimension-mismatch", "inequality has wrong rank");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < rank; ++i) s += w[i] * a[i];
    if (s < 0) return false;
  }
  return true;
}

bool puncture_membership(const std::vector<std::int64_t>& a, std::int64_t b, const WeightCone& q) {
  require(a.size() == q.rank, "dimension-mismatch", "vector has wrong rank");
  return b != 0 || q.contains(a);
}

std::vector<std::array<std::int64_t, 2>> s_ell_generators(std::int64_t ell) {
  require(ell >= 0, "precondition", "ell must be nonnegative");
  return {{-1, ell}, {0, 1}, {1, 0}};
}

bool s_ell_contains(std::int64_t ell, std::int64_t a, std::int64_t b) {
  require(ell >= 0, "precondition", "ell must be nonnegative");
  if (b < 0) return false;
  if (ell == 0) return true;
  return ell * a + b >= 0;
}

}  // namespace thetamirror
