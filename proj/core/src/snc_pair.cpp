#include "thetamirror/snc_pair.hpp"

#include <queue>
#include <set>

namespace thetamirror {

void PairDescriptor::validate() const {
  const std::size_t m = num_components();
  const std::size_t k = class_rank();
  require(m > 0, "precondition", "pair has no boundary components");
  require(m <= BasisCone::max_rank, "precondition", "at most 64 components are supported");
  require(dimension >= 1, "precondition", "dimension must be positive");
  require(intersection_matrix.size() == k, "precondition",
          "intersection matrix needs one row per class generator");
  for (const auto& row : intersection_matrix)
    require(row.size() == m, "precondition", "intersection matrix row has wrong length");
  require(discrepancies.size() == m, "precondition", "one discrepancy per component");
  for (auto a : discrepancies)
    require(a >= 0, "precondition", "discrepancies must be nonnegative");
  for (const auto& s : strata) {
    require(s.size() <= dimension, "precondition", "stratum of codimension > n");
    for (auto i : s) require(i < m, "precondition", "stratum index out of range");
  }
  for (const auto& [rho, numbers] : curve_strata) {
    require(rho.size() + 1 == dimension, "precondition",
            "curve stratum " + to_string(rho) + " is not of codimension n-1");
    for (const auto& [j, value] : numbers) {
      (void)value;
      require(rho.contains(j), "precondition", "curve stratum number for a foreign component");
    }
  }
  if (component_classes) {
    require(component_classes->size() == m, "precondition", "one component class per D_i");
    for (const auto& c : *component_classes)
      require(c.size() == k, "precondition", "component class has wrong rank");
  }
  if (central_fiber) {
    require(central_fiber->size() == m, "precondition", "central fiber has wrong length");
    for (std::size_t i = 0; i < m; ++i)
      require((*central_fiber)[i] > 0, "precondition", "fiber multiplicities must be positive");
    // Generators are fiber curves: X_0 . C_k = 0.
    for (std::size_t c = 0; c < k; ++c) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < m; ++i) s += (*central_fiber)[i] * intersection_matrix[c][i];
      require(s == 0, "precondition", "class " + class_names[c] + " meets the central fiber");
    }
  }
}

std::size_t PairDescriptor::component_index(const std::string& n) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i] == n) return i;
  fail("precondition", "unknown component '" + n + "'");
}

std::size_t PairDescriptor::class_index(const std::string& n) const {
  for (std::size_t i = 0; i < class_names.size(); ++i)
    if (class_names[i] == n) return i;
  fail("precondition", "unknown class '" + n + "'");
}

LatticeVector PairDescriptor::intersection_vector(const ClassVector& beta) const {
  require(beta.size() == class_rank(), "dimension-mismatch", "class has wrong rank");
  LatticeVector out(num_components());
  for (std::size_t c = 0; c < class_rank(); ++c)
    for (std::size_t i = 0; i < num_components(); ++i)
      out[i] += beta[c] * intersection_matrix[c][i];
  return out;
}

std::int64_t PairDescriptor::log_canonical_degree(const ClassVector& beta) const {
  auto v = intersection_vector(beta);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += discrepancies[i] * v[i];
  return s;
}

TropicalSpace tropicalize(const PairDescriptor& pair) {
  pair.validate();
  TropicalSpace t;
  t.n = pair.dimension;
  t.full = build_complex(pair.strata, pair.num_components(), pair.empty_intersections);
  std::set<BasisCone> sub;
  for (auto c : t.full.cones()) {
    bool ok = true;
    for (auto i : c.indices()) ok = ok && pair.is_log_calabi_yau_component(i);
    if (ok) sub.insert(c);
  }
  t.cy_sub = ConeComplex(pair.num_components(), std::move(sub));
  t.central_fiber = pair.central_fiber;
  return t;
}

bool maximality_check(const TropicalSpace& space) {
  for (auto c : space.cy_sub.maximal_cones())
    if (c.size() != space.n) return false;
  return true;
}

std::int64_t grading(const TropicalSpace& space, const LatticeVector& p) {
  require(space.central_fiber.has_value(), "absent-central-fiber",
          "grading needs a degeneration with a central fiber");
  require(space.full.contains_point(p), "not-in-complex", to_string(p) + " lies in no cone");
  return space.central_fiber->dot(p);
}

BasisCone stratum_of(const PairDescriptor& pair, const LatticeVector& p) {
  require(p.size() == pair.num_components(), "dimension-mismatch", "point has wrong length");
  auto c = support(p);
  auto complex = build_complex(pair.strata, pair.num_components(), pair.empty_intersections);
  require(complex.contains(c), "not-in-complex", to_string(p) + " lies in no stratum");
  return c;
}

bool dual_graph_connected(const TropicalSpace& space) {
  auto top = space.cy_sub.maximal_cones();
  if (top.empty()) return true;
  std::vector<bool> seen(top.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    auto a = todo.front();
    todo.pop();
    for (std::size_t b = 0; b < top.size(); ++b) {
      if (seen[b]) continue;
      auto common = top[a].intersect(top[b]);
      if (common.size() + 1 == top[a].size() && common.size() + 1 == top[b].size()) {
        seen[b] = true;
        todo.push(b);
      }
    }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

}  // namespace thetamirror
