#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "thetamirror/cone_complex.hpp"
#include "thetamirror/rational.hpp"

namespace thetamirror {

enum class LegKind { marked, punctured };

struct TropVertex {
  std::string name;
  BasisCone cone;
};

// Oriented edge; the slope u points from `from` to `to`.
struct TropEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  LatticeVector slope;
};

struct TropLeg {
  std::string name;
  std::size_t vertex = 0;
  LatticeVector contact;  // u_p; negative entries for punctures
  LegKind kind = LegKind::marked;
};

// Combinatorial type of a punctured tropical map to Sigma(X) in Div^*
// coordinates. `fan_rays`, if set, maps D_i^* to the toric fan ray in N.
struct TropicalType {
  std::size_t rank = 0;  // m
  std::vector<TropVertex> vertices;
  std::vector<TropEdge> edges;
  std::vector<TropLeg> legs;
  std::optional<std::vector<std::vector<std::int64_t>>> fan_rays;

  void validate() const;
};

// Positions V_eta (in R^m, supported on the vertex cone) and edge lengths.
struct TropAssignment {
  std::vector<std::vector<Rational>> positions;
  std::vector<Rational> lengths;
};

// V_to - V_from = length * u on every edge, positions in their cones.
bool node_equation_check(const TropicalType& type, const TropAssignment& a);

// Cone of all realizations { x >= 0 : node equations } with coordinates
// (vertex coordinates on their cones, then edge lengths).
struct ModuliCone {
  std::vector<std::string> variables;
  std::vector<std::vector<Rational>> equations;
  std::size_t dimension = 0;
  std::size_t linear_dimension = 0;  // sum dim sigma_eta + #edges - rank
  std::vector<std::vector<std::int64_t>> rays;  // extreme rays, primitive
};

// Throws Error("too-large") beyond 20 variables.
ModuliCone basic_monoid(const TropicalType& type);

struct BalancingReport {
  bool balanced = true;
  std::vector<std::vector<std::int64_t>> residuals;  // per vertex, in N
};

// Toric balancing: outgoing slopes pushed to N sum to zero at each vertex.
// Without fan rays the Div^* coordinates are used directly.
BalancingReport balancing_check(const TropicalType& type);

// Q given by inequalities W a >= 0 on Z^k.
struct WeightCone {
  std::vector<std::vector<std::int64_t>> inequalities;
  std::size_t rank = 0;
  bool contains(const std::vector<std::int64_t>& a) const;
};

// Membership of (a, b) in { (a, b) in Q^gp + Z : b = 0 implies a in Q }.
bool puncture_membership(const std::vector<std::int64_t>& a, std::int64_t b, const WeightCone& q);

// Generators (-1, l), (0, 1), (1, 0) of S_l in Z^2.
std::vector<std::array<std::int64_t, 2>> s_ell_generators(std::int64_t ell);
// Membership in the cone spanned by the generators above.
bool s_ell_contains(std::int64_t ell, std::int64_t a, std::int64_t b);

}  // namespace thetamirror
