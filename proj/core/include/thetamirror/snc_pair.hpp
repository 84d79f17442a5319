#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thetamirror/cone_complex.hpp"
#include "thetamirror/int_vector.hpp"

namespace thetamirror {

enum class LogCanonicalSign { nef, antinef, unspecified };

// Combinatorial and numerical shadow of an snc pair (X, D) or of a
// degeneration (X, X_0).
struct PairDescriptor {
  std::string name;
  std::size_t dimension = 0;                  // n = dim X
  std::vector<std::string> components;        // D_1..D_m
  std::vector<std::vector<std::size_t>> strata;
  std::vector<std::vector<std::size_t>> empty_intersections;
  std::vector<std::string> class_names;       // effective generators C_1..C_k
  std::vector<std::vector<std::int64_t>> intersection_matrix;  // [k][i] = C_k . D_i
  std::vector<std::int64_t> discrepancies;    // a_i with K_X + D = sum a_i D_i
  // For a codimension-one stratum rho: D_j . Z_rho for each j in rho.
  std::map<BasisCone, std::map<std::size_t, std::int64_t>> curve_strata;
  // Class of each D_i in generator coordinates, when the generators allow it.
  std::optional<std::vector<ClassVector>> component_classes;
  std::optional<LatticeVector> central_fiber;  // multiplicities of X_0
  LogCanonicalSign log_canonical = LogCanonicalSign::unspecified;

  std::size_t num_components() const { return components.size(); }
  std::size_t class_rank() const { return class_names.size(); }
  bool is_degeneration() const { return central_fiber.has_value(); }

  // Shape and sign checks; throws Error("precondition").
  void validate() const;

  std::size_t component_index(const std::string& name) const;
  std::size_t class_index(const std::string& name) const;

  // beta . D_i for all i.
  LatticeVector intersection_vector(const ClassVector& beta) const;
  // beta . (K_X + D).
  std::int64_t log_canonical_degree(const ClassVector& beta) const;
  bool is_log_calabi_yau_component(std::size_t i) const { return discrepancies.at(i) == 0; }
};

struct TropicalSpace {
  ConeComplex full;    // Trop(X)
  ConeComplex cy_sub;  // B = Sk(X, D), cones on components with a_i = 0
  std::size_t n = 0;
  std::optional<LatticeVector> central_fiber;
};

TropicalSpace tropicalize(const PairDescriptor& pair);

// Every cone of B lies in a cone of dimension n.
bool maximality_check(const TropicalSpace& space);

// Degree of p over the cone over the dual complex of X_0.
// Throws Error("absent-central-fiber") outside degeneration mode.
std::int64_t grading(const TropicalSpace& space, const LatticeVector& p);

// The stratum whose cone contains p in its relative interior.
BasisCone stratum_of(const PairDescriptor& pair, const LatticeVector& p);

// Connectivity of the graph on maximal cones of B sharing a facet.
bool dual_graph_connected(const TropicalSpace& space);

}  // namespace thetamirror
