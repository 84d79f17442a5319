#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetamirror/snc_pair.hpp"
#include "thetamirror/trunc_ring.hpp"

namespace thetamirror {

enum class StructureMode { planar, looijenga };

// A wall: a ray (or, in planar mode, a line) spanned by a primitive vector,
// decorated with f = 1 + sum c t^beta z^{k u}, u the direction up to sign.
struct Wall {
  LatticeVector direction;
  bool line = false;
  LaurentElement fn;
  std::string origin = "initial";
};

// Cyclic chamber structure of a rank-two B = Sk(X, D) homeomorphic to R^2.
// Chamber j is spanned by ray(j) and ray(j+1); walking j -> j+1 is
// counterclockwise in every chart.
class LooijengaGeometry {
 public:
  static LooijengaGeometry from_pair(const PairDescriptor& pair);

  const PairDescriptor& pair() const { return pair_; }
  std::size_t lattice_rank() const { return pair_.num_components(); }
  std::size_t num_chambers() const { return rays_.size(); }
  // Component index of the j-th ray in cyclic order (indices mod N).
  std::size_t ray(std::size_t j) const { return rays_[j % rays_.size()]; }
  BasisCone chamber(std::size_t j) const;
  // Position of a component in the cyclic order.
  std::size_t ray_position(std::size_t component) const;
  ClassVector kink(std::size_t component) const;
  std::int64_t stratum_number(std::size_t component) const;  // D_i . Z_{rho_i}

  // Linear identification of chamber j with its neighbour across ray(j+1)
  // (forward) or across ray(j) (backward).
  LatticeVector to_next(std::size_t j, const LatticeVector& m) const;
  LatticeVector to_prev(std::size_t j, const LatticeVector& m) const;

  // Chambers whose closure contains the cone.
  std::vector<std::size_t> chambers_containing(BasisCone c) const;

 private:
  PairDescriptor pair_;
  std::vector<std::size_t> rays_;
};

class WallStructure {
 public:
  static WallStructure planar(TruncationIdeal ideal, std::vector<Wall> walls,
                              std::vector<std::string> class_names = {});
  static WallStructure looijenga(const PairDescriptor& pair, TruncationIdeal ideal,
                                 std::vector<Wall> walls);

  StructureMode mode() const { return mode_; }
  const TruncationIdeal& ideal() const { return ideal_; }
  const std::vector<Wall>& walls() const { return walls_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  std::size_t lattice_rank() const;
  const LooijengaGeometry& geometry() const;

  // Validates shape, primitivity, tangency and nilpotency; throws Error.
  void add_wall(Wall wall);
  WallStructure with_ideal(const TruncationIdeal& ideal) const;

  // Product of the functions of all walls on the ray of a component.
  LaurentElement ray_function(std::size_t component) const;
  // Indices of walls in the interior of chamber j.
  std::vector<std::size_t> interior_walls(std::size_t chamber) const;

 private:
  StructureMode mode_ = StructureMode::planar;
  TruncationIdeal ideal_;
  std::vector<Wall> walls_;
  std::vector<std::string> class_names_;
  std::optional<LooijengaGeometry> geometry_;
};

// The wall-crossing automorphism z^m -> z^m f^{<n, m>} where n is a
// covector vanishing on the wall and positive on the departure side.
LaurentElement cross_with_normal(const LaurentElement& f, const LatticeVector& n,
                                 const LaurentElement& x);

// Planar crossing of `wall`: side = +1 crosses counterclockwise, -1 clockwise.
LaurentElement cross(const Wall& wall, const LaurentElement& x, int side);

// Looijenga crossing of ray(j+1) from chamber j into j+1 (forward) or of
// ray(j) from j into j-1 (backward), with kink t^{kappa a} and f^a.
// Classes may leave P in intermediate steps; truncation is by weight.
LaurentElement cross_ray(const WallStructure& s, std::size_t chamber, bool forward,
                         const LaurentElement& x);

// Crossing of an interior wall of a chamber; counterclockwise if ccw.
LaurentElement cross_interior(const WallStructure& s, const Wall& wall, bool ccw,
                              const LaurentElement& x);

// Counterclockwise loop around the origin of a planar structure.
struct PathOrderedProduct {
  std::vector<std::pair<LatticeVector, LaurentElement>> crossings;  // ray, function
  LaurentElement apply(const LaurentElement& x) const;
};
PathOrderedProduct loop_around_origin(const WallStructure& s);

struct ConsistencyDefect {
  std::string where;
  LatticeVector probe;
  LaurentElement expected;
  LaurentElement actual;
};

struct ConsistencyOptions {
  std::int64_t probe_height = 2;  // looijenga mode: theta functions probed
  std::uint64_t seed = 1;
};

struct ConsistencyReport {
  bool consistent = true;
  std::size_t checks = 0;
  std::vector<ConsistencyDefect> defects;
};

// Planar: the loop around the origin is the identity mod I.
// Looijenga: broken-line theta functions agree, after transport, on either
// side of every wall, ray and critical direction (sampled mod I).
ConsistencyReport consistency_check(const WallStructure& s, const ConsistencyOptions& o = {});

// Planar mode: adds rays order by order until the loop is the identity.
// A ray with direction d carries a function of z^{-d}. Looijenga mode only
// accepts structures that are already consistent.
WallStructure complete(const WallStructure& s, const ConsistencyOptions& o = {});

// One entry of the canonical wall data: cone, class, exponent u and the
// invariant N; the wall function is exp(k N t^beta z^{-u}).
struct CanonicalWallEntry {
  LatticeVector direction;
  ClassVector beta;
  LatticeVector u;
  std::int64_t k = 1;
  Rational n;
};

WallStructure canonical_walls(const PairDescriptor& pair,
                              const std::vector<CanonicalWallEntry>& entries,
                              const TruncationIdeal& ideal);

}  // namespace thetamirror
