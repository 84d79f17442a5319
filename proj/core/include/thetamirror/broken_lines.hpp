#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thetamirror/class_solver.hpp"
#include "thetamirror/rational.hpp"
#include "thetamirror/scattering2d.hpp"

namespace thetamirror {

// Point of B_R (looijenga mode: supported on one chamber) or of R^2.
using RationalPoint = std::vector<Rational>;

std::string to_string(const RationalPoint& x);

struct LineSegment {
  std::size_t chamber = 0;     // looijenga mode only
  std::optional<RationalPoint> start;  // empty for the unbounded first segment
  RationalPoint end;
  Rational coefficient;
  ClassVector beta;
  LatticeVector exponent;      // the segment moves in direction -exponent
};

struct BrokenLine {
  LatticeVector asymptotic;    // p
  RationalPoint endpoint;      // Q
  std::vector<LineSegment> segments;  // in the direction of travel

  const LineSegment& last() const { return segments.back(); }
};

struct EnumerationOptions {
  std::size_t max_steps = 200000;
};

// Chamber whose interior contains x; throws Error("non-generic-endpoint")
// when x lies on a ray. Looijenga mode only.
std::size_t chamber_of(const WallStructure& s, const RationalPoint& x);

// All broken lines with asymptotic monomial z^p ending at Q whose final
// class stays outside I. Throws Error("non-generic-endpoint") if some
// line would pass through the origin or hit two walls at once.
std::vector<BrokenLine> enumerate(const WallStructure& s, const LatticeVector& p,
                                  const RationalPoint& q, const EnumerationOptions& o = {});

// Sum of the final monomials of enumerate(s, p, q).
LaurentElement theta_function(const WallStructure& s, const LatticeVector& p,
                              const RationalPoint& q, const EnumerationOptions& o = {});

// Replays a line forward and checks every bend against the crossing maps.
bool verify_broken_line(const WallStructure& s, const BrokenLine& line);

struct ThetaProductOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 3;        // endpoints per r, spread over chambers
  std::int64_t extra_height = 2;  // r ranges over height <= h(p) + h(q) + extra
};

// Structure constants alpha_{pqr} from pairs of broken lines ending near r.
// Throws Error("inconsistent-structure") if endpoints disagree.
std::vector<ProductTerm> theta_product(const WallStructure& s, const LatticeVector& p,
                                       const LatticeVector& q, const ThetaProductOptions& o = {});

}  // namespace thetamirror
