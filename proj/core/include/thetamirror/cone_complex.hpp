#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "thetamirror/int_vector.hpp"

namespace thetamirror {

// Cone spanned by a subset of the basis vectors D_i^*, stored as a bitmask.
class BasisCone {
 public:
  static constexpr std::size_t max_rank = 64;

  BasisCone() = default;
  explicit BasisCone(std::uint64_t mask) : mask_(mask) {}
  static BasisCone from_indices(std::span<const std::size_t> indices);
  static BasisCone from_indices(std::initializer_list<std::size_t> indices);

  std::uint64_t mask() const { return mask_; }
  std::size_t size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(std::size_t i) const { return i < max_rank && ((mask_ >> i) & 1u); }
  bool is_face_of(BasisCone other) const { return (mask_ & ~other.mask_) == 0; }
  std::vector<std::size_t> indices() const;

  BasisCone with(std::size_t i) const;
  BasisCone without(std::size_t i) const;
  BasisCone intersect(BasisCone o) const { return BasisCone(mask_ & o.mask_); }
  BasisCone unite(BasisCone o) const { return BasisCone(mask_ | o.mask_); }

  friend bool operator==(BasisCone a, BasisCone b) { return a.mask_ == b.mask_; }
  // Smaller cones first, then lexicographic on the sorted index lists.
  friend std::strong_ordering operator<=>(BasisCone a, BasisCone b);

 private:
  std::uint64_t mask_ = 0;
};

std::string to_string(BasisCone c);

// Support cone of a nonnegative vector; throws on negative entries.
BasisCone support(const LatticeVector& v);

// Face-closed family of basis cones in R^m.
class ConeComplex {
 public:
  ConeComplex() = default;
  // Validates closure under faces and that every index is < m.
  ConeComplex(std::size_t m, std::set<BasisCone> cones);

  std::size_t ambient_rank() const { return m_; }
  std::size_t dim() const;
  const std::set<BasisCone>& cones() const { return cones_; }
  bool contains(BasisCone c) const { return cones_.count(c) > 0; }
  bool is_maximal(BasisCone c) const;
  std::vector<BasisCone> maximal_cones() const;
  std::vector<BasisCone> cones_of_size(std::size_t k) const;
  // Cones of one dimension more containing c.
  std::vector<BasisCone> cofaces(BasisCone c) const;
  bool contains_point(const LatticeVector& v) const;

 private:
  std::size_t m_ = 0;
  std::set<BasisCone> cones_;
};

// Closes the given strata under taking faces. Throws
// Error("inconsistent-poset") if a closure member was declared empty.
ConeComplex build_complex(std::span<const std::vector<std::size_t>> strata, std::size_t m,
                          std::span<const std::vector<std::size_t>> empty_intersections = {});

// Smallest member cone containing v; throws Error("not-in-complex").
BasisCone min_cone(const ConeComplex& complex, const LatticeVector& v);

// Integral points of height (sum of coordinates) at most h, lexicographic.
std::vector<LatticeVector> integral_points(const ConeComplex& complex, std::int64_t height);

// Integral points of height exactly h, lexicographic.
std::vector<LatticeVector> integral_points_of_height(const ConeComplex& complex, std::int64_t h);

// Integral linear identification of sigma1 with its reflection across rho
// inside the chart of sigma2.
struct AffineChart {
  BasisCone rho;
  BasisCone sigma1;
  BasisCone sigma2;
  std::size_t extra1 = 0;  // the index in sigma1 \ rho
  std::size_t extra2 = 0;  // the index in sigma2 \ rho
  // m x m matrix; column j is the image of D_j^* for j in sigma1, zero otherwise.
  std::vector<std::vector<std::int64_t>> transport;

  // Image of a vector supported on sigma1; throws Error("precondition").
  LatticeVector apply(const LatticeVector& v) const;
  // Restriction to the ordered bases (rho, extra1) -> (rho, extra2).
  std::vector<std::vector<std::int64_t>> restricted_matrix() const;
  std::int64_t restricted_determinant() const;
};

// `stratum_numbers[j]` = D_j . Z_rho for j in rho.
AffineChart parallel_transport(const ConeComplex& complex, BasisCone rho, BasisCone sigma1,
                               BasisCone sigma2,
                               const std::map<std::size_t, std::int64_t>& stratum_numbers);

}  // namespace thetamirror
