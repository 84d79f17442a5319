#include "thetamirror/cone_complex.hpp"

#include <algorithm>
#include <bit>

#include "thetamirror/linalg.hpp"

namespace thetamirror {

BasisCone BasisCone::from_indices(std::span<const std::size_t> indices) {
  std::uint64_t mask = 0;
  for (auto i : indices) {
    require(i < max_rank, "precondition", "basis index " + std::to_string(i) + " too large");
    mask |= std::uint64_t{1} << i;
  }
  return BasisCone(mask);
}

BasisCone BasisCone::from_indices(std::initializer_list<std::size_t> indices) {
  return from_indices(std::span<const std::size_t>(indices.begin(), indices.size()));
}

std::size_t BasisCone::size() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> BasisCone::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < max_rank; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

BasisCone BasisCone::with(std::size_t i) const {
  require(i < max_rank, "precondition", "basis index too large");
  return BasisCone(mask_ | (std::uint64_t{1} << i));
}

BasisCone BasisCone::without(std::size_t i) const {
  if (i >= max_rank) return *this;
  return BasisCone(mask_ & ~(std::uint64_t{1} << i));
}

std::strong_ordering operator<=>(BasisCone a, BasisCone b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.indices() <=> b.indices();
}

std::string to_string(BasisCone c) {
  std::string s = "{";
  bool first = true;
  for (auto i : c.indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

BasisCone support(const LatticeVector& v) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(v[i] >= 0, "not-in-complex", to_string(v) + " has a negative coordinate");
    if (v[i] > 0) {
      require(i < BasisCone::max_rank, "precondition", "basis index too large");
      mask |= std::uint64_t{1} << i;
    }
  }
  return BasisCone(mask);
}

ConeComplex::ConeComplex(std::size_t m, std::set<BasisCone> cones)
    : m_(m), cones_(std::move(cones)) {
  require(m <= BasisCone::max_rank, "precondition", "at most 64 components are supported");
  for (auto c : cones_) {
    for (auto i : c.indices()) {
      require(i < m, "precondition", "cone " + to_string(c) + " uses an index >= m");
      require(contains(c.without(i)), "inconsistent-poset",
              "face " + to_string(c.without(i)) + " of " + to_string(c) + " is missing");
    }
  }
}

std::size_t ConeComplex::dim() const {
  std::size_t d = 0;
  for (auto c : cones_) d = std::max(d, c.size());
  return d;
}

bool ConeComplex::is_maximal(BasisCone c) const {
  if (!contains(c)) return false;
  for (std::size_t i = 0; i < m_; ++i)
    if (!c.contains(i) && contains(c.with(i))) return false;
  return true;
}

std::vector<BasisCone> ConeComplex::maximal_cones() const {
  std::vector<BasisCone> out;
  for (auto c : cones_)
    if (is_maximal(c)) out.push_back(c);
  return out;
}

std::vector<BasisCone> ConeComplex::cones_of_size(std::size_t k) const {
  std::vector<BasisCone> out;
  for (auto c : cones_)
    if (c.size() == k) out.push_back(c);
  return out;
}

std::vector<BasisCone> ConeComplex::cofaces(BasisCone c) const {
  std::vector<BasisCone> out;
  for (std::size_t i = 0; i < m_; ++i)
    if (!c.contains(i) && contains(c.with(i))) out.push_back(c.with(i));
  std::sort(out.begin(), out.end());
  return out;
}

bool ConeComplex::contains_point(const LatticeVector& v) const {
  if (v.size() != m_ || !v.is_nonnegative()) return false;
  return contains(support(v));
}

ConeComplex build_complex(std::span<const std::vector<std::size_t>> strata, std::size_t m,
                          std::span<const std::vector<std::size_t>> empty_intersections) {
  require(m <= BasisCone::max_rank, "precondition", "at most 64 components are supported");
  std::set<BasisCone> cones;
  cones.insert(BasisCone());
  for (std::size_t i = 0; i < m; ++i) cones.insert(BasisCone::from_indices({i}));
  for (const auto& s : strata) {
    for (auto i : s)
      require(i < m, "precondition", "stratum uses component index " + std::to_string(i));
    auto top = BasisCone::from_indices(s);
    require(top.size() == s.size(), "precondition", "repeated component in a stratum");
    // Every subset of a nonempty stratum is a nonempty stratum.
    const std::uint64_t mask = top.mask();
    for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
      cones.insert(BasisCone(sub));
      if (sub == 0) break;
    }
  }
  for (const auto& e : empty_intersections) {
    auto c = BasisCone::from_indices(e);
    require(!cones.count(c), "inconsistent-poset",
            "intersection " + to_string(c) + " is declared empty but contains a stratum");
  }
  return ConeComplex(m, std::move(cones));
}

BasisCone min_cone(const ConeComplex& complex, const LatticeVector& v) {
  require(v.size() == complex.ambient_rank(), "dimension-mismatch", "point has wrong length");
  auto c = support(v);
  require(complex.contains(c), "not-in-complex", to_string(v) + " lies in no cone");
  return c;
}

namespace {

// Vectors with positive entries exactly on `idx` and total at most h.
void positive_on(const std::vector<std::size_t>& idx, std::size_t pos, std::int64_t budget,
                 LatticeVector& cur, std::vector<LatticeVector>& out, bool exact) {
  if (pos == idx.size()) {
    if (!exact || budget == 0) out.push_back(cur);
    return;
  }
  const std::int64_t remaining_slots = static_cast<std::int64_t>(idx.size() - pos - 1);
  for (std::int64_t x = 1; x + remaining_slots <= budget; ++x) {
    cur[idx[pos]] = x;
    positive_on(idx, pos + 1, budget - x, cur, out, exact);
  }
  cur[idx[pos]] = 0;
}

std::vector<LatticeVector> collect_points(const ConeComplex& complex, std::int64_t h,
                                          bool exact) {
  require(h >= 0, "precondition", "height must be nonnegative");
  std::vector<LatticeVector> out;
  for (auto c : complex.cones()) {
    auto idx = c.indices();
    if (static_cast<std::int64_t>(idx.size()) > h) continue;
    LatticeVector cur(complex.ambient_rank());
    positive_on(idx, 0, h, cur, out, exact);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<LatticeVector> integral_points(const ConeComplex& complex, std::int64_t height) {
  return collect_points(complex, height, false);
}

std::vector<LatticeVector> integral_points_of_height(const ConeComplex& complex,
                                                     std::int64_t h) {
  return collect_points(complex, h, true);
}

LatticeVector AffineChart::apply(const LatticeVector& v) const {
  const std::size_t m = transport.size();
  require(v.size() == m, "dimension-mismatch", "vector length differs from chart rank");
  for (std::size_t j = 0; j < m; ++j)
    require(v[j] == 0 || sigma1.contains(j), "precondition",
            to_string(v) + " is not supported on " + to_string(sigma1));
  LatticeVector out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i] += transport[i][j] * v[j];
  return out;
}

std::vector<std::vector<std::int64_t>> AffineChart::restricted_matrix() const {
  auto rows = rho.indices();
  rows.push_back(extra2);
  auto cols = rho.indices();
  cols.push_back(extra1);
  std::vector<std::vector<std::int64_t>> r(rows.size(), std::vector<std::int64_t>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) r[a][b] = transport[rows[a]][cols[b]];
  return r;
}

std::int64_t AffineChart::restricted_determinant() const {
  return linalg::determinant(restricted_matrix());
}

AffineChart parallel_transport(const ConeComplex& complex, BasisCone rho, BasisCone sigma1,
                               BasisCone sigma2,
                               const std::map<std::size_t, std::int64_t>& stratum_numbers) {
  require(complex.contains(rho) && complex.contains(sigma1) && complex.contains(sigma2),
          "precondition", "cones must belong to the complex");
  require(sigma1 != sigma2, "precondition", "sigma1 and sigma2 must differ");
  require(rho.is_face_of(sigma1) && rho.is_face_of(sigma2) &&
              sigma1.size() == rho.size() + 1 && sigma2.size() == rho.size() + 1,
          "precondition", "rho must be a facet of both maximal cones");
  require(complex.is_maximal(sigma1) && complex.is_maximal(sigma2), "precondition",
          "sigma1 and sigma2 must be maximal");

  AffineChart chart;
  chart.rho = rho;
  chart.sigma1 = sigma1;
  chart.sigma2 = sigma2;
  chart.extra1 = BasisCone(sigma1.mask() & ~rho.mask()).indices().front();
  chart.extra2 = BasisCone(sigma2.mask() & ~rho.mask()).indices().front();
  const std::size_t m = complex.ambient_rank();
  chart.transport.assign(m, std::vector<std::int64_t>(m, 0));
  for (auto j : rho.indices()) chart.transport[j][j] = 1;
  chart.transport[chart.extra2][chart.extra1] = -1;
  for (auto j : rho.indices()) {
    auto it = stratum_numbers.find(j);
    require(it != stratum_numbers.end(), "missing-intersection-number",
            "D_" + std::to_string(j) + " . Z_rho for rho = " + to_string(rho));
    chart.transport[j][chart.extra1] = -it->second;
  }
  return chart;
}

}  // namespace thetamirror
