#include "thetamirror/linalg.hpp"

#include <numeric>

#include "thetamirror/error.hpp"

namespace thetamirror::linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][c];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix a) {
  if (a.empty()) return 0;
  return rref(a, a.front().size()).size();
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t cols) {
  for (const auto& row : a)
    require(row.size() == cols, "dimension-mismatch", "ragged matrix");
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    require(a[c].size() == n, "dimension-mismatch", "determinant of a non-square matrix");
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

std::int64_t determinant(const std::vector<std::vector<std::int64_t>>& a) {
  RationalMatrix q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (auto x : a[i]) q[i].emplace_back(static_cast<long>(x));
  Rational d = determinant(std::move(q));
  return d.get_num().get_si();
}

std::vector<std::int64_t> primitive_integer(const std::vector<Rational>& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) lcm = lcm * x.get_den() / gcd(lcm, x.get_den());
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (lcm / x.get_den());
    g = gcd(g, n);
    ints.push_back(n);
  }
  std::vector<std::int64_t> out;
  for (auto& n : ints) out.push_back(g == 0 ? 0 : mpz_class(n / g).get_si());
  return out;
}

}  // namespace thetamirror::linalg
