#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "thetamirror/error.hpp"

namespace thetamirror {

// Dense integer vector tagged by the lattice it lives in, so that tropical
// points and curve classes cannot be mixed up.
template <class Tag>
class IntVector {
 public:
  using value_type = std::int64_t;

  IntVector() = default;
  explicit IntVector(std::size_t n, value_type fill = 0) : v_(n, fill) {}
  IntVector(std::initializer_list<value_type> xs) : v_(xs) {}
  explicit IntVector(std::vector<value_type> xs) : v_(std::move(xs)) {}

  static IntVector unit(std::size_t n, std::size_t i) {
    IntVector e(n);
    e.v_.at(i) = 1;
    return e;
  }

  std::size_t size() const { return v_.size(); }
  value_type operator[](std::size_t i) const { return v_[i]; }
  value_type& operator[](std::size_t i) { return v_[i]; }
  value_type at(std::size_t i) const { return v_.at(i); }
  const std::vector<value_type>& values() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  bool is_zero() const {
    for (auto x : v_)
      if (x != 0) return false;
    return true;
  }
  bool is_nonnegative() const {
    for (auto x : v_)
      if (x < 0) return false;
    return true;
  }
  value_type sum() const { return std::accumulate(v_.begin(), v_.end(), value_type{0}); }

  value_type dot(const IntVector& o) const {
    check_size(o);
    value_type s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) s += v_[i] * o.v_[i];
    return s;
  }

  // gcd of the entries; 0 for the zero vector.
  value_type content() const {
    value_type g = 0;
    for (auto x : v_) g = std::gcd(g, x < 0 ? -x : x);
    return g;
  }
  bool is_primitive() const { return content() == 1; }
  IntVector primitive() const {
    auto g = content();
    IntVector r(*this);
    if (g > 1)
      for (auto& x : r.v_) x /= g;
    return r;
  }

  IntVector& operator+=(const IntVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  IntVector& operator-=(const IntVector& o) {
    check_size(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  IntVector& operator*=(value_type k) {
    for (auto& x : v_) x *= k;
    return *this;
  }

  friend IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
  friend IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
  friend IntVector operator*(value_type k, IntVector a) { return a *= k; }
  friend IntVector operator-(IntVector a) { return a *= -1; }

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector&, const IntVector&) = default;

 private:
  void check_size(const IntVector& o) const {
    if (o.v_.size() != v_.size())
      fail("dimension-mismatch", "vectors of length " + std::to_string(v_.size()) + " and " +
                                     std::to_string(o.v_.size()));
  }

  std::vector<value_type> v_;
};

struct LatticeTag;
struct ClassTag;

// Point of the integral tropicalization, in the basis D_i^* of Z^m.
using LatticeVector = IntVector<LatticeTag>;
// Curve class in coordinates of the chosen effective generators C_k.
using ClassVector = IntVector<ClassTag>;

template <class Tag>
std::string to_string(const IntVector<Tag>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace thetamirror
