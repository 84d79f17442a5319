#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "thetamirror/int_vector.hpp"
#include "thetamirror/rational.hpp"

namespace thetamirror {

// Monomial ideal I = { beta : <w, beta> >= bound } in k[P], P free on the
// class generators. Weights are positive, so k[P]/I is finite dimensional.
class TruncationIdeal {
 public:
  TruncationIdeal() = default;
  TruncationIdeal(ClassVector weights, std::int64_t bound);
  static TruncationIdeal uniform(std::size_t rank, std::int64_t bound);

  std::size_t rank() const { return weights_.size(); }
  const ClassVector& weights() const { return weights_; }
  std::int64_t bound() const { return bound_; }

  std::int64_t weight(const ClassVector& beta) const { return weights_.dot(beta); }
  bool contains(const ClassVector& beta) const { return weight(beta) >= bound_; }
  // Nonnegative classes outside I, lexicographic.
  std::vector<ClassVector> standard_monomials() const;

  friend bool operator==(const TruncationIdeal&, const TruncationIdeal&) = default;

 private:
  ClassVector weights_;
  std::int64_t bound_ = 1;
};

struct LaurentKey {
  ClassVector beta;
  LatticeVector exponent;
  friend bool operator==(const LaurentKey&, const LaurentKey&) = default;
  friend auto operator<=>(const LaurentKey&, const LaurentKey&) = default;
};

namespace detail {

template <class Key>
struct KeyTraits;

template <>
struct KeyTraits<ClassVector> {
  static const ClassVector& beta(const ClassVector& k) { return k; }
  static ClassVector add(const ClassVector& a, const ClassVector& b) { return a + b; }
  static ClassVector unit(std::size_t class_rank, std::size_t) { return ClassVector(class_rank); }
};

template <>
struct KeyTraits<LaurentKey> {
  static const ClassVector& beta(const LaurentKey& k) { return k.beta; }
  static LaurentKey add(const LaurentKey& a, const LaurentKey& b) {
    return {a.beta + b.beta, a.exponent + b.exponent};
  }
  static LaurentKey unit(std::size_t class_rank, std::size_t lattice_rank) {
    return {ClassVector(class_rank), LatticeVector(lattice_rank)};
  }
};

// Sparse rational combination of monomials, reduced modulo a truncation
// ideal on the class part of each monomial.
template <class Key>
class TruncatedAlgebra {
  using Traits = KeyTraits<Key>;

 public:
  using key_type = Key;
  using term_map = std::map<Key, Rational>;

  TruncatedAlgebra() = default;
  explicit TruncatedAlgebra(TruncationIdeal ideal, std::size_t lattice_rank = 0)
      : ideal_(std::move(ideal)), lattice_rank_(lattice_rank) {}

  static TruncatedAlgebra one(const TruncationIdeal& ideal, std::size_t lattice_rank = 0) {
    TruncatedAlgebra r(ideal, lattice_rank);
    r.add_term(r.unit_key(), Rational(1));
    return r;
  }

  const TruncationIdeal& ideal() const { return ideal_; }
  std::size_t lattice_rank() const { return lattice_rank_; }
  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Key unit_key() const { return Traits::unit(ideal_.rank(), lattice_rank_); }

  Rational coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(unit_key()); }

  // Adds c * key, dropping it if its class lies in the ideal.
  void add_term(const Key& k, const Rational& c) {
    if (c == 0 || ideal_.contains(Traits::beta(k))) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TruncatedAlgebra& operator+=(const TruncatedAlgebra& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  TruncatedAlgebra& operator-=(const TruncatedAlgebra& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  TruncatedAlgebra& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend TruncatedAlgebra operator+(TruncatedAlgebra a, const TruncatedAlgebra& b) {
    return a += b;
  }
  friend TruncatedAlgebra operator-(TruncatedAlgebra a, const TruncatedAlgebra& b) {
    return a -= b;
  }
  friend TruncatedAlgebra operator*(const Rational& s, TruncatedAlgebra a) { return a *= s; }
  friend TruncatedAlgebra operator*(const TruncatedAlgebra& a, const TruncatedAlgebra& b) {
    a.check_compatible(b);
    TruncatedAlgebra r(a.ideal_, a.lattice_rank_);
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(Traits::add(ka, kb), ca * cb);
    return r;
  }
  TruncatedAlgebra& operator*=(const TruncatedAlgebra& o) { return *this = *this * o; }

  // Every term lies in the maximal ideal: positive class weight.
  bool is_nilpotent() const {
    for (const auto& [k, c] : terms_)
      if (ideal_.weight(Traits::beta(k)) <= 0) return false;
    return true;
  }

  TruncatedAlgebra inverse() const {
    const Rational c0 = constant_term();
    require(c0 != 0, "precondition", "element is not a unit");
    TruncatedAlgebra x = *this;
    x.add_term(unit_key(), -c0);
    require(x.is_nilpotent(), "precondition", "element is not a unit mod the maximal ideal");
    x *= Rational(-1) / c0;
    // (c0 (1 - x))^{-1} = c0^{-1} sum x^k
    TruncatedAlgebra sum = one(ideal_, lattice_rank_);
    TruncatedAlgebra power = sum;
    while (true) {
      power = power * x;
      if (power.is_zero()) break;
      sum += power;
    }
    return (Rational(1) / c0) * sum;
  }

  TruncatedAlgebra pow(std::int64_t n) const {
    if (n < 0) return inverse().pow(-n);
    TruncatedAlgebra result = one(ideal_, lattice_rank_);
    TruncatedAlgebra base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return result;
  }

  friend bool operator==(const TruncatedAlgebra& a, const TruncatedAlgebra& b) {
    return a.ideal_ == b.ideal_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const TruncatedAlgebra& o) const {
    require(ideal_ == o.ideal_, "precondition", "elements live in different truncations");
    require(lattice_rank_ == o.lattice_rank_, "dimension-mismatch", "lattice ranks differ");
  }

  TruncationIdeal ideal_;
  std::size_t lattice_rank_ = 0;
  term_map terms_;
};

}  // namespace detail

// Element of k[P]/I.
using TruncatedSeries = detail::TruncatedAlgebra<ClassVector>;
// Element of k[P]/I [Z^m], terms c t^beta z^m in canonical (beta, m) order.
using LaurentElement = detail::TruncatedAlgebra<LaurentKey>;

TruncatedSeries series_monomial(const TruncationIdeal& ideal, const ClassVector& beta,
                                const Rational& c = 1);
LaurentElement laurent_monomial(const TruncationIdeal& ideal, const ClassVector& beta,
                                const LatticeVector& m, const Rational& c = 1);

// Laurent element with every coefficient series moved to the exponent 0 chart.
LaurentElement constant_laurent(const TruncatedSeries& s, std::size_t lattice_rank);

// exp(x) for nilpotent x; throws Error("precondition") otherwise.
LaurentElement exp_nilpotent(const LaurentElement& x);
TruncatedSeries exp_nilpotent(const TruncatedSeries& x);
// log(f) for f = 1 + nilpotent.
LaurentElement log_unit(const LaurentElement& f);
TruncatedSeries log_unit(const TruncatedSeries& f);

// Human-readable forms, e.g. "t^(C1+C3)" and "2*t^C2*z^(1,0,0,0)".
std::string format_class(const ClassVector& beta, const std::vector<std::string>& names);
std::string format_series(const TruncatedSeries& s, const std::vector<std::string>& names);
std::string format_laurent(const LaurentElement& f, const std::vector<std::string>& names);

}  // namespace thetamirror
