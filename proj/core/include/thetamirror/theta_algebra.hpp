#pragma once

#include <map>
#include <string>
#include <vector>

#include "thetamirror/class_solver.hpp"
#include "thetamirror/invariant_table.hpp"
#include "thetamirror/snc_pair.hpp"
#include "thetamirror/trunc_ring.hpp"

namespace thetamirror {

// Finite combination sum_p c_p theta_p with c_p in k[P]/I.
class ThetaElement {
 public:
  ThetaElement() = default;
  explicit ThetaElement(TruncationIdeal ideal) : ideal_(std::move(ideal)) {}
  static ThetaElement basis(const TruncationIdeal& ideal, const LatticeVector& p);

  const TruncationIdeal& ideal() const { return ideal_; }
  const std::map<LatticeVector, TruncatedSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  TruncatedSeries coefficient(const LatticeVector& p) const;

  void add(const LatticeVector& p, const TruncatedSeries& c);
  ThetaElement& operator+=(const ThetaElement& o);
  ThetaElement& operator-=(const ThetaElement& o);
  ThetaElement scaled(const TruncatedSeries& c) const;

  friend bool operator==(const ThetaElement& a, const ThetaElement& b) {
    return a.ideal_ == b.ideal_ && a.terms_ == b.terms_;
  }

 private:
  TruncationIdeal ideal_;
  std::map<LatticeVector, TruncatedSeries> terms_;
};

// theta_p theta_q mod the maximal ideal: theta_{p+q} when p, q share a cone.
ThetaElement zeroth_product(const TropicalSpace& space, const LatticeVector& p,
                            const LatticeVector& q, const TruncationIdeal& ideal);

// Coefficients reduced modulo the maximal ideal (only t^0 terms kept).
ThetaElement reduce_mod_m(const ThetaElement& x);

struct AssociativityViolation {
  LatticeVector a, b, c;  // (theta_a theta_b) theta_c vs theta_a (theta_b theta_c)
  LatticeVector r;
  ClassVector beta;
  Rational lhs;
  Rational rhs;
};

struct Relation {
  std::vector<std::size_t> lhs_generators;  // indices into the generator list
  ThetaElement rhs;                         // the product, expanded in theta_r
};

struct Presentation {
  std::vector<LatticeVector> generators;
  std::vector<Relation> relations;
  // Monomial identities theta_{sum} = prod theta_{g} used to rewrite rhs.
  bool closed = false;
};

// The mirror algebra defined by a pair, a table of invariants and I.
class ThetaAlgebra {
 public:
  ThetaAlgebra(PairDescriptor pair, InvariantTable table, TruncationIdeal ideal,
               CandidateOptions options = {});

  const PairDescriptor& pair() const { return pair_; }
  const TropicalSpace& space() const { return space_; }
  const TruncationIdeal& ideal() const { return ideal_; }
  const InvariantTable& table() const { return table_; }

  ThetaElement basis(const LatticeVector& p) const { return ThetaElement::basis(ideal_, p); }
  ThetaElement product(const LatticeVector& p, const LatticeVector& q) const;
  ThetaElement multiply(const ThetaElement& x, const ThetaElement& y) const;

  // Products of all pairs (i <= j); entry [i][j] is filled for i <= j.
  std::vector<std::vector<ThetaElement>> mult_table(const std::vector<LatticeVector>& points) const;

  // Coefficientwise comparison of (ab)c and a(bc) over all triples from
  // `points`. Missing invariants are aggregated into one exception.
  std::vector<AssociativityViolation> associativity_check(
      const std::vector<LatticeVector>& points) const;

  // Relations among the primitive ray generators of B when every product
  // of generators sharing a cone is the monomial theta_{sum}.
  Presentation presentation() const;

  // Degeneration mode: points of degree d and the graded products up to
  // total degree `max_degree`.
  std::map<std::int64_t, std::vector<LatticeVector>> graded_points(std::int64_t max_degree) const;

 private:
  PairDescriptor pair_;
  TropicalSpace space_;
  InvariantTable table_;
  TruncationIdeal ideal_;
  CandidateOptions options_;
};

std::string format_theta(const ThetaElement& x, const PairDescriptor& pair);
std::string format_point(const LatticeVector& p, const PairDescriptor& pair);
std::string format_relation(const Relation& rel, const Presentation& pres,
                            const PairDescriptor& pair);

}  // namespace thetamirror
