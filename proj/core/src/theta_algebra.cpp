#include "thetamirror/theta_algebra.hpp"

#include <algorithm>
#include <set>

namespace thetamirror {

ThetaElement ThetaElement::basis(const TruncationIdeal& ideal, const LatticeVector& p) {
  ThetaElement x(ideal);
  x.add(p, TruncatedSeries::one(ideal));
  return x;
}

TruncatedSeries ThetaElement::coefficient(const LatticeVector& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? TruncatedSeries(ideal_) : it->second;
}

void ThetaElement::add(const LatticeVector& p, const TruncatedSeries& c) {
  require(c.ideal() == ideal_, "precondition", "coefficient lives in another truncation");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ThetaElement& ThetaElement::operator+=(const ThetaElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

ThetaElement& ThetaElement::operator-=(const ThetaElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, Rational(-1) * c);
  return *this;
}

ThetaElement ThetaElement::scaled(const TruncatedSeries& c) const {
  ThetaElement out(ideal_);
  for (const auto& [p, a] : terms_) out.add(p, a * c);
  return out;
}

ThetaElement zeroth_product(const TropicalSpace& space, const LatticeVector& p,
                            const LatticeVector& q, const TruncationIdeal& ideal) {
  require(space.cy_sub.contains_point(p) && space.cy_sub.contains_point(q), "not-in-complex",
          "points must lie in B(Z)");
  ThetaElement out(ideal);
  if (space.cy_sub.contains(support(p).unite(support(q))))
    out.add(p + q, TruncatedSeries::one(ideal));
  return out;
}

ThetaElement reduce_mod_m(const ThetaElement& x) {
  ThetaElement out(x.ideal());
  for (const auto& [p, c] : x.terms()) {
    Rational c0 = c.constant_term();
    if (c0 != 0) out.add(p, series_monomial(x.ideal(), ClassVector(x.ideal().rank()), c0));
  }
  return out;
}

ThetaAlgebra::ThetaAlgebra(PairDescriptor pair, InvariantTable table, TruncationIdeal ideal,
                           CandidateOptions options)
    : pair_(std::move(pair)),
      space_(tropicalize(pair_)),
      table_(std::move(table)),
      ideal_(std::move(ideal)),
      options_(options) {
  table_.validate_against(pair_);
  require(ideal_.rank() == pair_.class_rank(), "dimension-mismatch",
          "truncation rank differs from the class rank");
}

ThetaElement ThetaAlgebra::product(const LatticeVector& p, const LatticeVector& q) const {
  auto set = candidates(pair_, space_, p, q, ideal_, options_);
  ThetaElement out(ideal_);
  for (auto& term : assemble_product(set, table_, ideal_)) out.add(term.r, term.coefficient);
  return out;
}

ThetaElement ThetaAlgebra::multiply(const ThetaElement& x, const ThetaElement& y) const {
  ThetaElement out(ideal_);
  std::vector<InvariantKey> missing;
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) {
      try {
        out += product(p, q).scaled(a * b);
      } catch (const MissingInvariantError& e) {
        missing.insert(missing.end(), e.missing().begin(), e.missing().end());
      }
    }
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw MissingInvariantError(std::move(missing));
  }
  return out;
}

std::vector<std::vector<ThetaElement>> ThetaAlgebra::mult_table(
    const std::vector<LatticeVector>& points) const {
  std::vector<std::vector<ThetaElement>> table(points.size(),
                                               std::vector<ThetaElement>(points.size()));
  std::vector<InvariantKey> missing;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      try {
        table[i][j] = product(points[i], points[j]);
      } catch (const MissingInvariantError& e) {
        missing.insert(missing.end(), e.missing().begin(), e.missing().end());
      }
    }
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw MissingInvariantError(std::move(missing));
  }
  return table;
}

std::vector<AssociativityViolation> ThetaAlgebra::associativity_check(
    const std::vector<LatticeVector>& points) const {
  std::vector<AssociativityViolation> violations;
  std::vector<InvariantKey> missing;
  for (const auto& a : points) {
    for (const auto& b : points) {
      for (const auto& c : points) {
        ThetaElement lhs(ideal_), rhs(ideal_);
        try {
          lhs = multiply(product(a, b), basis(c));
          rhs = multiply(basis(a), product(b, c));
        } catch (const MissingInvariantError& e) {
          missing.insert(missing.end(), e.missing().begin(), e.missing().end());
          continue;
        }
        std::set<std::pair<LatticeVector, ClassVector>> keys;
        for (const auto* side : {&lhs, &rhs})
          for (const auto& [r, s] : side->terms())
            for (const auto& [beta, v] : s.terms()) keys.insert({r, beta});
        for (const auto& [r, beta] : keys) {
          Rational l = lhs.coefficient(r).coefficient(beta);
          Rational x = rhs.coefficient(r).coefficient(beta);
          if (l != x) violations.push_back({a, b, c, r, beta, l, x});
        }
      }
    }
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
    throw MissingInvariantError(std::move(missing));
  }
  return violations;
}

Presentation ThetaAlgebra::presentation() const {
  Presentation pres;
  const std::size_t m = pair_.num_components();
  std::vector<std::size_t> rays;
  for (std::size_t i = 0; i < m; ++i) {
    if (space_.cy_sub.contains(BasisCone::from_indices({i}))) {
      rays.push_back(i);
      pres.generators.push_back(LatticeVector::unit(m, i));
    }
  }
  std::set<LatticeVector> needed;
  for (std::size_t a = 0; a < rays.size(); ++a) {
    for (std::size_t b = a; b < rays.size(); ++b) {
      auto cone = BasisCone::from_indices({rays[a], rays[b]});
      if (space_.cy_sub.contains(cone)) continue;
      Relation rel{{a, b}, product(pres.generators[a], pres.generators[b])};
      for (const auto& [r, c] : rel.rhs.terms()) {
        (void)c;
        needed.insert(r);
      }
      pres.relations.push_back(std::move(rel));
    }
  }
  // theta_r = prod theta_{e_i}^{r_i} must hold for every r used above.
  pres.closed = true;
  std::vector<LatticeVector> todo(needed.begin(), needed.end());
  std::set<LatticeVector> checked;
  while (!todo.empty() && pres.closed) {
    auto r = todo.back();
    todo.pop_back();
    if (r.sum() <= 1 || !checked.insert(r).second) continue;
    std::size_t i = 0;
    while (r[i] == 0) ++i;
    auto rest = r - LatticeVector::unit(m, i);
    if (!(product(rest, LatticeVector::unit(m, i)) == basis(r))) pres.closed = false;
    todo.push_back(rest);
  }
  return pres;
}

std::map<std::int64_t, std::vector<LatticeVector>> ThetaAlgebra::graded_points(
    std::int64_t max_degree) const {
  std::map<std::int64_t, std::vector<LatticeVector>> out;
  for (const auto& p : integral_points(space_.cy_sub, max_degree)) {
    auto d = grading(space_, p);
    if (d <= max_degree) out[d].push_back(p);
  }
  return out;
}

std::string format_point(const LatticeVector& p, const PairDescriptor& pair) {
  if (p.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (p[i] != 1) s += std::to_string(p[i]) + "*";
    s += i < pair.components.size() ? pair.components[i] : "D" + std::to_string(i + 1);
  }
  return s;
}

std::string format_theta(const ThetaElement& x, const PairDescriptor& pair) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [r, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    std::string coeff = format_series(c, pair.class_names);
    if (c.size() > 1) coeff = "(" + coeff + ")";
    out += (coeff == "1" ? "" : coeff + "*") + "theta[" + format_point(r, pair) + "]";
  }
  return out;
}

std::string format_relation(const Relation& rel, const Presentation& pres,
                            const PairDescriptor& pair) {
  auto gen_name = [&](const LatticeVector& g) { return "theta[" + format_point(g, pair) + "]"; };
  std::string out;
  for (std::size_t k = 0; k < rel.lhs_generators.size(); ++k) {
    if (k) out += "*";
    out += gen_name(pres.generators[rel.lhs_generators[k]]);
  }
  for (const auto& [r, c] : rel.rhs.terms()) {
    std::string mono;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += gen_name(LatticeVector::unit(r.size(), i));
      if (r[i] > 1) mono += "^" + std::to_string(r[i]);
    }
    for (const auto& [beta, v] : c.terms()) {
      std::string term;
      Rational a = abs(v);
      if (a != 1) term += to_string(a);
      if (!beta.is_zero()) term += (term.empty() ? "" : "*") + format_class(beta, pair.class_names);
      if (!mono.empty()) term += (term.empty() ? "" : "*") + mono;
      if (term.empty()) term = "1";
      out += (v < 0 ? " + " : " - ") + term;
    }
  }
  return out;
}

}  // namespace thetamirror
