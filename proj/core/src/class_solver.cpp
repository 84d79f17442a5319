#include "thetamirror/class_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace thetamirror {

namespace {

bool in_generator_monoid(const ClassVector& c) { return c.is_nonnegative(); }

bool passes_contact(const PairDescriptor& pair, const LatticeVector& p, const LatticeVector& q,
                    const LatticeVector& r, const ClassVector& beta, const LatticeVector& dots) {
  if (beta.is_zero()) return true;
  const auto& classes = *pair.component_classes;
  for (std::size_t i = 0; i < pair.num_components(); ++i) {
    const bool touches = p[i] > 0 || q[i] > 0 || r[i] > 0;
    if (!touches || dots[i] > 0) continue;
    if (!in_generator_monoid(beta - classes[i])) return false;
  }
  return true;
}

}  // namespace

CandidateSet candidates(const PairDescriptor& pair, const TropicalSpace& space,
                        const LatticeVector& p, const LatticeVector& q,
                        const TruncationIdeal& ideal, const CandidateOptions& options) {
  const std::size_t m = pair.num_components();
  require(ideal.rank() == pair.class_rank(), "dimension-mismatch",
          "truncation rank differs from the class rank");
  require(p.size() == m && q.size() == m, "dimension-mismatch", "points have wrong length");
  require(space.cy_sub.contains_point(p), "not-in-complex", to_string(p) + " is not in B(Z)");
  require(space.cy_sub.contains_point(q), "not-in-complex", to_string(q) + " is not in B(Z)");

  const bool use_contact =
      options.contact_filter && pair.dimension == 2 && pair.component_classes.has_value();

  CandidateSet out;
  out.p = p;
  out.q = q;
  // theta_0 is the unit.
  if (p.is_zero() || q.is_zero()) {
    out.entries.push_back({p + q, ClassVector(pair.class_rank()), true});
    return out;
  }
  for (const auto& beta : ideal.standard_monomials()) {
    const auto dots = pair.intersection_vector(beta);
    LatticeVector r = p + q - dots;
    if (!r.is_nonnegative() || !space.full.contains(support(r))) continue;
    if (pair.log_canonical_degree(beta) != 0) {
      ++out.dropped_by_dimension;
      continue;
    }
    // beta . (K+D) = 0 already excludes every r touching a component with
    // a_i > 0, so this never fires.
    if (!space.cy_sub.contains(support(r)))
      throw std::logic_error("candidate outside B survived the dimension filter");
    if (use_contact && !passes_contact(pair, p, q, r, beta, dots)) {
      ++out.dropped_by_contact;
      continue;
    }
    if (space.central_fiber && space.central_fiber->dot(r) !=
                                   space.central_fiber->dot(p) + space.central_fiber->dot(q))
      throw std::logic_error("candidate breaks the degree grading");
    out.entries.push_back({r, beta, beta.is_zero()});
  }
  return out;
}

std::vector<ProductTerm> assemble_product(const CandidateSet& set, const InvariantTable& table,
                                          const TruncationIdeal& ideal) {
  std::map<LatticeVector, TruncatedSeries> acc;
  std::vector<InvariantKey> missing;
  for (const auto& c : set.entries) {
    Rational n = 1;
    if (!c.forced_by_constants) {
      InvariantKey key{set.p, set.q, c.r, c.beta};
      auto v = table.find(key);
      if (!v) {
        missing.push_back(key.normalized());
        continue;
      }
      n = *v;
    }
    auto it = acc.try_emplace(c.r, TruncatedSeries(ideal)).first;
    it->second.add_term(c.beta, n);
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    throw MissingInvariantError(std::move(missing));
  }
  std::vector<ProductTerm> out;
  for (auto& [r, s] : acc)
    if (!s.is_zero()) out.push_back({r, std::move(s)});
  return out;
}

}  // namespace thetamirror
