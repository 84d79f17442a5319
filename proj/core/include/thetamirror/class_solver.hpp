#pragma once

#include <vector>

#include "thetamirror/invariant_table.hpp"
#include "thetamirror/snc_pair.hpp"
#include "thetamirror/trunc_ring.hpp"

namespace thetamirror {

struct Candidate {
  LatticeVector r;
  ClassVector beta;
  bool forced_by_constants = false;  // beta == 0, so N = 1
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct CandidateSet {
  LatticeVector p;
  LatticeVector q;
  std::vector<Candidate> entries;  // sorted by (beta, r)
  // How many (r, beta) survived the linear constraints but were dropped.
  std::size_t dropped_by_dimension = 0;
  std::size_t dropped_by_contact = 0;
};

struct CandidateOptions {
  // Surfaces with declared component classes: a curve meeting D_i with
  // beta . D_i <= 0 must contain D_i as a component.
  bool contact_filter = true;
};

// All (r, beta) with beta not in I, beta . D_i = p_i + q_i - r_i and
// beta . (K_X + D) = 0, r in B(Z).
CandidateSet candidates(const PairDescriptor& pair, const TropicalSpace& space,
                        const LatticeVector& p, const LatticeVector& q,
                        const TruncationIdeal& ideal, const CandidateOptions& options = {});

struct ProductTerm {
  LatticeVector r;
  TruncatedSeries coefficient;
};

// alpha_{pqr} = sum_beta N^beta_{pqr} t^beta over the candidates; forced
// entries contribute 1. Throws MissingInvariantError listing every
// non-forced candidate absent from the table.
std::vector<ProductTerm> assemble_product(const CandidateSet& set, const InvariantTable& table,
                                          const TruncationIdeal& ideal);

}  // namespace thetamirror
