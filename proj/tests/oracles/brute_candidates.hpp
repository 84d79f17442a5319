#pragma once

// Exhaustive search for (r, beta) solving the linear constraints, written
// against the raw descriptor data only.

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "thetamirror/snc_pair.hpp"

namespace oracle {

struct BruteCandidate {
  std::vector<std::int64_t> r;
  std::vector<std::int64_t> beta;
  friend auto operator<=>(const BruteCandidate&, const BruteCandidate&) = default;
};

inline bool in_some_stratum(const thetamirror::PairDescriptor& pair,
                            const std::vector<std::int64_t>& r) {
  std::vector<std::size_t> supp;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) supp.push_back(i);
  if (supp.size() <= 1) return true;
  for (const auto& s : pair.strata) {
    bool all = true;
    for (auto i : supp) all = all && std::find(s.begin(), s.end(), i) != s.end();
    if (all) return true;
  }
  return false;
}

template <class F>
void boxes(std::size_t n, std::int64_t total, std::vector<std::int64_t>& cur, F&& f) {
  if (cur.size() == n) {
    f(cur);
    return;
  }
  for (std::int64_t v = 0; v <= total; ++v) {
    cur.push_back(v);
    boxes(n, total - v, cur, f);
    cur.pop_back();
  }
}

inline std::set<BruteCandidate> brute_candidates(const thetamirror::PairDescriptor& pair,
                                                 const std::vector<std::int64_t>& p,
                                                 const std::vector<std::int64_t>& q,
                                                 std::int64_t max_height, std::int64_t max_degree,
                                                 const std::vector<std::int64_t>& weights,
                                                 std::int64_t bound, bool contact = true) {
  const std::size_t m = pair.components.size();
  const std::size_t k = pair.class_names.size();
  std::set<BruteCandidate> out;
  bool p_zero = true, q_zero = true;
  for (std::size_t i = 0; i < m; ++i) {
    p_zero = p_zero && p[i] == 0;
    q_zero = q_zero && q[i] == 0;
  }
  if (p_zero || q_zero) {
    std::vector<std::int64_t> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = p[i] + q[i];
    out.insert({r, std::vector<std::int64_t>(k, 0)});
    return out;
  }
  std::vector<std::int64_t> r_cur, b_cur;
  boxes(m, max_height, r_cur, [&](const std::vector<std::int64_t>& r) {
    if (!in_some_stratum(pair, r)) return;
    for (std::size_t i = 0; i < m; ++i)
      if (r[i] != 0 && pair.discrepancies[i] != 0) return;
    boxes(k, max_degree, b_cur, [&](const std::vector<std::int64_t>& beta) {
      std::int64_t w = 0;
      for (std::size_t c = 0; c < k; ++c) w += weights[c] * beta[c];
      if (w >= bound) return;
      std::vector<std::int64_t> dots(m, 0);
      for (std::size_t c = 0; c < k; ++c)
        for (std::size_t i = 0; i < m; ++i) dots[i] += beta[c] * pair.intersection_matrix[c][i];
      std::int64_t canonical = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (dots[i] != p[i] + q[i] - r[i]) return;
        canonical += pair.discrepancies[i] * dots[i];
      }
      if (canonical != 0) return;
      bool nonzero = false;
      for (auto b : beta) nonzero = nonzero || b != 0;
      if (contact && nonzero && pair.dimension == 2 && pair.component_classes) {
        for (std::size_t i = 0; i < m; ++i) {
          if (!(p[i] > 0 || q[i] > 0 || r[i] > 0) || dots[i] > 0) continue;
          const auto& cls = (*pair.component_classes)[i];
          for (std::size_t c = 0; c < k; ++c)
            if (beta[c] - cls[c] < 0) return;
        }
      }
      out.insert({r, beta});
    });
  });
  return out;
}

}  // namespace oracle
