#pragma once

// theta_p theta_q = theta_{p+q} when p and q lie in a common cone, else 0.

#include <optional>
#include <vector>

#include "thetamirror/snc_pair.hpp"

namespace oracle {

inline std::optional<std::vector<std::int64_t>> zeroth_rule(const thetamirror::PairDescriptor& pair,
                                                            const std::vector<std::int64_t>& p,
                                                            const std::vector<std::int64_t>& q) {
  const std::size_t m = p.size();
  std::vector<bool> used(m, false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (p[i] != 0 || q[i] != 0) {
      used[i] = true;
      ++count;
    }
  bool common = count <= 1;
  for (const auto& s : pair.strata) {
    if (common) break;
    std::size_t hit = 0;
    for (auto i : s) hit += used[i] ? 1 : 0;
    common = hit == count;
  }
  if (!common) return std::nullopt;
  std::vector<std::int64_t> r(m);
  for (std::size_t i = 0; i < m; ++i) r[i] = p[i] + q[i];
  return r;
}

}  // namespace oracle
