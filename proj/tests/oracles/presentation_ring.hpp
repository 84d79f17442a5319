#pragma once

// Polynomial ring k[P]/I[x_1..x_m] modulo quadratic rewrite rules
// x_a x_b -> g_ab. Monomials with no applicable rule form the basis.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Exps = std::vector<std::int64_t>;
struct Mono {
  Exps beta;
  Exps x;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};
using Poly = std::map<Mono, mpq_class>;

class RewriteRing {
 public:
  RewriteRing(std::size_t m, Exps weights, std::int64_t bound)
      : m_(m), weights_(std::move(weights)), bound_(bound) {}

  void add_rule(std::size_t a, std::size_t b, Poly rhs) { rules_[{a, b}] = std::move(rhs); }

  void add(Poly& p, const Mono& mono, const mpq_class& c) const {
    std::int64_t w = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) w += weights_[i] * mono.beta[i];
    if (w >= bound_ || c == 0) return;
    auto& v = p[mono];
    v += c;
    if (v == 0) p.erase(mono);
  }

  Poly reduce(const Poly& in) const {
    Poly out;
    std::vector<std::pair<Mono, mpq_class>> todo(in.begin(), in.end());
    while (!todo.empty()) {
      auto [mono, c] = todo.back();
      todo.pop_back();
      bool rewritten = false;
      for (const auto& [ab, rhs] : rules_) {
        auto [a, b] = ab;
        if (mono.x[a] == 0 || mono.x[b] == 0) continue;
        Mono rest = mono;
        --rest.x[a];
        --rest.x[b];
        for (const auto& [r, rc] : rhs) {
          Mono t = rest;
          for (std::size_t i = 0; i < t.beta.size(); ++i) t.beta[i] += r.beta[i];
          for (std::size_t i = 0; i < m_; ++i) t.x[i] += r.x[i];
          todo.emplace_back(t, c * rc);
        }
        rewritten = true;
        break;
      }
      if (!rewritten) add(out, mono, c);
    }
    return out;
  }

  // Basis element theta_r = prod x_i^{r_i} times theta_s, reduced.
  Poly product(const Exps& r, const Exps& s, std::size_t classes) const {
    Exps x(m_);
    for (std::size_t i = 0; i < m_; ++i) x[i] = r[i] + s[i];
    return reduce({{Mono{Exps(classes, 0), x}, mpq_class(1)}});
  }

 private:
  std::size_t m_;
  Exps weights_;
  std::int64_t bound_;
  std::map<std::pair<std::size_t, std::size_t>, Poly> rules_;
};

// The blowup ring: x1 x3 = t^C2, x2 x4 = t^(C1+C3) + t^C1 x1.
inline RewriteRing blowup_ring(std::int64_t bound) {
  RewriteRing ring(4, {1, 1, 1}, bound);
  ring.add_rule(0, 2, {{Mono{{0, 1, 0}, {0, 0, 0, 0}}, mpq_class(1)}});
  ring.add_rule(1, 3, {{Mono{{1, 0, 1}, {0, 0, 0, 0}}, mpq_class(1)},
                       {Mono{{1, 0, 0}, {1, 0, 0, 0}}, mpq_class(1)}});
  return ring;
}

}  // namespace oracle
