#include "thetamirror/trunc_ring.hpp"

#include <algorithm>

namespace thetamirror {

TruncationIdeal::TruncationIdeal(ClassVector weights, std::int64_t bound)
    : weights_(std::move(weights)), bound_(bound) {
  for (auto w : weights_) require(w >= 1, "precondition", "truncation weights must be >= 1");
  require(bound_ >= 1, "precondition", "truncation bound must be >= 1");
}

TruncationIdeal TruncationIdeal::uniform(std::size_t rank, std::int64_t bound) {
  return TruncationIdeal(ClassVector(rank, 1), bound);
}

namespace {

void standard_rec(const TruncationIdeal& ideal, std::size_t pos, std::int64_t budget,
                  ClassVector& cur, std::vector<ClassVector>& out) {
  if (pos == ideal.rank()) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t x = 0; x * ideal.weights()[pos] < budget; ++x) {
    cur[pos] = x;
    standard_rec(ideal, pos + 1, budget - x * ideal.weights()[pos], cur, out);
  }
  cur[pos] = 0;
}

template <class Element>
Element exp_impl(const Element& x) {
  require(x.is_nilpotent(), "precondition", "exp needs a nilpotent argument");
  Element one = Element::one(x.ideal(), x.lattice_rank());
  Element sum = one;
  Element term = one;
  for (std::int64_t k = 1;; ++k) {
    term = term * x;
    term *= Rational(1, static_cast<unsigned long>(k));
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

template <class Element>
Element log_impl(const Element& f) {
  Element one = Element::one(f.ideal(), f.lattice_rank());
  require(f.constant_term() == 1, "precondition", "log needs constant term 1");
  Element x = f - one;
  require(x.is_nilpotent(), "precondition", "log needs a unipotent argument");
  Element sum(f.ideal(), f.lattice_rank());
  Element power = one;
  for (std::int64_t k = 1;; ++k) {
    power = power * x;
    if (power.is_zero()) break;
    Rational c(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    sum += c * power;
  }
  return sum;
}

}  // namespace

std::vector<ClassVector> TruncationIdeal::standard_monomials() const {
  std::vector<ClassVector> out;
  ClassVector cur(rank());
  standard_rec(*this, 0, bound_, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

TruncatedSeries series_monomial(const TruncationIdeal& ideal, const ClassVector& beta,
                                const Rational& c) {
  require(beta.size() == ideal.rank(), "dimension-mismatch", "class has wrong rank");
  TruncatedSeries s(ideal);
  s.add_term(beta, c);
  return s;
}

LaurentElement laurent_monomial(const TruncationIdeal& ideal, const ClassVector& beta,
                                const LatticeVector& m, const Rational& c) {
  require(beta.size() == ideal.rank(), "dimension-mismatch", "class has wrong rank");
  LaurentElement f(ideal, m.size());
  f.add_term({beta, m}, c);
  return f;
}

LaurentElement constant_laurent(const TruncatedSeries& s, std::size_t lattice_rank) {
  LaurentElement f(s.ideal(), lattice_rank);
  for (const auto& [beta, c] : s.terms()) f.add_term({beta, LatticeVector(lattice_rank)}, c);
  return f;
}

LaurentElement exp_nilpotent(const LaurentElement& x) { return exp_impl(x); }
TruncatedSeries exp_nilpotent(const TruncatedSeries& x) { return exp_impl(x); }
LaurentElement log_unit(const LaurentElement& f) { return log_impl(f); }
TruncatedSeries log_unit(const TruncatedSeries& f) { return log_impl(f); }

std::string format_class(const ClassVector& beta, const std::vector<std::string>& names) {
  std::string s;
  std::size_t parts = 0;
  bool simple = true;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 0) continue;
    const std::string name = i < names.size() ? names[i] : "C" + std::to_string(i + 1);
    if (beta[i] < 0)
      s += "-";
    else if (parts)
      s += "+";
    auto a = beta[i] < 0 ? -beta[i] : beta[i];
    if (a != 1) s += std::to_string(a);
    simple = simple && a == 1 && beta[i] > 0;
    s += name;
    ++parts;
  }
  if (parts == 0) return "1";
  return parts == 1 && simple ? "t^" + s : "t^(" + s + ")";
}

namespace {

std::string join_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    Rational a = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (mono.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace

std::string format_series(const TruncatedSeries& s, const std::vector<std::string>& names) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [beta, c] : s.terms())
    terms.emplace_back(c, beta.is_zero() ? "" : format_class(beta, names));
  return join_terms(terms);
}

std::string format_laurent(const LaurentElement& f, const std::vector<std::string>& names) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (const auto& [key, c] : f.terms()) {
    std::string mono;
    if (!key.beta.is_zero()) mono = format_class(key.beta, names);
    if (!key.exponent.is_zero()) mono += (mono.empty() ? "" : "*") + ("z^" + to_string(key.exponent));
    terms.emplace_back(c, mono);
  }
  return join_terms(terms);
}

}  // namespace thetamirror
