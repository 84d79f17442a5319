#include "thetamirror/invariant_table.hpp"

#include "thetamirror/snc_pair.hpp"

namespace thetamirror {

InvariantKey InvariantKey::normalized() const {
  if (q < p) return {q, p, r, beta};
  return *this;
}

std::string to_string(const InvariantKey& key) {
  return "(" + to_string(key.p) + "," + to_string(key.q) + "," + to_string(key.r) + "," +
         to_string(key.beta) + ")";
}

void InvariantTable::set(const InvariantKey& key, const Rational& value) {
  auto k = key.normalized();
  auto [it, inserted] = entries_.try_emplace(k, value);
  if (!inserted && it->second != value)
    fail("inconsistent-table", "conflicting values for " + to_string(k));
}

std::optional<Rational> InvariantTable::find(const InvariantKey& key) const {
  auto it = entries_.find(key.normalized());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void InvariantTable::validate_against(const PairDescriptor& pair) const {
  for (const auto& [k, v] : entries_) {
    (void)v;
    const std::size_t m = pair.num_components();
    require(k.p.size() == m && k.q.size() == m && k.r.size() == m, "dimension-mismatch",
            "invariant " + to_string(k) + " has points of the wrong length");
    require(k.beta.size() == pair.class_rank(), "dimension-mismatch",
            "invariant " + to_string(k) + " has a class of the wrong rank");
    require(k.beta.is_nonnegative(), "precondition",
            "invariant " + to_string(k) + " has a non-effective class");
    require(pair.log_canonical_degree(k.beta) == 0, "nonzero-virtual-dimension",
            "invariant " + to_string(k) + " has beta.(K_X+D) != 0");
  }
}

namespace {

std::string describe(const std::vector<InvariantKey>& missing) {
  std::string s;
  for (const auto& k : missing) s += (s.empty() ? "" : " ") + to_string(k);
  return s;
}

}  // namespace

MissingInvariantError::MissingInvariantError(std::vector<InvariantKey> missing)
    : Error("missing-invariant", describe(missing)), missing_(std::move(missing)) {}

}  // namespace thetamirror
