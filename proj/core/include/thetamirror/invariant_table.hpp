#pragma once

#include <map>
#include <optional>
#include <vector>

#include "thetamirror/error.hpp"
#include "thetamirror/int_vector.hpp"
#include "thetamirror/rational.hpp"

namespace thetamirror {

struct PairDescriptor;

// Key of a punctured invariant N^beta_{pqr}; stored with p <= q.
struct InvariantKey {
  LatticeVector p;
  LatticeVector q;
  LatticeVector r;
  ClassVector beta;

  InvariantKey normalized() const;
  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
  friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

std::string to_string(const InvariantKey& key);

class InvariantTable {
 public:
  // Stores under the symmetric key; a conflicting duplicate throws
  // Error("inconsistent-table").
  void set(const InvariantKey& key, const Rational& value);
  std::optional<Rational> find(const InvariantKey& key) const;
  const std::map<InvariantKey, Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Rejects entries with beta . (K_X + D) != 0 or mismatched shapes.
  void validate_against(const PairDescriptor& pair) const;

 private:
  std::map<InvariantKey, Rational> entries_;
};

class MissingInvariantError : public Error {
 public:
  explicit MissingInvariantError(std::vector<InvariantKey> missing);
  const std::vector<InvariantKey>& missing() const { return missing_; }

 private:
  std::vector<InvariantKey> missing_;
};

}  // namespace thetamirror
