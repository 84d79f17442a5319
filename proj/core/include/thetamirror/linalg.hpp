#pragma once

#include <cstdint>
#include <vector>

#include "thetamirror/rational.hpp"

namespace thetamirror::linalg {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row-reduces a copy; returns the rank.
std::size_t rank(RationalMatrix a);

// Basis of {x : a x = 0}; `cols` is needed when `a` has no rows.
std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t cols);

Rational determinant(RationalMatrix a);

std::int64_t determinant(const std::vector<std::vector<std::int64_t>>& a);

// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<std::int64_t> primitive_integer(const std::vector<Rational>& v);

}  // namespace thetamirror::linalg
