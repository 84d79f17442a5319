#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace thetamirror {

using Rational = mpq_class;

std::string to_string(const Rational& q);

// Accepts "3", "-2/5" and the like; throws Error("malformed-rational").
Rational parse_rational(const std::string& text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& q);

}  // namespace thetamirror
