#include "thetamirror/rational.hpp"

#include "thetamirror/error.hpp"

namespace thetamirror {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    fail("malformed-rational", "cannot parse '" + text + "'");
  }
  require(q.get_den() != 0, "malformed-rational", "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  require(den != 0, "malformed-rational", "zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace thetamirror
