#include "core/rational.hpp"

#include <cctype>
#include <cmath>

#include "core/error.hpp"

namespace realroot {

int sign(const Rational& q) { return sgn(q); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

// mpq_set_str silently ignores embedded whitespace, so validate the shape
// ourselves before handing the text to GMP.
bool looks_like_rational(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational rational_from_string(std::string_view text) {
  if (!looks_like_rational(text)) {
    throw Error(Errc::parse_error, "invalid rational literal '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(s.begin());
  Rational q(s, 10);
  if (q.get_den() == 0) {
    throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
  }
  q.canonicalize();
  return q;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) {
    throw Error(Errc::internal, "cannot rationalize a non-finite value");
  }
  return Rational(v);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace realroot
