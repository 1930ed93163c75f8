#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace realroot {

// Exact scalar for all coefficient and matrix arithmetic. mpq_class keeps
// values canonical (reduced, positive denominator) through every operation,
// which the exact certificate checks rely on.
using Rational = mpq_class;

using Complex = std::complex<double>;

int sign(const Rational& q);

// Canonical rendering: "num/den", with "/den" omitted when den = 1.
std::string to_string(const Rational& q);

// Accepts "a" or "a/b" with an optional leading sign. Rejects anything else,
// including zero denominators.
Rational rational_from_string(std::string_view text);

// Exact conversion; every finite binary double is a rational.
Rational rational_from_double(double v);

double to_double(const Rational& q);

}  // namespace realroot
