#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/rational.hpp"

namespace realroot {

// Dense univariate polynomial over Q, coefficients ascending: coeffs()[j]
// multiplies x^j. The zero polynomial has an empty coefficient sequence;
// trailing zeros are stripped on construction so equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly x();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& leading() const;     // requires a nonzero polynomial
  Rational coeff(std::size_t j) const; // zero beyond the degree

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  bool operator==(const Poly&) const = default;

 private:
  std::vector<Rational> coeffs_;
  void normalize();
};

Poly derivative(const Poly& p);

Rational eval(const Poly& p, const Rational& t);
Complex eval(const Poly& p, const Complex& t);

// Quotient and remainder with deg(remainder) < deg(b); b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

Poly make_monic(const Poly& f);

// Monic gcd by plain rational Euclidean remainders. Coefficients can grow
// along the remainder chain; acceptable at the degrees this library targets.
Poly poly_gcd(const Poly& a, const Poly& b);

// f / gcd(f, f'): monic, same distinct roots, all simple. Requires deg >= 1.
Poly squarefree_part(const Poly& f);

// Squarefree factors grouped by multiplicity: pairs (m, w_m) where w_m is
// monic with deg >= 1 and its roots are exactly the multiplicity-m roots
// of f. Computed from the repeated gcd(h, h') chain, entirely exact.
std::vector<std::pair<int, Poly>> multiplicity_classes(const Poly& f);

// Expression rendering, e.g. "x^3-6*x^2+11*x-6"; parse(format(p)) == p.
std::string format(const Poly& p);

// Auto-detects the two accepted input forms: an expression when the text
// mentions x, otherwise an ascending coefficient list.
Poly parse_poly(std::string_view text);
Poly parse_poly_expression(std::string_view text);
Poly parse_poly_coeff_list(std::string_view text);

}  // namespace realroot
