#include "core/poly.hpp"

#include <sstream>

#include "core/error.hpp"

namespace realroot {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) {
  if (c == 0) return Poly{};
  return Poly{std::vector<Rational>{c}};
}

Poly Poly::x() { return Poly{0, 1}; }

const Rational& Poly::leading() const {
  if (is_zero()) throw Error(Errc::zero_polynomial, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational Poly::coeff(std::size_t j) const {
  if (j >= coeffs_.size()) return Rational(0);
  return coeffs_[j];
}

Poly Poly::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out[j] = -coeffs_[j];
  return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t j = 0; j < out.size(); ++j) {
    if (j < a.coeffs_.size()) out[j] += a.coeffs_[j];
    if (j < b.coeffs_.size()) out[j] += b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& p) {
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t j = 0; j < p.coeffs_.size(); ++j) out[j] = c * p.coeffs_[j];
  return Poly(std::move(out));
}

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly{};
  std::vector<Rational> out(p.coeffs().size() - 1);
  for (std::size_t j = 1; j < p.coeffs().size(); ++j) {
    out[j - 1] = Rational(static_cast<long>(j)) * p.coeffs()[j];
  }
  return Poly(std::move(out));
}

Rational eval(const Poly& p, const Rational& t) {
  Rational acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

Complex eval(const Poly& p, const Complex& t) {
  Complex acc(0.0, 0.0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * t + Complex(to_double(*it), 0.0);
  }
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(Errc::zero_polynomial, "division by the zero polynomial");
  const int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational& lead = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + db)] / lead;
    if (q == 0) continue;
    quot[static_cast<std::size_t>(k)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly make_monic(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "cannot normalize the zero polynomial");
  if (f.leading() == 1) return f;
  return (Rational(1) / f.leading()) * f;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(Errc::zero_polynomial, "gcd of two zero polynomials is undefined");
  }
  Poly u = a, v = b;
  while (!v.is_zero()) {
    Poly r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
  }
  return make_monic(u);
}

Poly squarefree_part(const Poly& f) {
  if (f.degree() < 1) {
    throw Error(Errc::constant_input, "squarefree part requires a nonconstant polynomial");
  }
  Poly g = poly_gcd(f, derivative(f));
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw Error(Errc::internal, "gcd does not divide its argument");
  return make_monic(q);
}

std::vector<std::pair<int, Poly>> multiplicity_classes(const Poly& f) {
  if (f.degree() < 1) {
    throw Error(Errc::constant_input, "multiplicity classes require a nonconstant polynomial");
  }
  // h[0] = monic f, h[i+1] = gcd(h[i], h[i]'); h[i] collects roots of
  // multiplicity > i, so s[i] = h[i-1]/h[i] has the roots of multiplicity
  // >= i and w[i] = s[i]/s[i+1] those of multiplicity exactly i.
  std::vector<Poly> h;
  h.push_back(make_monic(f));
  while (h.back().degree() >= 1) {
    h.push_back(poly_gcd(h.back(), derivative(h.back())));
  }
  std::vector<Poly> s;
  for (std::size_t i = 1; i < h.size(); ++i) {
    s.push_back(divmod(h[i - 1], h[i]).first);
  }
  std::vector<std::pair<int, Poly>> classes;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Poly w = (i + 1 < s.size()) ? divmod(s[i], s[i + 1]).first : s[i];
    if (w.degree() >= 1) {
      classes.emplace_back(static_cast<int>(i) + 1, make_monic(w));
    }
  }
  return classes;
}

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int j = p.degree(); j >= 0; --j) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? '-' : '+');
    }
    Rational mag = abs(c);
    if (j == 0) {
      out << to_string(mag);
    } else {
      if (mag != 1) out << to_string(mag) << '*';
      out << 'x';
      if (j >= 2) out << '^' << j;
    }
  }
  return out.str();
}

}  // namespace realroot
