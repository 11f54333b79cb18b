#include "pcf/polynomial.hpp"

#include <stdexcept>

namespace pcf {

Polynomial Polynomial::monomial(std::size_t k, Rational scale) {
  std::vector<Rational> c(k + 1);
  c[k] = std::move(scale);
  return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

long double Polynomial::eval_ld(long double x) const {
  long double acc = 0.0L;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_long_double();
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& s) const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero");
  Polynomial r = a;
  if (r.degree() < b.degree()) return {Polynomial(), r};
  std::vector<Rational> q(static_cast<std::size_t>(r.degree() - b.degree()) + 1);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    Rational f = r.leading() / b.leading();
    q[shift] = f;
    r = r - (b * Polynomial::monomial(shift, f));
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(Rational(1) / a.leading());  // monic
}

std::string Polynomial::coeff_str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ';';
    s += c_[i].str();
  }
  return s;
}

}  // namespace pcf
