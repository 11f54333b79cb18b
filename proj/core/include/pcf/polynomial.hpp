#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

// Dense polynomial over Rational, coefficients in ascending degree.
// Normal form has no trailing zero coefficients; the zero polynomial is {}.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
  // x^k
  static Polynomial monomial(std::size_t k, Rational scale = Rational(1));

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1 by convention
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& x) const;
  long double eval_ld(long double x) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& s) const;

  // Euclidean division; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  // Monic gcd of a and b.
  static Polynomial gcd(Polynomial a, Polynomial b);

  // Coefficients ascending, joined with ';' ("0" for the zero polynomial).
  std::string coeff_str() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

}  // namespace pcf
