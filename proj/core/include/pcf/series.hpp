#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

struct ZeroConstantTerm : std::domain_error {
  ZeroConstantTerm() : std::domain_error("series: constant term is zero") {}
};

struct NotRevertible : std::domain_error {
  NotRevertible() : std::domain_error("series: needs a[0] = 0 and a[1] != 0") {}
};

// Truncated formal power series with exact rational coefficients.
// coeff(k) is the coefficient of X^k; read at infinity it is the coefficient
// of 1/z^(k+1).  Length is always order+1 and trailing zeros are kept: the
// order is part of the value, not an optimization.
class Series {
 public:
  explicit Series(std::size_t order) : c_(order + 1) {}
  explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("Series: empty coefficient list");
  }

  std::size_t order() const { return c_.size() - 1; }
  const Rational& coeff(std::size_t k) const { return c_.at(k); }
  const Rational& operator[](std::size_t k) const { return c_[k]; }
  void set(std::size_t k, Rational v) { c_.at(k) = std::move(v); }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Truncation to min(order, n).
  Series truncated(std::size_t n) const {
    std::vector<Rational> c(c_.begin(), c_.begin() + static_cast<long>(std::min(n, order()) + 1));
    return Series(std::move(c));
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
};

// Exact truncated multiplicative inverse; mul(a, recip(a)) == 1 to a.order().
// Throws ZeroConstantTerm when a[0] == 0.
Series recip(const Series& a);

// Compositional inverse R with a(R(X)) = X to a.order().  Requires
// a[0] == 0 and a[1] != 0, otherwise NotRevertible.
Series revert(const Series& a);

// b_n = sum_k C(n,k) a_k c^(n-k); shifting by c then by d equals shifting
// by c+d, and c = 0 is the identity.
std::vector<Rational> binomial_shift(std::span<const Rational> a, const Rational& c);

// Moment sequence of the secondary measure, extracted from
//   X*sum m_k(nu) X^k = 1/X - m1/m0 - m0/(X*sum m_k(mu) X^k).
// Needs mu[0] != 0 (ZeroConstantTerm) and at least N+3 input moments.
std::vector<Rational> secondary_moments(std::span<const Rational> mu, std::size_t n_out);

}  // namespace pcf
