#include "pcf/series.hpp"

#include <algorithm>

namespace pcf {

Series operator+(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t k = 0; k <= n; ++k) r.c_[k] = a.c_[k] - b.c_[k];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  std::size_t n = std::min(a.order(), b.order());
  Series r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

Series recip(const Series& a) {
  if (a.coeff(0).is_zero()) throw ZeroConstantTerm();
  std::size_t n = a.order();
  Series b(n);
  b.set(0, Rational(1) / a.coeff(0));
  for (std::size_t k = 1; k <= n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a.coeff(i) * b.coeff(k - i);
    b.set(k, -acc / a.coeff(0));
  }
  return b;
}

Series revert(const Series& a) {
  if (!a.coeff(0).is_zero() || a.order() < 1 || a.coeff(1).is_zero()) throw NotRevertible();
  std::size_t n = a.order();

  // Solve a(R(X)) = X coefficient by coefficient.  pw[k][m] holds the X^m
  // coefficient of R^k; for k >= 2 it only involves R[1..m-k+1], so each
  // column can be filled before R[m] itself is known.
  std::vector<Rational> r(n + 1);
  std::vector<std::vector<Rational>> pw(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t k = 2; k <= m; ++k) {
      Rational acc;
      for (std::size_t i = 1; i + k - 1 <= m; ++i) acc += r[i] * pw[k - 1][m - i];
      pw[k][m] = acc;
    }
    if (m == 1) {
      r[1] = Rational(1) / a.coeff(1);
    } else {
      Rational acc;
      for (std::size_t k = 2; k <= m; ++k) acc += a.coeff(k) * pw[k][m];
      r[m] = -acc / a.coeff(1);
    }
    pw[1][m] = r[m];
  }
  return Series(std::move(r));
}

std::vector<Rational> binomial_shift(std::span<const Rational> a, const Rational& c) {
  std::vector<Rational> b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rational acc;
    Rational cp = 1;  // c^(n-k), built from k = n downward
    for (std::size_t k = n + 1; k-- > 0;) {
      acc += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) * a[k] * cp;
      cp *= c;
    }
    b[n] = acc;
  }
  return b;
}

std::vector<Rational> secondary_moments(std::span<const Rational> mu, std::size_t n_out) {
  if (mu.empty() || mu[0].is_zero()) throw ZeroConstantTerm();
  if (mu.size() < n_out + 3)
    throw std::invalid_argument("secondary_moments: need at least N+3 input moments");
  // With r = 1/sum mu_k X^k, the defining equation collapses to
  // m_k(nu) = -mu_0 * r_{k+2}; the 1/X and constant terms cancel exactly.
  Series r = recip(Series(std::vector<Rational>(mu.begin(), mu.end())));
  std::vector<Rational> nu(n_out + 1);
  for (std::size_t k = 0; k <= n_out; ++k) nu[k] = -(mu[0] * r.coeff(k + 2));
  return nu;
}

}  // namespace pcf
