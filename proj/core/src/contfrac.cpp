#include "pcf/contfrac.hpp"

#include <algorithm>

namespace pcf {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  Polynomial g = Polynomial::gcd(num, den);
  if (!g.is_zero() && g.degree() > 0) {
    num = Polynomial::divmod(num, g).first;
    den = Polynomial::divmod(den, g).first;
  }
  Rational lead = den.leading();
  num_ = num.scaled(Rational(1) / lead);
  den_ = den.scaled(Rational(1) / lead);
}

namespace {

// Standard three-term recurrence for P_k/Q_k with partial denominator
// polynomials d_k and partial numerators a_1, -a_2, -a_3, ... (the "minus"
// convention used throughout).
RationalFunction run_recurrence(const std::vector<Rational>& a, std::size_t n,
                                const std::vector<Polynomial>& d) {
  Polynomial p_prev2, p_prev1 = Polynomial::constant(a[0]);
  Polynomial q_prev2 = Polynomial::constant(1), q_prev1 = d[0];
  for (std::size_t k = 2; k <= n; ++k) {
    Polynomial neg = Polynomial::constant(a[k - 1]);
    Polynomial p = d[k - 1] * p_prev1 - neg * p_prev2;
    Polynomial q = d[k - 1] * q_prev1 - neg * q_prev2;
    p_prev2 = std::move(p_prev1);
    p_prev1 = std::move(p);
    q_prev2 = std::move(q_prev1);
    q_prev1 = std::move(q);
  }
  return RationalFunction(p_prev1, q_prev1);
}

}  // namespace

RationalFunction approximant(const SFraction& cf, std::size_t n) {
  if (n > cf.depth()) throw IndexOutOfRange();
  if (n == 0) return RationalFunction();
  std::vector<Polynomial> d(n);
  for (std::size_t k = 1; k <= n; ++k)
    d[k - 1] = (k % 2 == 1) ? Polynomial::monomial(1) : Polynomial::constant(1);
  return run_recurrence(cf.a, n, d);
}

RationalFunction approximant(const JFraction& cf, std::size_t n) {
  if (n > cf.depth()) throw IndexOutOfRange();
  if (n == 0) return RationalFunction();
  std::vector<Polynomial> d(n);
  for (std::size_t k = 1; k <= n; ++k)
    d[k - 1] = Polynomial({cf.b[k - 1], Rational(1)});  // z + b_k
  return run_recurrence(cf.a, n, d);
}

JFraction contract_s_to_j(const SFraction& s) {
  std::size_t m = s.a.size();
  if (m < 2) throw TooShort();
  std::size_t depth = m / 2;
  JFraction j;
  j.a.reserve(depth);
  j.b.reserve(depth);
  j.a.push_back(s.a[0]);
  j.b.push_back(-s.a[1]);
  for (std::size_t k = 2; k <= depth; ++k) {
    j.a.push_back(s.a[2 * k - 3] * s.a[2 * k - 2]);
    j.b.push_back(-(s.a[2 * k - 2] + s.a[2 * k - 1]));
  }
  return j;
}

SFractionSynthesis moments_to_sfraction(const MomentSeq& m, std::size_t count) {
  if (m.mu.size() < count + 1)
    throw std::invalid_argument("moments_to_sfraction: need count+1 moments");

  SFractionSynthesis out;
  auto& a = out.fraction.a;
  auto push = [&](const Rational& v) {
    if (v.is_zero()) throw DegenerateMoments(a);
    if (v.sign() < 0) out.stieltjes = false;
    a.push_back(v);
  };
  if (count == 0) return out;

  // Quotient-difference scheme over exact rationals.  Only the first
  // count+1 moments participate, which keeps every computed table entry on
  // the dependency path of some requested coefficient.
  std::size_t n_mu = count + 1;
  push(m.mu[0]);  // a_1 = mu_0

  // q_1^(k) = mu_{k+1}/mu_k
  std::vector<Rational> q, e;
  for (std::size_t k = 0; k + 1 < n_mu; ++k) {
    if (m.mu[k].is_zero()) throw DegenerateMoments(a);
    q.push_back(m.mu[k + 1] / m.mu[k]);
  }
  std::size_t j = 1;
  while (a.size() < count) {
    push(q[0]);  // a_{2j} = q_j^(0)
    if (a.size() == count) break;
    // e_j^(k) = q_j^(k+1) - q_j^(k) + e_{j-1}^(k+1)
    std::vector<Rational> e_next;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      Rational v = q[k + 1] - q[k];
      if (j > 1) v += e[k + 1];
      e_next.push_back(v);
    }
    e = std::move(e_next);
    push(e[0]);  // a_{2j+1} = e_j^(0)
    if (a.size() == count) break;
    // q_{j+1}^(k) = q_j^(k+1) e_j^(k+1) / e_j^(k)
    std::vector<Rational> q_next;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      if (e[k].is_zero()) throw DegenerateMoments(a);
      q_next.push_back(q[k + 1] * e[k + 1] / e[k]);
    }
    q = std::move(q_next);
    ++j;
  }
  return out;
}

Series taylor_at_infinity(const RationalFunction& w, std::size_t n) {
  if (w.is_zero()) return Series(n);
  long d = w.den().degree();
  long e = w.num().degree();
  if (e >= d) throw NotProperAtInfinity();

  // Reverse both polynomials (series in 1/z) and long-divide:
  // w(z) = z^-(d-e) * P~(1/z)/Q~(1/z).
  Series pr(n + 1), qr(n + 1);
  for (long i = 0; i <= e && i <= static_cast<long>(n) + 1; ++i)
    pr.set(static_cast<std::size_t>(i), w.num().coeff(static_cast<std::size_t>(e - i)));
  for (long i = 0; i <= d && i <= static_cast<long>(n) + 1; ++i)
    qr.set(static_cast<std::size_t>(i), w.den().coeff(static_cast<std::size_t>(d - i)));
  Series t = pr * recip(qr);

  Series c(n);
  long shift = d - e;  // >= 1
  for (std::size_t k = 0; k <= n; ++k) {
    long idx = static_cast<long>(k) + 1 - shift;
    if (idx >= 0) c.set(k, t.coeff(static_cast<std::size_t>(idx)));
  }
  return c;
}

RationalFunction pade_from_moments(const MomentSeq& m, std::size_t n) {
  if (n == 0) return RationalFunction();
  if (m.mu.size() < 2 * n)
    throw std::invalid_argument("pade_from_moments: need 2n moments");

  // Denominator q(z) = z^n + q_{n-1} z^{n-1} + ... + q_0 solves the Hankel
  // system sum_j q_j mu_{i+j} = -mu_{i+n}, i = 0..n-1.
  std::size_t dim = n;
  std::vector<std::vector<Rational>> aug(dim, std::vector<Rational>(dim + 1));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = m.mu[i + j];
    aug[i][dim] = -m.mu[i + n];
  }
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && aug[piv][col].is_zero()) ++piv;
    if (piv == dim) throw SingularSystem();
    std::swap(aug[piv], aug[col]);
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == col || aug[row][col].is_zero()) continue;
      Rational f = aug[row][col] / aug[col][col];
      for (std::size_t j = col; j <= dim; ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  std::vector<Rational> qc(n + 1);
  qc[n] = 1;
  for (std::size_t j = 0; j < dim; ++j) qc[j] = aug[j][dim] / aug[j][j];

  // Polynomial part of (sum mu_k z^-(k+1)) * q(z).
  std::vector<Rational> pc(n);
  for (std::size_t t = 0; t < n; ++t) {
    Rational acc;
    for (std::size_t jj = t + 1; jj <= n; ++jj) acc += qc[jj] * m.mu[jj - t - 1];
    pc[t] = acc;
  }
  return RationalFunction(Polynomial(std::move(pc)), Polynomial(std::move(qc)));
}

Polynomial laguerre(std::size_t n) {
  std::vector<Rational> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational v(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)),
               factorial(static_cast<unsigned>(k)));
    c[k] = (k % 2 == 0) ? v : -v;
  }
  return Polynomial(std::move(c));
}

Rational prime_numerator_coefficient(std::size_t n, std::size_t k) {
  Rational acc;
  for (std::size_t j = k; j <= n; ++j) {
    Rational term(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                      factorial(static_cast<unsigned>(j - k)),
                  factorial(static_cast<unsigned>(j)));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

RationalFunction prime_w_closed_form(std::size_t n) {
  if (n == 0) throw std::invalid_argument("prime_w_closed_form: n >= 1");
  BigInt nf = factorial(static_cast<unsigned>(n));
  Rational sign_nf = (n % 2 == 0) ? Rational(nf) : -Rational(nf);
  Polynomial q = laguerre(n).scaled(sign_nf);
  std::vector<Rational> pc(n);
  for (std::size_t k = 1; k <= n; ++k) pc[k - 1] = prime_numerator_coefficient(n, k) * sign_nf;
  return RationalFunction(Polynomial(std::move(pc)), std::move(q));
}

std::variant<SFraction, JFraction> make_named_fraction(FractionKind kind, std::size_t family_n,
                                                       std::size_t depth) {
  if (depth < 1) throw std::invalid_argument("make_named_fraction: depth >= 1");
  auto nn = static_cast<long long>(family_n);
  switch (kind) {
    case FractionKind::PrimeS:
      family_n = 0;
      [[fallthrough]];
    case FractionKind::ExpintS: {
      SFraction s;
      s.a.reserve(depth);
      s.a.push_back(Rational(1));
      for (std::size_t k = 1; s.a.size() < depth; ++k) {
        s.a.push_back(Rational(static_cast<long long>(family_n) + static_cast<long long>(k)));
        if (s.a.size() == depth) break;
        s.a.push_back(Rational(static_cast<long long>(k)));
      }
      return s;
    }
    case FractionKind::PrimeJ:
      nn = 0;
      [[fallthrough]];
    case FractionKind::ExpintJ: {
      JFraction j;
      j.a.reserve(depth);
      j.b.reserve(depth);
      for (std::size_t k = 1; k <= depth; ++k) {
        auto kk = static_cast<long long>(k);
        j.a.push_back(k == 1 ? Rational(1) : Rational((kk - 1) * (nn + kk - 1)));
        j.b.push_back(Rational(-(nn + 2 * kk - 1)));
      }
      return j;
    }
  }
  throw std::invalid_argument("make_named_fraction: bad kind");
}

long double eval_backward(const JFraction& cf, std::size_t n, long double z) {
  if (n > cf.depth()) throw IndexOutOfRange();
  if (n == 0) return 0.0L;
  long double t = z + cf.b[n - 1].to_long_double();
  for (std::size_t i = n - 1; i-- > 0;)
    t = z + cf.b[i].to_long_double() - cf.a[i + 1].to_long_double() / t;
  return cf.a[0].to_long_double() / t;
}

long double eval_backward(const SFraction& cf, std::size_t n, long double z) {
  if (n > cf.depth()) throw IndexOutOfRange();
  if (n == 0) return 0.0L;
  auto den = [&](std::size_t level) { return (level % 2 == 1) ? z : 1.0L; };
  long double t = den(n);
  for (std::size_t i = n - 1; i-- > 0;) t = den(i + 1) - cf.a[i + 1].to_long_double() / t;
  return cf.a[0].to_long_double() / t;
}

}  // namespace pcf
