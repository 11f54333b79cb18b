#include "pcf/special.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>

#include "pcf/rational.hpp"
#include "pcf/sequences.hpp"

namespace pcf {

namespace {

constexpr long double kLdEps = 1e-19L;

// Kahan-compensated accumulator; the long sums here are all-positive, so
// this pins the rounding error to a couple of ulps independent of length.
struct Kahan {
  long double sum = 0.0L, carry = 0.0L;
  void add(long double v) {
    long double y = v - carry;
    long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

// E1(x) for x > 0 by the standard continued fraction
//   E1(x) = e^-x * 1/(x+1-) 1^2/(x+3-) 2^2/(x+5-) ...
// (modified Lentz).  Converges fast for x >= ~5.
long double e1_cf(long double x) {
  const long double tiny = 1e-4930L;
  long double f = tiny, c = f, d = 0.0L;
  for (int k = 0; k < 400; ++k) {
    long double ak = (k == 0) ? 1.0L : -static_cast<long double>(k) * k;
    long double bk = x + 2 * k + 1;
    d = bk + ak * d;
    if (d == 0.0L) d = tiny;
    c = bk + ak / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < kLdEps) break;
  }
  return std::exp(-x) * f;
}

// Ei(y) = gamma + log|y| + sum_{k>=1} y^k/(k*k!) for y != 0.  For y <= -10
// the alternating series cancels past long double resolution, so the E1
// fraction takes over.
long double ei(long double y) {
  if (y <= -10.0L) return -e1_cf(-y);
  Kahan s;
  long double term = 1.0L;
  for (int k = 1; k < 20000; ++k) {
    term *= y / k;
    long double v = term / k;
    s.add(v);
    if (k > std::fabs(y) && std::fabs(v) < kLdEps * std::fabs(s.sum)) break;
  }
  return kEulerGammaL + std::log(std::fabs(y)) + s.sum;
}

}  // namespace

double li(double x) {
  if (x < 0.0 || x == 1.0 || std::isnan(x)) throw DomainError("li: x >= 0 and x != 1");
  if (x == 0.0) return 0.0;
  return static_cast<double>(ei(std::log(static_cast<long double>(x))));
}

long double li_scaled_ld(long double u) {
  if (!(u > 0.0L)) throw DomainError("li_scaled: u > 0");
  // g(u) = e^-u (gamma + log u) + sum_{k>=1} P(k;u)/k with P the Poisson
  // weight u^k e^-u / k!, generated by the exact recurrence
  // P(k+1) = P(k) * u/(k+1) from P(1) = u e^-u.  Every term is positive.
  long double emu = std::exp(-u);
  Kahan s;
  long double p = u * emu;
  for (int k = 1; k < 2000000; ++k) {
    s.add(p / k);
    if (k > u && p / k < kLdEps * s.sum) break;
    p *= u / (k + 1);
  }
  return emu * (kEulerGammaL + std::log(u)) + s.sum;
}

double li_scaled(double u) { return static_cast<double>(li_scaled_ld(u)); }

double digamma(double x) {
  if (!(x > 0.0)) throw DomainError("digamma: x > 0");
  long double xx = x;
  long double shift = 0.0L;
  while (xx < 18.0L) {
    shift -= 1.0L / xx;
    xx += 1.0L;
  }
  long double inv = 1.0L / xx;
  long double inv2 = inv * inv;
  long double tail =
      inv2 * (1.0L / 12 - inv2 * (1.0L / 120 - inv2 * (1.0L / 252)));
  return static_cast<double>(shift + std::log(xx) - 0.5L * inv - tail);
}

double harmonic_real(double x) {
  if (!(x > -1.0)) throw DomainError("harmonic_real: x > -1");
  return static_cast<double>(
      static_cast<long double>(digamma(x + 1.0)) + kEulerGammaL);
}

double e1(double x) {
  if (!(x > 0.0)) throw DomainError("e1: x > 0");
  return static_cast<double>(-ei(-static_cast<long double>(x)));
}

double p_eval(unsigned n, double t, PEvalMethod method) {
  if (method == PEvalMethod::Sum) {
    Rational tr = Rational::from_double(t);
    std::vector<Rational> c = p_poly(n);
    Rational acc;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * tr + c[i];
    return acc.to_double();
  }
  if (!(t > 0.0)) throw DomainError("p_eval(cfrac): t > 0");
  // excluded points t = n, n-2, ..., down to n mod 2
  for (long long ex = static_cast<long long>(n); ex >= 0; ex -= 2)
    if (t == static_cast<double>(ex)) throw CfracPole();

  // Terminating fraction, innermost level outward:
  //   p_n(t) = t^(n+1) / (t-n + 1*n/(t-n+2 + 2(n-1)/(... + n/(t+n))))
  long double tl = t;
  long double v = tl + n;  // level n denominator t - n + 2n
  for (long long k = static_cast<long long>(n) - 1; k >= 0; --k) {
    long double num = static_cast<long double>(k + 1) * (static_cast<long long>(n) - k);
    v = (tl - static_cast<long double>(n) + 2 * k) + num / v;
    if (v == 0.0L) throw CfracPole();
  }
  return static_cast<double>(std::pow(tl, static_cast<long double>(n) + 1) / v);
}

FnValue f_n_eval(unsigned n, double u) {
  if (!(u > 0.0)) throw DomainError("f_n_eval: u > 0");
  long double ul = u;
  long double g = li_scaled_ld(ul);
  long double acc = g;
  long double fact = 1.0L;  // (k-1)!
  long double upow = 1.0L;
  for (unsigned k = 1; k <= n; ++k) {
    if (k >= 2) fact *= static_cast<long double>(k - 1);
    upow *= ul;
    acc -= fact / upow;
  }
  long double value = acc;
  for (unsigned k = 1; k <= n; ++k) value *= ul / k;

  FnValue out;
  out.value = static_cast<double>(value);
  long double n_fact = 1.0L;
  for (unsigned k = 2; k <= n; ++k) n_fact *= k;
  out.precision_loss = n_fact / (upow * ul) < 1e3L * DBL_EPSILON * g;
  return out;
}

}  // namespace pcf
