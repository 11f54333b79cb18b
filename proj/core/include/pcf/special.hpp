#pragma once

#include <stdexcept>

namespace pcf {

struct DomainError : std::domain_error {
  explicit DomainError(const char* what) : std::domain_error(what) {}
};

struct CfracPole : std::domain_error {
  CfracPole() : std::domain_error("continued fraction hits a removable pole") {}
};

// Euler-Mascheroni constant, stored to 30 significant digits and never
// recomputed.  e^gamma is derived by exponentiation at runtime.
inline constexpr long double kEulerGammaL = 0.577215664901532860606512090082L;
inline constexpr double kEulerGamma = static_cast<double>(kEulerGammaL);

// Principal-value logarithmic integral li(x) = pv integral_0^x dt/log t,
// summed through the everywhere-convergent series
//   li(x) = gamma + log|log x| + sum_{k>=1} (log x)^k/(k*k!).
// li(0) = 0 exactly; x < 0 and x = 1 raise DomainError.  Relative accuracy
// ~1e-13 on [2, 1e300]; the alternating x < 1 regime is served by the
// E1 continued fraction once the series would cancel catastrophically.
double li(double x);

// g(u) = li(e^u)/e^u without forming e^u: all terms positive, no
// cancellation, relative accuracy ~1e-14 for u in [5, 600].
double li_scaled(double u);
long double li_scaled_ld(long double u);

// Digamma via the recurrence Psi(x) = Psi(x+1) - 1/x up to the asymptotic
// regime, then log x - 1/(2x) - 1/(12x^2) + 1/(120x^4) - 1/(252x^6).
double digamma(double x);

// H_x = Psi(x+1) + gamma, defined for x > -1.
double harmonic_real(double x);

// E_1(x) = -li(e^-x) for x > 0.
double e1(double x);

enum class PEvalMethod { Sum, Cfrac };

// p_n(t) = n! sum_{k<=n} t^k/k!.  Sum method: exact rational Horner before
// the final rounding.  Cfrac method: the terminating continued fraction
//   t^(n+1)/(t-n +) 1*n/(t-n+2 +) 2(n-1)/(t-n+4 +) ... n/(t+n),
// defined for t > 0 away from t in {n, n-2, ...} (CfracPole there; the
// limiting values are not implemented).
double p_eval(unsigned n, double t, PEvalMethod method);

struct FnValue {
  double value = 0.0;
  // Set when the predicted tail magnitude n!/u^(n+1) drops below
  // 1e3 * eps * g(u) and double precision can no longer resolve it.
  bool precision_loss = false;
};

// f_n(u) = (u^n/n!) * (g(u) - sum_{k=1..n} (k-1)!/u^k); f_0 = li_scaled.
// The x-variable form F_n(x) is f_n(log x).
FnValue f_n_eval(unsigned n, double u);

}  // namespace pcf
