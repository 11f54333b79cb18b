#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcf/contfrac.hpp"
#include "pcf/csv.hpp"
#include "pcf/primes.hpp"
#include "pcf/sequences.hpp"

namespace pcf {

struct GridOutOfRange : std::invalid_argument {
  explicit GridOutOfRange(const char* what) : std::invalid_argument(what) {}
};

struct PrecisionLossAbort : std::runtime_error {
  PrecisionLossAbort() : std::runtime_error("fit aborted: values below double noise floor") {}
};

// Evaluation grid; values are strictly increasing, log- or linearly spaced.
struct Grid {
  double start = 0.0;
  double stop = 0.0;
  int points = 0;
  bool log_spaced = true;

  std::vector<double> values() const;
  static Grid parse(const std::string& text);  // "start:stop:points:log|lin"
};

// n, then one exact column per requested sequence.
CsvTable cmd_sequences(const std::vector<SequenceName>& names, std::size_t n);

// Continued-fraction coefficients plus reduced P_n/Q_n coefficient strings
// per approximant order; for the prime J-fraction the emitted polynomials
// are first checked against the closed form.  Exact command: n_max <= 12.
CsvTable cmd_cf(FractionKind kind, std::size_t family_n, std::size_t depth, std::size_t n_max);

// Per (n, u): err_n = g(u) - w_n(u) by backward recurrence and the scaled
// ratio c_n = err_n * u^(2n+1)/(n!)^2, with a per-cell precision flag once
// the predicted error drops below 1e3*eps*g(u).  u-grid within [20, 100],
// n_max <= 3 in double precision.
CsvTable cmd_error_table(std::size_t n_max, const Grid& ugrid);

// Per x: pi(x), li(x), Legendre's A(x) = log x - x/pi(x), x*w_n(log x) and
// absolute errors for n = 1..n_max (<= 4).  pi values can be served from a
// checkpoint cache instead of the table.
CsvTable cmd_pi_error(const PrimeTable* table, const Grid& xgrid, std::size_t n_max,
                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>* cached_pi);

struct SlopeFit {
  std::size_t n = 0;
  double slope = 0.0;
  double intercept = 0.0;
};

// OLS on (log u, log|g - w_n|); slope approaches -(2n+1) and the intercept
// log((n!)^2) as the grid moves out.  Throws PrecisionLossAbort when any
// grid point is flagged.  n <= 3.
SlopeFit cmd_slope(std::size_t n, const Grid& ugrid);
CsvTable slope_to_csv(const SlopeFit& fit);

// x, M(x), r(x) = e^gamma M(x) log x.
CsvTable cmd_mertens(const PrimeTable& table, const Grid& xgrid);

// n, pi(n), rh sum, |pi - sum|/(sqrt(n) H_n), and H_n - n/pi(n) (which
// drifts toward 1 + gamma).
CsvTable cmd_rh(const PrimeTable& table, const Grid& ngrid,
                const std::vector<std::pair<std::uint64_t, std::uint64_t>>* cached_pi);

// u, s(u) = (g(u-1) - g(u)^2 u) * u^6, plus the order-5 scaling
// (g(u-1) - g(u)^2 u) * u^5 whose trend is ~1.
CsvTable cmd_ramanujan(const Grid& ugrid);

// Empirical expansion coefficient a_n ~ (f(u) - sum_{k<n} a_k/u^(k+1)) * u^(n+1)
// at the largest-u sample; the generic probe behind the error commands.
double estimate_coefficient(std::span<const std::pair<double, double>> samples,
                            std::span<const Rational> partial, std::size_t n);

// Least squares for y ~ intercept + slope*x.
std::pair<double, double> ols_fit(std::span<const double> x, std::span<const double> y);

}  // namespace pcf
