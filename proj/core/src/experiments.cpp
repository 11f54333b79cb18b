#include "pcf/experiments.hpp"

#include <cfloat>
#include <charconv>
#include <cmath>
#include <map>

#include "pcf/special.hpp"

namespace pcf {

std::vector<double> Grid::values() const {
  if (points < 1) throw GridOutOfRange("grid: points >= 1");
  if (points > 1 && !(stop > start)) throw GridOutOfRange("grid: stop must exceed start");
  if (log_spaced && !(start > 0.0)) throw GridOutOfRange("grid: log spacing needs start > 0");
  std::vector<double> v(static_cast<std::size_t>(points));
  if (points == 1) {
    v[0] = start;
    return v;
  }
  for (int i = 0; i < points; ++i) {
    double f = static_cast<double>(i) / (points - 1);
    v[static_cast<std::size_t>(i)] =
        log_spaced ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                   : start + f * (stop - start);
  }
  v.back() = stop;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) throw GridOutOfRange("grid: values must be strictly increasing");
  return v;
}

Grid Grid::parse(const std::string& text) {
  Grid g;
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = text.find(':', pos);
    parts.push_back(text.substr(pos, c == std::string::npos ? c : c - pos));
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  if (parts.size() != 4) throw GridOutOfRange("grid: expected start:stop:points:log|lin");
  try {
    g.start = std::stod(parts[0]);
    g.stop = std::stod(parts[1]);
    g.points = std::stoi(parts[2]);
  } catch (const std::exception&) {
    throw GridOutOfRange("grid: unparsable numeric field");
  }
  if (parts[3] == "log")
    g.log_spaced = true;
  else if (parts[3] == "lin")
    g.log_spaced = false;
  else
    throw GridOutOfRange("grid: spacing must be log or lin");
  return g;
}

CsvTable cmd_sequences(const std::vector<SequenceName>& names, std::size_t n) {
  std::vector<std::string> header{"n"};
  std::vector<std::vector<Rational>> cols;
  for (SequenceName name : names) {
    header.push_back(sequence_token(name));
    cols.push_back(gen_sequence(name, n));
  }
  CsvTable t(std::move(header));
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::string> row{CsvTable::fmt(static_cast<std::uint64_t>(k))};
    for (const auto& col : cols) row.push_back(CsvTable::fmt(col[k]));
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable cmd_cf(FractionKind kind, std::size_t family_n, std::size_t depth, std::size_t n_max) {
  if (n_max > 12) throw std::invalid_argument("cmd_cf: exact command capped at n <= 12");
  if (depth < n_max) depth = n_max;
  auto frac = make_named_fraction(kind, family_n, depth);

  CsvTable t({"n", "a_n", "b_n", "P", "Q"});
  for (std::size_t n = 1; n <= n_max; ++n) {
    RationalFunction w = std::holds_alternative<JFraction>(frac)
                             ? approximant(std::get<JFraction>(frac), n)
                             : approximant(std::get<SFraction>(frac), n);
    if (kind == FractionKind::PrimeJ && w != prime_w_closed_form(n))
      throw std::runtime_error("cmd_cf: approximant disagrees with closed form");
    std::string a_str, b_str;
    if (std::holds_alternative<JFraction>(frac)) {
      const auto& j = std::get<JFraction>(frac);
      a_str = j.a[n - 1].str();
      b_str = j.b[n - 1].str();
    } else {
      a_str = std::get<SFraction>(frac).a[n - 1].str();
    }
    t.add_row({CsvTable::fmt(static_cast<std::uint64_t>(n)), a_str, b_str,
               w.num().coeff_str(), w.den().coeff_str()});
  }
  return t;
}

namespace {

double factorial_d(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

// err_n(u) = g(u) - w_n(u) for the prime J-fraction, in long double.
long double prime_error_ld(const JFraction& j, std::size_t n, long double u) {
  return li_scaled_ld(u) - eval_backward(j, n, u);
}

}  // namespace

CsvTable cmd_error_table(std::size_t n_max, const Grid& ugrid) {
  if (n_max > 3)
    throw std::invalid_argument("cmd_error_table: double precision caps n at 3");
  std::vector<double> us = ugrid.values();
  if (us.front() < 20.0 || us.back() > 100.0)
    throw GridOutOfRange("cmd_error_table: u-grid within [20, 100]");

  auto j = std::get<JFraction>(make_named_fraction(FractionKind::PrimeJ, 0, n_max ? n_max : 1));
  std::vector<std::string> header{"u", "g"};
  for (std::size_t n = 0; n <= n_max; ++n) {
    header.push_back("err" + std::to_string(n));
    header.push_back("c" + std::to_string(n));
    header.push_back("flag" + std::to_string(n));
  }
  CsvTable t(std::move(header));
  for (double u : us) {
    long double g = li_scaled_ld(u);
    std::vector<std::string> row{CsvTable::fmt(u), CsvTable::fmt(static_cast<double>(g))};
    for (std::size_t n = 0; n <= n_max; ++n) {
      long double err = g - eval_backward(j, n, u);
      double fsq = factorial_d(n) * factorial_d(n);
      long double c = err * std::pow(static_cast<long double>(u), 2.0L * n + 1) / fsq;
      bool flag = fsq / std::pow(static_cast<long double>(u), 2.0L * n + 1) <
                  1e3L * DBL_EPSILON * g;
      row.push_back(CsvTable::fmt(static_cast<double>(err)));
      row.push_back(CsvTable::fmt(static_cast<double>(c)));
      row.push_back(flag ? "1" : "0");
    }
    t.add_row(std::move(row));
  }
  return t;
}

CsvTable cmd_pi_error(const PrimeTable* table, const Grid& xgrid, std::size_t n_max,
                      const std::vector<std::pair<std::uint64_t, std::uint64_t>>* cached_pi) {
  if (n_max < 1 || n_max > 4) throw std::invalid_argument("cmd_pi_error: 1 <= n_max <= 4");
  std::vector<double> xs = xgrid.values();
  if (xs.front() < 1e4) throw OutOfRange("cmd_pi_error: x-grid starts at 1e4");

  std::map<std::uint64_t, std::uint64_t> cache;
  if (cached_pi)
    for (const auto& [x, pix] : *cached_pi) cache[x] = pix;
  auto pi_at = [&](double x) -> std::uint64_t {
    auto it = cache.find(static_cast<std::uint64_t>(x));
    if (it != cache.end()) return it->second;
    if (!table) throw OutOfRange("cmd_pi_error: x not cached and no sieve available");
    return table->pi(x);
  };

  auto j = std::get<JFraction>(make_named_fraction(FractionKind::PrimeJ, 0, n_max));
  std::vector<std::string> header{"x", "log_x", "pi", "li", "A", "err_li"};
  for (std::size_t n = 1; n <= n_max; ++n) {
    header.push_back("xw" + std::to_string(n));
    header.push_back("err" + std::to_string(n));
  }
  CsvTable t(std::move(header));
  for (double x : xs) {
    std::uint64_t pix = pi_at(x);
    double log_x = std::log(x);
    double li_x = li(x);
    double a_x = log_x - x / static_cast<double>(pix);
    std::vector<std::string> row{
        CsvTable::fmt(x),    CsvTable::fmt(log_x),
        CsvTable::fmt(static_cast<std::uint64_t>(pix)), CsvTable::fmt(li_x),
        CsvTable::fmt(a_x),  CsvTable::fmt(std::fabs(static_cast<double>(pix) - li_x))};
    for (std::size_t n = 1; n <= n_max; ++n) {
      double xw = static_cast<double>(
          static_cast<long double>(x) * eval_backward(j, n, static_cast<long double>(log_x)));
      row.push_back(CsvTable::fmt(xw));
      row.push_back(CsvTable::fmt(std::fabs(static_cast<double>(pix) - xw)));
    }
    t.add_row(std::move(row));
  }
  return t;
}

std::pair<double, double> ols_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("ols_fit: need matching samples, at least two");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

SlopeFit cmd_slope(std::size_t n, const Grid& ugrid) {
  if (n > 3) throw std::invalid_argument("cmd_slope: double precision caps n at 3");
  std::vector<double> us = ugrid.values();
  std::vector<double> lx, ly;
  auto j = std::get<JFraction>(make_named_fraction(FractionKind::PrimeJ, 0, n ? n : 1));
  double fsq = factorial_d(n) * factorial_d(n);
  for (double u : us) {
    long double g = li_scaled_ld(u);
    if (fsq / std::pow(static_cast<long double>(u), 2.0L * n + 1) < 1e3L * DBL_EPSILON * g)
      throw PrecisionLossAbort();
    long double err = g - eval_backward(j, n, u);
    lx.push_back(std::log(u));
    ly.push_back(static_cast<double>(std::log(std::fabs(err))));
  }
  auto [slope, intercept] = ols_fit(lx, ly);
  return {n, slope, intercept};
}

CsvTable slope_to_csv(const SlopeFit& fit) {
  CsvTable t({"n", "slope", "intercept"});
  t.add_row({CsvTable::fmt(static_cast<std::uint64_t>(fit.n)), CsvTable::fmt(fit.slope),
             CsvTable::fmt(fit.intercept)});
  return t;
}

CsvTable cmd_mertens(const PrimeTable& table, const Grid& xgrid) {
  std::vector<double> xs = xgrid.values();
  auto ms = mertens_scan(table, xs);
  CsvTable t({"x", "M", "r"});
  for (const auto& m : ms)
    t.add_row({CsvTable::fmt(m.x), CsvTable::fmt(m.product), CsvTable::fmt(m.scaled)});
  return t;
}

CsvTable cmd_rh(const PrimeTable& table, const Grid& ngrid,
                const std::vector<std::pair<std::uint64_t, std::uint64_t>>* cached_pi) {
  std::vector<double> xs = ngrid.values();
  std::map<std::uint64_t, std::uint64_t> cache;
  if (cached_pi)
    for (const auto& [x, pix] : *cached_pi) cache[x] = pix;

  CsvTable t({"n", "pi", "rh_sum", "ratio", "H_minus_inv_density"});
  for (double x : xs) {
    auto n = static_cast<std::uint64_t>(x);
    auto it = cache.find(n);
    std::uint64_t pix = it != cache.end() ? it->second : table.pi_u64(n);
    double sum = rh_partial_sum(n);
    double hn = harmonic_real(static_cast<double>(n));
    double ratio = std::fabs(static_cast<double>(pix) - sum) /
                   (std::sqrt(static_cast<double>(n)) * hn);
    double drift = hn - static_cast<double>(n) / static_cast<double>(pix);
    t.add_row({CsvTable::fmt(n), CsvTable::fmt(pix), CsvTable::fmt(sum), CsvTable::fmt(ratio),
               CsvTable::fmt(drift)});
  }
  return t;
}

CsvTable cmd_ramanujan(const Grid& ugrid) {
  std::vector<double> us = ugrid.values();
  if (us.front() <= 1.0) throw GridOutOfRange("cmd_ramanujan: needs u > 1");
  CsvTable t({"u", "g_u", "g_um1", "s", "s_order5"});
  for (double u : us) {
    long double ul = u;
    long double gu = li_scaled_ld(ul);
    long double gm = li_scaled_ld(ul - 1.0L);
    long double diff = gm - gu * gu * ul;
    long double u5 = std::pow(ul, 5.0L);
    t.add_row({CsvTable::fmt(u), CsvTable::fmt(static_cast<double>(gu)),
               CsvTable::fmt(static_cast<double>(gm)),
               CsvTable::fmt(static_cast<double>(diff * u5 * ul)),
               CsvTable::fmt(static_cast<double>(diff * u5))});
  }
  return t;
}

double estimate_coefficient(std::span<const std::pair<double, double>> samples,
                            std::span<const Rational> partial, std::size_t n) {
  if (samples.empty()) throw std::invalid_argument("estimate_coefficient: need a sample");
  auto best = samples[0];
  for (const auto& s : samples)
    if (s.first > best.first) best = s;
  long double u = best.first;
  long double r = best.second;
  for (std::size_t k = 0; k < partial.size(); ++k)
    r -= partial[k].to_long_double() / std::pow(u, static_cast<long double>(k) + 1);
  return static_cast<double>(r * std::pow(u, static_cast<long double>(n) + 1));
}

}  // namespace pcf
