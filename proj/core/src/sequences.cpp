#include "pcf/sequences.hpp"

namespace pcf {

std::optional<SequenceName> parse_sequence_name(std::string_view s) {
  if (s == "factorial" || s == "n!") return SequenceName::Factorial;
  if (s == "D" || s == "derangement") return SequenceName::Derangement;
  if (s == "A" || s == "arrangement") return SequenceName::Arrangement;
  if (s == "I" || s == "indecomposable") return SequenceName::Indecomposable;
  if (s == "D'" || s == "Dprime" || s == "indecomposable-derangement")
    return SequenceName::IndecomposableDerangement;
  if (s == "G" || s == "reversion") return SequenceName::Reversion;
  if (s == "J" || s == "stabilized-interval-free") return SequenceName::StabilizedIntervalFree;
  if (s == "H" || s == "harmonic") return SequenceName::Harmonic;
  return std::nullopt;
}

std::string sequence_token(SequenceName name) {
  switch (name) {
    case SequenceName::Factorial: return "factorial";
    case SequenceName::Derangement: return "D";
    case SequenceName::Arrangement: return "A";
    case SequenceName::Indecomposable: return "I";
    case SequenceName::IndecomposableDerangement: return "D'";
    case SequenceName::Reversion: return "G";
    case SequenceName::StabilizedIntervalFree: return "J";
    case SequenceName::Harmonic: return "H";
  }
  throw UnknownSequence("<enum>");
}

Series factorial_series(std::size_t n) {
  Series f(n);
  BigInt k_fact = 1;
  f.set(0, Rational(1));
  for (std::size_t k = 1; k <= n; ++k) {
    k_fact *= static_cast<unsigned>(k);
    f.set(k, Rational(k_fact));
  }
  return f;
}

namespace {

// F(X) = sum_{k=1..n} (k-1)! X^k, the series whose reversion carries G.
Series shifted_factorial_series(std::size_t n) {
  Series f(n);
  BigInt fact = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k >= 2) fact *= static_cast<unsigned>(k - 1);
    f.set(k, Rational(fact));
  }
  return f;
}

std::vector<Rational> indecomposable(std::size_t n) {
  // sum I_{k+1} X^k = 1/X - 1/(X * sum k! X^k): the right side is
  // (1 - recip(factorial))/X, so I_{m} = -recip(factorial)[m] for m >= 1.
  std::vector<Rational> out(n + 1);
  out[0] = Rational(0);
  if (n == 0) return out;
  Series r = recip(factorial_series(n));
  for (std::size_t m = 1; m <= n; ++m) out[m] = -r.coeff(m);
  return out;
}

std::vector<Rational> derangements(std::size_t n) {
  // D_n = n! sum_{k<=n} (-1)^k/k!; integer-valued by the recurrence
  // D_n = n*D_{n-1} + (-1)^n.
  std::vector<Rational> out(n + 1);
  BigInt d = 1;
  out[0] = Rational(d);
  for (std::size_t k = 1; k <= n; ++k) {
    d = d * static_cast<unsigned>(k) + (k % 2 == 0 ? 1 : -1);
    out[k] = Rational(d);
  }
  return out;
}

std::vector<Rational> arrangements(std::size_t n) {
  // A_n = n! sum_{k<=n} 1/k! with A_n = n*A_{n-1} + 1.
  std::vector<Rational> out(n + 1);
  BigInt a = 1;
  out[0] = Rational(a);
  for (std::size_t k = 1; k <= n; ++k) {
    a = a * static_cast<unsigned>(k) + 1;
    out[k] = Rational(a);
  }
  return out;
}

std::vector<Rational> indecomposable_derangements(std::size_t n) {
  // sum D'_n X^n = -1 / sum D_n X^n.
  Series d(std::vector<Rational>(derangements(n)));
  Series r = recip(d);
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = -r.coeff(k);
  return out;
}

std::vector<Rational> reversion_terms(std::size_t n) {
  // G(X) = revert(F) with F = sum (n-1)! X^n; by convention the stored
  // sequence is G_n with G(X) = -sum G_n X^n, i.e. G_n = -revert(F)[n].
  std::vector<Rational> out(n + 1);
  if (n == 0) return out;
  Series g = revert(shifted_factorial_series(n));
  for (std::size_t k = 1; k <= n; ++k) out[k] = -g.coeff(k);
  return out;
}

std::vector<Rational> stabilized_interval_free(std::size_t n) {
  // X/G(X) = sum J_n X^n where G here is the reversion series itself
  // (leading coefficient +1), so J = recip(G(X)/X).
  Series g = revert(shifted_factorial_series(n + 1));
  std::vector<Rational> shifted(n + 1);
  for (std::size_t k = 0; k <= n; ++k) shifted[k] = g.coeff(k + 1);
  Series j = recip(Series(std::move(shifted)));
  return j.coeffs();
}

std::vector<Rational> harmonic(std::size_t n) {
  std::vector<Rational> out(n + 1);
  Rational h;
  for (std::size_t k = 1; k <= n; ++k) {
    h += Rational(1, static_cast<long long>(k));
    out[k] = h;
  }
  return out;
}

}  // namespace

std::vector<Rational> gen_sequence(SequenceName name, std::size_t n) {
  switch (name) {
    case SequenceName::Factorial: return factorial_series(n).coeffs();
    case SequenceName::Derangement: return derangements(n);
    case SequenceName::Arrangement: return arrangements(n);
    case SequenceName::Indecomposable: return indecomposable(n);
    case SequenceName::IndecomposableDerangement: return indecomposable_derangements(n);
    case SequenceName::Reversion: return reversion_terms(n);
    case SequenceName::StabilizedIntervalFree: return stabilized_interval_free(n);
    case SequenceName::Harmonic: return harmonic(n);
  }
  throw UnknownSequence("<enum>");
}

std::vector<Rational> p_poly(std::size_t n) {
  std::vector<Rational> c(n + 1);
  // n!/k! built downward: c[n] = 1, c[k] = (k+1)*c[k+1].
  BigInt v = 1;
  c[n] = Rational(v);
  for (std::size_t k = n; k-- > 0;) {
    v *= static_cast<unsigned>(k + 1);
    c[k] = Rational(v);
  }
  return c;
}

}  // namespace pcf
