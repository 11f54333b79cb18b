#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pcf {

using BigInt = boost::multiprecision::cpp_int;

// Exact arbitrary-precision fraction, the coefficient field for everything
// exact in this library.  Canonical form: gcd(|num|, den) == 1, den > 0,
// zero stored as 0/1.  The backing store is boost::multiprecision's
// cpp_rational, which maintains exactly that form; the conversions to and
// from floating point are implemented here because the generic ones
// overflow once numerator and denominator individually exceed the double
// range (harmonic numbers do that by n ~ 750).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  // Doubles are dyadic rationals; this conversion is exact.
  static Rational from_double(double d) {
    if (!std::isfinite(d)) throw std::domain_error("Rational::from_double: non-finite");
    if (d == 0.0) return Rational();
    int e = 0;
    double m = std::frexp(d, &e);             // d = m * 2^e, 0.5 <= |m| < 1
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    int shift = e - 53;
    if (shift >= 0) return Rational(BigInt(mant) << shift);
    return Rational(BigInt(mant), BigInt(1) << -shift);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(Rat(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  long double to_long_double() const { return ratio_ld(numerator(), denominator()); }
  double to_double() const { return static_cast<double>(to_long_double()); }

  // "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  // Scale-aware big-integer ratio: take the top ~96 bits of each operand and
  // reapply the exponent difference, so values whose parts individually
  // overflow a double still convert correctly.
  static long double ratio_ld(const BigInt& num, const BigInt& den) {
    if (num == 0) return 0.0L;
    BigInt n = boost::multiprecision::abs(num);
    BigInt d = den;
    bool neg = num.sign() < 0;
    if (d < 0) { d = -d; neg = !neg; }
    auto bn = static_cast<long>(boost::multiprecision::msb(n));
    auto bd = static_cast<long>(boost::multiprecision::msb(d));
    long sn = bn > 95 ? bn - 95 : 0;
    long sd = bd > 95 ? bd - 95 : 0;
    long double top = (n >> sn).convert_to<long double>();
    long double bot = (d >> sd).convert_to<long double>();
    long double r = std::ldexp(top / bot, static_cast<int>(sn - sd));
    return neg ? -r : r;
  }

 private:
  using Rat = boost::multiprecision::cpp_rational;
  explicit Rational(Rat v) : v_(std::move(v)) {}
  Rat v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// n! as an exact integer.
inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

// Binomial coefficient C(n, k).
inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

}  // namespace pcf
