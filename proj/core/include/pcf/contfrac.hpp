#pragma once

#include <stdexcept>
#include <variant>
#include <vector>

#include "pcf/polynomial.hpp"
#include "pcf/series.hpp"

namespace pcf {

struct IndexOutOfRange : std::out_of_range {
  IndexOutOfRange() : std::out_of_range("approximant index exceeds coefficient list") {}
};

struct TooShort : std::invalid_argument {
  TooShort() : std::invalid_argument("contraction needs at least two coefficients") {}
};

// Thrown when a Hankel determinant vanishes during synthesis (finite-support
// moment sequence).  Carries the coefficients found before the breakdown.
struct DegenerateMoments : std::runtime_error {
  explicit DegenerateMoments(std::vector<Rational> got)
      : std::runtime_error("moment sequence degenerates; fraction terminates"),
        partial(std::move(got)) {}
  std::vector<Rational> partial;
};

struct SingularSystem : std::runtime_error {
  SingularSystem() : std::runtime_error("Pade linear system is singular") {}
};

struct NotProperAtInfinity : std::domain_error {
  NotProperAtInfinity() : std::domain_error("rational function does not vanish at infinity") {}
};

// Stieltjes fraction a1/(z-) a2/(1-) a3/(z-) ...; only the partial
// numerators are stored, the z,1,z,1,... denominator pattern is implied.
struct SFraction {
  std::vector<Rational> a;
  std::size_t depth() const { return a.size(); }
};

// Jacobi fraction a1/(z+b1-) a2/(z+b2-) ...; b_k is stored so that the
// displayed partial denominator is z + b_k (the named prime fraction
// therefore carries b = -1,-3,-5,...).
struct JFraction {
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::size_t depth() const { return a.size(); }
};

struct MomentSeq {
  std::vector<Rational> mu;
};

// Exact rational function; reduced and denominator-monic on construction,
// so equality is structural.  Degree is max(deg num, deg den).
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  long degree() const { return std::max(num_.degree(), den_.degree()); }
  bool is_zero() const { return num_.is_zero(); }

  long double eval_ld(long double x) const { return num_.eval_ld(x) / den_.eval_ld(x); }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Polynomial num_, den_;
};

// n-th approximant as an exact rational function; w_0 = 0.
// deg w_n = n for J-fractions, floor((n+1)/2) for S-fractions.
RationalFunction approximant(const SFraction& cf, std::size_t n);
RationalFunction approximant(const JFraction& cf, std::size_t n);

// Even contraction: approximant(result, n) == approximant(s, 2n).
// J numerators [a1, a2*a3, a4*a5, ...], partial denominators
// z - a2, z - a3 - a4, z - a5 - a6, ...
JFraction contract_s_to_j(const SFraction& s);

struct SFractionSynthesis {
  SFraction fraction;
  // All a_k > 0 certifies a Stieltjes ([0,inf)) moment sequence; a negative
  // coefficient is legal (Hamburger case) and only clears this flag.
  bool stieltjes = true;
};

// Exact quotient-difference scheme: S-fraction whose n-th approximant
// expands to the first n input moments for every n <= count.
SFractionSynthesis moments_to_sfraction(const MomentSeq& m, std::size_t count);

// Coefficients c_k with w(z) = sum c_k / z^(k+1) + O(z^-(N+2)); requires
// deg num < deg den.
Series taylor_at_infinity(const RationalFunction& w, std::size_t n);

// [n-1, n] Pade approximant of sum mu_k/z^(k+1) at infinity, via the exact
// Hankel linear system for the denominator.
RationalFunction pade_from_moments(const MomentSeq& m, std::size_t n);

// n-th Laguerre polynomial L_n(x) = sum (-1)^k/k! C(n,k) x^k, exact.
Polynomial laguerre(std::size_t n);

// Closed form of the n-th prime approximant: Q_n = (-1)^n n! L_n and
// P_n = (-1)^n n! sum_k a_{n,k} x^(k-1); both come out monic with integer
// coefficients and equal approximant(prime-J, n).
RationalFunction prime_w_closed_form(std::size_t n);

// a_{n,k} = sum_{j=k..n} (-1)^j/j! C(n,j) (j-k)!; a_{n,1} = -H_n and
// a_{n,2} = (n+1)H_n - 2n.
Rational prime_numerator_coefficient(std::size_t n, std::size_t k);

enum class FractionKind { PrimeS, PrimeJ, ExpintS, ExpintJ };

// Coefficient patterns:
//   prime-S:      a = 1,1,1,2,2,3,3,...
//   prime-J:      a = 1,1,4,9,16,...,(k-1)^2;  b = -1,-3,-5,...
//   expint-S(n):  a = 1, n+1, 1, n+2, 2, n+3, 3, ...
//   expint-J(n):  a = 1, 1*(n+1), 2*(n+2), 3*(n+3), ...;  b = -(n+1), -(n+3), ...
// expint-*(0) reduces to the prime fractions.
std::variant<SFraction, JFraction> make_named_fraction(FractionKind kind, std::size_t family_n,
                                                       std::size_t depth);

// Floating-point approximant value by backward recurrence (innermost term
// outward); this is the evaluation path the experiments use.
long double eval_backward(const JFraction& cf, std::size_t n, long double z);
long double eval_backward(const SFraction& cf, std::size_t n, long double z);

}  // namespace pcf
