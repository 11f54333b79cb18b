#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pcf/rational.hpp"

namespace pcf {

struct LimitTooLarge : std::invalid_argument {
  LimitTooLarge() : std::invalid_argument("sieve limit exceeds 2^34") {}
};

struct OutOfRange : std::out_of_range {
  explicit OutOfRange(const char* what) : std::out_of_range(what) {}
};

struct SieveConfig {
  std::uint64_t limit = 0;
  // Odd-number bits per segment; must be a multiple of 64.
  std::uint64_t segment_bits = 1u << 20;
};

// Sieve-backed prime enumeration with O(1)-ish pi(x) queries.  Immutable
// after construction; all queries are read-only and thread-safe.
class PrimeTable {
 public:
  static PrimeTable sieve(const SieveConfig& config);

  std::uint64_t limit() const { return limit_; }

  // pi(floor(x)); x must not exceed the sieved limit.
  std::uint64_t pi(double x) const;
  std::uint64_t pi_u64(std::uint64_t n) const;

  // Odd primes p <= n with p ≡ r (mod 4), r in {1, 3}.
  std::uint64_t count_mod4(std::uint64_t n, int r) const;

  // Visits 2, 3, 5, ... up to the limit, in order.
  template <typename F>
  void for_each_prime(F&& f) const {
    if (limit_ >= 2) f(std::uint64_t{2});
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        unsigned tz = static_cast<unsigned>(__builtin_ctzll(bits));
        bits &= bits - 1;
        std::uint64_t p = 2 * (64 * w + tz) + 1;
        f(p);
      }
    }
  }

  // (x, pi(x)) snapshots recorded at each segment boundary.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& checkpoints() const {
    return checkpoints_;
  }

 private:
  std::uint64_t limit_ = 0;
  std::vector<std::uint64_t> words_;  // bit set <=> 2i+1 is prime
  std::vector<std::uint64_t> rank_;   // primes among odds below each 8-word block
  std::vector<std::pair<std::uint64_t, std::uint64_t>> checkpoints_;
};

struct MertensAccumulator {
  double x = 0.0;
  double log_sum = 0.0;  // sum_{p<=x} log(1 - 1/p), compensated
  double product = 1.0;  // M(x) = exp(log_sum)
  double scaled = 0.0;   // r(x) = e^gamma * M(x) * log x
};

// Single pass over the primes with emission at each requested x
// (xs must be sorted ascending and within the table limit).
std::vector<MertensAccumulator> mertens_scan(const PrimeTable& table,
                                             const std::vector<double>& xs);
MertensAccumulator mertens(const PrimeTable& table, double x);

// Exact harmonic-number accumulator H_k = sum 1/j as a reduced big
// fraction.  The update reduces against the small increment only, which
// keeps the cost linear in the digit count (a generic big-gcd would not).
class HarmonicAccumulator {
 public:
  void advance();  // k -> k+1
  std::uint64_t k() const { return k_; }
  Rational value() const { return Rational(num_, den_); }
  long double value_ld() const { return Rational::ratio_ld(num_, den_); }

 private:
  BigInt num_ = 0, den_ = 1;
  std::uint64_t k_ = 0;
};

// sum_{k=1..n} 1/(H_k - gamma); exact-rational H_k below the switchover
// (1e5), compensated floating recurrence above.  The two regimes agree to
// ~1e-9 relative at the switchover.
double rh_partial_sum(std::uint64_t n);

// sum_{k=2..n} 1/log k.
double log_partial_sum(std::uint64_t n);

// The five desk-checkable quantities
//   S1 = sum_{k=3..n+1} 1/log k,   S2 = sum_{k=2..n} 1/(H_k - gamma),
//   S3 = li(n+1) - li(2),          S4 = sum_{k=2..n} 1/log k,
//   S5 = li(n)
// and the four adjacent comparisons S1 < S2 < S3 < S4 < S5 with their gaps.
struct InequalityChainReport {
  std::uint64_t n = 0;
  double values[5] = {};
  bool holds[4] = {};
  double gaps[4] = {};
  bool all_hold() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

InequalityChainReport inequality_chain(std::uint64_t n);

// Prime ideals of Z[i] of norm <= x: split primes (p ≡ 1 mod 4) give two
// ideals of norm p, inert primes (p ≡ 3 mod 4) one of norm p^2, and the
// ramified prime 2 one of norm 2.
std::uint64_t pi_gaussian(const PrimeTable& table, double x);

// li(n) - rh_partial_sum(n); converges as n grows.
double li_rhsum_gap(std::uint64_t n);

// Binary pi checkpoint cache: magic "PCF1", then little-endian
// (u64 x, u64 pi(x)) pairs.
void write_pi_cache(const std::filesystem::path& path,
                    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& entries);
std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> read_pi_cache(
    const std::filesystem::path& path);

}  // namespace pcf
