#include "pcf/primes.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

#include "pcf/special.hpp"

namespace pcf {

namespace {

constexpr std::uint64_t kLimitCap = std::uint64_t{1} << 34;
constexpr std::size_t kRankStride = 8;  // words per rank block

struct Kahan {
  long double sum = 0.0L, carry = 0.0L;
  void add(long double v) {
    long double y = v - carry;
    long double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

std::vector<std::uint32_t> base_primes(std::uint64_t up_to) {
  std::vector<bool> comp(up_to + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 3; i <= up_to; i += 2) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= up_to; j += 2 * i) comp[j] = true;
  }
  return out;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PrimeTable PrimeTable::sieve(const SieveConfig& config) {
  if (config.limit < 2) throw std::invalid_argument("sieve: limit >= 2");
  if (config.limit > kLimitCap) throw LimitTooLarge();
  if (config.segment_bits == 0 || config.segment_bits % 64 != 0)
    throw std::invalid_argument("sieve: segment_bits must be a positive multiple of 64");

  PrimeTable t;
  t.limit_ = config.limit;
  const std::uint64_t n_odds = (config.limit + 1) / 2;  // indices for 1,3,5,...
  const std::uint64_t n_words = (n_odds + 63) / 64;
  t.words_.assign(n_words, 0);

  const auto base = base_primes(isqrt_u64(config.limit));

  // Segments are data-independent given the base primes; a segment sieves
  // odd indices [seg_lo, seg_hi) into a composite mask, which is then
  // flipped into the prime bitmap.
  const std::uint64_t seg_words = config.segment_bits / 64;
  std::uint64_t running = 1;  // counts the prime 2
  for (std::uint64_t w0 = 0; w0 < n_words; w0 += seg_words) {
    const std::uint64_t w1 = std::min(n_words, w0 + seg_words);
    const std::uint64_t idx_lo = w0 * 64;
    const std::uint64_t idx_hi = std::min(n_odds, w1 * 64);
    const std::uint64_t val_lo = 2 * idx_lo + 1;

    std::vector<std::uint64_t> comp(w1 - w0, 0);
    for (std::uint32_t p : base) {
      std::uint64_t start = std::uint64_t{p} * p;
      if (start < val_lo) {
        std::uint64_t m = (val_lo + p - 1) / p;
        if (m % 2 == 0) ++m;
        start = m * p;
      }
      for (std::uint64_t v = start; v <= 2 * (idx_hi - 1) + 1; v += 2 * p) {
        std::uint64_t i = (v - 1) / 2 - idx_lo;
        comp[i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
    for (std::uint64_t w = w0; w < w1; ++w) t.words_[w] = ~comp[w - w0];
    if (w0 == 0) t.words_[0] &= ~std::uint64_t{1};  // 1 is not prime
    // mask padding past the last valid odd index
    if (w1 * 64 > n_odds) {
      std::uint64_t keep = n_odds - (w1 - 1) * 64;
      t.words_[w1 - 1] &= (keep == 64) ? ~std::uint64_t{0}
                                       : ((std::uint64_t{1} << keep) - 1);
    }
    for (std::uint64_t w = w0; w < w1; ++w) running += std::popcount(t.words_[w]);
    std::uint64_t end_value = std::min(config.limit, 2 * (idx_hi - 1) + 1);
    t.checkpoints_.emplace_back(end_value, running);
  }

  // rank_[b] = odd primes with index below block b (blocks of 8 words)
  const std::size_t n_blocks = (t.words_.size() + kRankStride - 1) / kRankStride;
  t.rank_.assign(n_blocks + 1, 0);
  std::uint64_t acc = 0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    t.rank_[b] = acc;
    for (std::size_t w = b * kRankStride; w < std::min(t.words_.size(), (b + 1) * kRankStride);
         ++w)
      acc += std::popcount(t.words_[w]);
  }
  t.rank_[n_blocks] = acc;
  return t;
}

std::uint64_t PrimeTable::pi_u64(std::uint64_t n) const {
  if (n > limit_) throw OutOfRange("pi: x exceeds sieve limit");
  if (n < 2) return 0;
  if (n == 2) return 1;
  const std::uint64_t idx_max = (n - 1) / 2;  // last odd <= n has this index
  std::uint64_t count = 1;
  const std::size_t full_block = idx_max / (64 * kRankStride);
  count += rank_[full_block];
  const std::size_t w_start = full_block * kRankStride;
  const std::size_t w_last = idx_max / 64;
  for (std::size_t w = w_start; w < w_last; ++w) count += std::popcount(words_[w]);
  const unsigned keep = static_cast<unsigned>(idx_max % 64) + 1;
  const std::uint64_t mask =
      (keep == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << keep) - 1);
  count += std::popcount(words_[w_last] & mask);
  return count;
}

std::uint64_t PrimeTable::pi(double x) const {
  if (std::isnan(x) || x > static_cast<double>(limit_)) throw OutOfRange("pi: x exceeds sieve limit");
  if (x < 2.0) return 0;
  return pi_u64(static_cast<std::uint64_t>(x));
}

std::uint64_t PrimeTable::count_mod4(std::uint64_t n, int r) const {
  if (n > limit_) throw OutOfRange("count_mod4: x exceeds sieve limit");
  if (r != 1 && r != 3) throw std::invalid_argument("count_mod4: residue must be 1 or 3");
  if (n < 3) return 0;
  // Odd p = 2i+1 has p ≡ 1 (mod 4) exactly when i is even, so the residue
  // classes are the even/odd bit positions.
  const std::uint64_t even_mask = 0x5555555555555555ull;
  const std::uint64_t sel = (r == 1) ? even_mask : ~even_mask;
  const std::uint64_t idx_max = (n - 1) / 2;
  const std::size_t w_last = idx_max / 64;
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < w_last; ++w) count += std::popcount(words_[w] & sel);
  const unsigned keep = static_cast<unsigned>(idx_max % 64) + 1;
  const std::uint64_t mask =
      (keep == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << keep) - 1);
  count += std::popcount(words_[w_last] & sel & mask);
  return count;
}

std::vector<MertensAccumulator> mertens_scan(const PrimeTable& table,
                                             const std::vector<double>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 2.0 || xs[i] > static_cast<double>(table.limit()))
      throw OutOfRange("mertens: x outside [2, limit]");
    if (i && xs[i] < xs[i - 1]) throw std::invalid_argument("mertens_scan: xs must be ascending");
  }
  std::vector<MertensAccumulator> out;
  out.reserve(xs.size());
  Kahan acc;
  std::size_t next = 0;
  const long double e_gamma = std::exp(kEulerGammaL);
  table.for_each_prime([&](std::uint64_t p) {
    while (next < xs.size() && static_cast<double>(p) > xs[next]) {
      MertensAccumulator m;
      m.x = xs[next];
      m.log_sum = static_cast<double>(acc.sum);
      m.product = static_cast<double>(std::exp(acc.sum));
      m.scaled = static_cast<double>(e_gamma * std::exp(acc.sum) *
                                     std::log(static_cast<long double>(xs[next])));
      out.push_back(m);
      ++next;
    }
    acc.add(std::log1p(-1.0L / static_cast<long double>(p)));
  });
  while (next < xs.size()) {
    MertensAccumulator m;
    m.x = xs[next];
    m.log_sum = static_cast<double>(acc.sum);
    m.product = static_cast<double>(std::exp(acc.sum));
    m.scaled = static_cast<double>(e_gamma * std::exp(acc.sum) *
                                   std::log(static_cast<long double>(xs[next])));
    out.push_back(m);
    ++next;
  }
  return out;
}

MertensAccumulator mertens(const PrimeTable& table, double x) {
  return mertens_scan(table, {x}).front();
}

void HarmonicAccumulator::advance() {
  // H += 1/k with structured reduction: with H = p/q reduced and
  // g = gcd(q, k), q = g q', k = g k', the sum is (p k' + q')/(q k') and the
  // only common factor left can divide g.
  ++k_;
  BigInt k = k_;
  BigInt g = boost::multiprecision::gcd(den_, k);
  BigInt kp = k / g;
  BigInt qp = den_ / g;
  BigInt num = num_ * kp + qp;
  BigInt den = den_ * kp;
  if (g > 1) {
    BigInt h = boost::multiprecision::gcd(num, g);
    if (h > 1) {
      num /= h;
      den /= h;
    }
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

namespace {
constexpr std::uint64_t kRhExactSwitch = 100000;
}

double rh_partial_sum(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("rh_partial_sum: n >= 1");
  Kahan sum;
  if (n <= kRhExactSwitch) {
    HarmonicAccumulator h;
    for (std::uint64_t k = 1; k <= n; ++k) {
      h.advance();
      sum.add(1.0L / (h.value_ld() - kEulerGammaL));
    }
  } else {
    Kahan h;
    for (std::uint64_t k = 1; k <= n; ++k) {
      h.add(1.0L / static_cast<long double>(k));
      sum.add(1.0L / (h.sum - kEulerGammaL));
    }
  }
  return static_cast<double>(sum.sum);
}

double log_partial_sum(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("log_partial_sum: n >= 2");
  Kahan sum;
  for (std::uint64_t k = 2; k <= n; ++k)
    sum.add(1.0L / std::log(static_cast<long double>(k)));
  return static_cast<double>(sum.sum);
}

InequalityChainReport inequality_chain(std::uint64_t n) {
  if (n < 8) throw std::invalid_argument("inequality_chain: n >= 8");
  InequalityChainReport r;
  r.n = n;
  const double log_n1 = log_partial_sum(n + 1);
  const double log_n = log_partial_sum(n);
  // S1 shifts the log sum window from [2, n] to [3, n+1].
  r.values[0] = log_n1 - 1.0 / std::log(2.0);
  r.values[1] = rh_partial_sum(n) - 1.0 / (1.0 - kEulerGamma);
  r.values[2] = li(static_cast<double>(n + 1)) - li(2.0);
  r.values[3] = log_n;
  r.values[4] = li(static_cast<double>(n));
  for (int i = 0; i < 4; ++i) {
    r.gaps[i] = r.values[i + 1] - r.values[i];
    r.holds[i] = r.gaps[i] > 0.0;
  }
  return r;
}

std::uint64_t pi_gaussian(const PrimeTable& table, double x) {
  if (std::isnan(x) || x > static_cast<double>(table.limit()))
    throw OutOfRange("pi_gaussian: x exceeds sieve limit");
  if (x < 2.0) return 0;
  const auto n = static_cast<std::uint64_t>(x);
  return 2 * table.count_mod4(n, 1) + table.count_mod4(isqrt_u64(n), 3) + 1;
}

double li_rhsum_gap(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("li_rhsum_gap: n >= 2");
  return li(static_cast<double>(n)) - rh_partial_sum(n);
}

void write_pi_cache(const std::filesystem::path& path,
                    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& entries) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("write_pi_cache: cannot open " + path.string());
  out.write("PCF1", 4);
  auto put = [&](std::uint64_t v) {
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b), 8);
  };
  for (const auto& [x, pix] : entries) {
    put(x);
    put(pix);
  }
}

std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>> read_pi_cache(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "PCF1", 4) != 0) return std::nullopt;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  unsigned char b[16];
  while (in.read(reinterpret_cast<char*>(b), 16)) {
    std::uint64_t x = 0, pix = 0;
    for (int i = 0; i < 8; ++i) x |= std::uint64_t{b[i]} << (8 * i);
    for (int i = 0; i < 8; ++i) pix |= std::uint64_t{b[8 + i]} << (8 * i);
    out.emplace_back(x, pix);
  }
  return out;
}

}  // namespace pcf
