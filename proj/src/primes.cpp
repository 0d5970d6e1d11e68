#include "smoothbound/primes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"
#include "smoothbound/logsum.hpp"

namespace smoothbound {
namespace {

// Odd-only bit array: bit i stands for 2*i + 1 (or lo + 2*i within a segment).
class OddBits {
 public:
  explicit OddBits(std::size_t n) : words_((n + 63) / 64, 0), n_(n) {}
  void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t size() const { return n_; }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t n_;
};

std::vector<std::uint32_t> simple_sieve(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  primes.push_back(2);
  const std::size_t n = static_cast<std::size_t>((limit - 1) / 2);  // odd numbers 3..limit
  OddBits composite(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    if (composite.test(i)) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(static_cast<std::uint32_t>(p));
    for (std::uint64_t q = p * p; q <= limit; q += 2 * p) composite.set((q - 1) / 2);
  }
  return primes;
}

std::vector<std::uint32_t> segmented_sieve(std::uint64_t limit) {
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  const std::vector<std::uint32_t> base = simple_sieve(root);
  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(1.1 * static_cast<double>(limit) /
                                          std::log(static_cast<double>(limit))));
  primes.push_back(2);

  constexpr std::uint64_t kSegmentOdds = std::uint64_t{1} << 21;
  for (std::uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentOdds) {
    const std::uint64_t hi = std::min(limit, lo + 2 * kSegmentOdds - 1);  // inclusive
    const std::size_t count = static_cast<std::size_t>((hi - lo) / 2 + 1);
    OddBits composite(count);
    for (std::size_t b = 1; b < base.size(); ++b) {
      const std::uint64_t p = base[b];
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      if (start % 2 == 0) start += p;
      for (std::uint64_t q = start; q <= hi; q += 2 * p) composite.set((q - lo) / 2);
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (!composite.test(i)) primes.push_back(static_cast<std::uint32_t>(lo + 2 * i));
    }
  }
  return primes;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes)
    : limit_(limit), primes_(std::move(primes)) {}

std::uint64_t PrimeTable::prime(std::size_t j) const {
  if (j == 0 || j > primes_.size()) {
    throw InvalidArgument("prime index " + std::to_string(j) + " outside 1.." +
                          std::to_string(primes_.size()));
  }
  return primes_[j - 1];
}

std::size_t PrimeTable::count(std::uint64_t x) const {
  if (x > limit_) {
    throw TableTooSmall("count(" + std::to_string(x) + ") beyond sieve limit " +
                        std::to_string(limit_));
  }
  return static_cast<std::size_t>(
      std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::size_t PrimeTable::count_below(double x) const {
  if (x > static_cast<double>(limit_) + 1.0) {
    throw TableTooSmall("primes below " + std::to_string(x) + " need a larger table");
  }
  return static_cast<std::size_t>(
      std::partition_point(primes_.begin(), primes_.end(),
                           [x](std::uint32_t p) { return static_cast<double>(p) < x; }) -
      primes_.begin());
}

std::size_t PrimeTable::count_at_most(double x) const {
  if (x > static_cast<double>(limit_)) {
    throw TableTooSmall("primes up to " + std::to_string(x) + " need a larger table");
  }
  return static_cast<std::size_t>(
      std::partition_point(primes_.begin(), primes_.end(),
                           [x](std::uint32_t p) { return static_cast<double>(p) <= x; }) -
      primes_.begin());
}

PrimeTable build_prime_table(std::uint64_t limit, std::uint64_t guard) {
  if (limit < 2) throw InvalidArgument("prime table limit must be at least 2");
  if (limit > guard || limit > kMaxSieveLimit) {
    throw ResourceLimit("prime table limit " + std::to_string(limit) + " exceeds guard " +
                        std::to_string(std::min(guard, kMaxSieveLimit)));
  }
  auto primes = limit <= kSegmentedSieveThreshold ? simple_sieve(limit) : segmented_sieve(limit);
  return PrimeTable(limit, std::move(primes));
}

std::size_t smoothness_index(const PrimeTable& table, double n) {
  if (!(n > 2.0)) throw InvalidArgument("smoothness bound must exceed 2 (no prime below n)");
  if (n > static_cast<double>(table.limit())) {
    throw TableTooSmall("smoothness bound " + std::to_string(n) + " beyond sieve limit " +
                        std::to_string(table.limit()));
  }
  return table.count_below(n);
}

ReciprocalSum prime_reciprocal_sum(const PrimeTable& table, double a, double b) {
  if (!(a >= 2.0)) throw InvalidArgument("reciprocal sum needs a >= 2");
  if (a > b) throw InvalidArgument("reciprocal sum needs a <= b");
  if (b > static_cast<double>(table.limit())) {
    throw TableTooSmall("reciprocal sum upper end beyond sieve limit");
  }
  ReciprocalSum out;
  CompensatedSum acc;
  const auto primes = table.primes();
  for (std::size_t i = table.count_below(a); i < primes.size(); ++i) {
    const double p = primes[i];
    if (p > b) break;
    acc.add(1.0 / p);
    ++out.terms;
  }
  out.sum = acc.value();
  if (a > std::numbers::e) out.mertens_estimate = std::log(std::log(b)) - std::log(std::log(a));
  return out;
}

SqrtPrimeQuantities sqrt_prime_quantities(const PrimeTable& table, std::size_t k) {
  if (k < 1 || k > table.size()) {
    throw InvalidArgument("prime count k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(table.size()));
  }
  SqrtPrimeQuantities out;
  CompensatedSum sum;
  double log_product = 0.0;
  for (std::size_t j = 1; j <= k; ++j) {
    const double inv_root = 1.0 / std::sqrt(static_cast<double>(table.prime(j)));
    sum.add(inv_root);
    log_product += std::log1p(-inv_root);
  }
  out.sqrt_sum = sum.value();
  out.product = std::exp(log_product);
  const double pk = static_cast<double>(table.prime(k));
  if (pk > 3.0) {
    out.integral_bound = adaptive_simpson(
        [](double x) { return 1.0 / (std::sqrt(x) * std::log(x)); }, 3.0, pk, 1e-9);
  }
  return out;
}

}  // namespace smoothbound
