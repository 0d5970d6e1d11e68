#pragma once

#include <cstdint>
#include <vector>

#include "smoothbound/bigint.hpp"
#include "smoothbound/primes.hpp"
#include "smoothbound/report.hpp"

namespace smoothbound {

// strict: prime factors p < n. inclusive: p <= n.
enum class FactorBase { strict, inclusive };
enum class CountMethod { direct, recursive };

struct SmoothCountResult {
  double n = 0.0;
  double N = 0.0;
  BigInt nu;   // integers 2 <= k <= N that are smooth
  BigInt psi;  // same, also counting k = 1
  CountMethod method = CountMethod::direct;
  FactorBase base = FactorBase::strict;
};

inline constexpr std::uint64_t kDefaultDirectGuard = 100'000'000ULL;
inline constexpr std::uint64_t kDefaultMemoGuard = 20'000'000ULL;

// Largest prime factor of every integer in [0, limit]; lpf(0) = lpf(1) = 1.
// Built from a smallest-prime-factor sieve, then resolved per integer
// through the chain k -> k / spf(k).
class LargestPrimeFactorSieve {
 public:
  explicit LargestPrimeFactorSieve(std::uint64_t limit, std::uint64_t guard = kDefaultDirectGuard);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t largest_prime_factor(std::uint64_t k) const { return lpf_.at(k); }

  // Integers 2 <= k <= min(N, limit) whose largest prime factor is below n
  // (or at most n for FactorBase::inclusive).
  std::uint64_t count_smooth(double n, double N, FactorBase base = FactorBase::strict) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> lpf_;
};

SmoothCountResult smooth_count_direct(double n, double N, FactorBase base = FactorBase::strict,
                                      std::uint64_t guard = kDefaultDirectGuard);

// Counts integers up to N with every prime factor <= p_k by the recursion
// psi(k, N) = sum_j psi(k-1, N / p_k^j), memoized on (k, floor N).
// The result is reported with n = p_k and FactorBase::inclusive, which is the
// same count as the strict base with n = p_{k+1}.
SmoothCountResult smooth_count_recursive(std::size_t k, double N, const PrimeTable& table,
                                         std::uint64_t memo_guard = kDefaultMemoGuard);

// l = [ln N / ln n], rounded so that exact powers n^l = N give the exact l.
std::uint64_t simplex_level(double n, double N);

// Equal-weight simplex lower bound for nu(n, N): m, l, the exact f(l, m),
// m^l / l!, and both Stirling closed forms, all as natural logs.
// For l = 0 the bound is trivially 1 and the "degenerate-range" flag is set.
BoundReport preliminary_lower_bound(double n, double N, const PrimeTable& table);

}  // namespace smoothbound
