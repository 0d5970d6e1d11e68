#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smoothbound/errors.hpp"
#include "smoothbound/primes.hpp"
#include "smoothbound/smooth.hpp"

namespace smoothbound::harness_detail {

// Prime table covering every n on the grid and one shared largest-prime-factor
// sieve covering every N that fits under the guard.
class CountContext {
 public:
  CountContext(const std::vector<double>& n_values, const std::vector<double>& N_values,
               std::uint64_t guard)
      : table_(build_prime_table(table_limit(n_values))) {
    double top = 2.0;
    for (double N : N_values) {
      if (N <= static_cast<double>(guard)) top = std::max(top, N);
    }
    sieve_.emplace(static_cast<std::uint64_t>(std::floor(top)), guard);
  }

  const PrimeTable& table() const { return table_; }

  // nu(n, N) with the strict factor base; nullopt when N is beyond the sieve.
  std::optional<std::uint64_t> nu(double n, double N) const {
    if (N > static_cast<double>(sieve_->limit())) return std::nullopt;
    return sieve_->count_smooth(n, N, FactorBase::strict);
  }

 private:
  static std::uint64_t table_limit(const std::vector<double>& n_values) {
    double top = 100.0;
    for (double n : n_values) {
      if (std::isfinite(n)) top = std::max(top, n);
    }
    return static_cast<std::uint64_t>(std::ceil(top)) + 1;
  }

  PrimeTable table_;
  std::optional<LargestPrimeFactorSieve> sieve_;
};

inline double log_or_neg_inf(double x) {
  return x > 0.0 ? std::log(x) : -INFINITY;
}

}  // namespace smoothbound::harness_detail
