#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace smoothbound {

// Sieve limits above this are refused; primes are stored as 32-bit values.
inline constexpr std::uint64_t kMaxSieveLimit = 4'000'000'000ULL;
inline constexpr std::uint64_t kDefaultSieveGuard = 2'000'000'000ULL;
// Above this limit the sieve runs segment by segment.
inline constexpr std::uint64_t kSegmentedSieveThreshold = 10'000'000ULL;

// Ordered primes up to an inclusive limit. Immutable after construction.
class PrimeTable {
 public:
  PrimeTable(std::uint64_t limit, std::vector<std::uint32_t> primes);

  std::uint64_t limit() const { return limit_; }
  std::span<const std::uint32_t> primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }

  // p_j with 1-based j.
  std::uint64_t prime(std::size_t j) const;

  // pi(x) for x <= limit.
  std::size_t count(std::uint64_t x) const;

  // Number of primes strictly below a real x (x <= limit + 1).
  std::size_t count_below(double x) const;

  // Number of primes p with p <= x for a real x (x <= limit).
  std::size_t count_at_most(double x) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> primes_;
};

PrimeTable build_prime_table(std::uint64_t limit, std::uint64_t guard = kDefaultSieveGuard);

// Largest m with p_m < n.
std::size_t smoothness_index(const PrimeTable& table, double n);

struct ReciprocalSum {
  double sum = 0.0;
  std::size_t terms = 0;
  // ln ln b - ln ln a; absent when a <= e.
  std::optional<double> mertens_estimate;
};

// Sum of 1/p over primes a <= p <= b.
ReciprocalSum prime_reciprocal_sum(const PrimeTable& table, double a, double b);

struct SqrtPrimeQuantities {
  double sqrt_sum = 0.0;        // sum_{j<=k} p_j^{-1/2}
  double product = 1.0;         // prod_{j<=k} (1 - p_j^{-1/2})
  double integral_bound = 0.0;  // int_3^{p_k} dx / (sqrt(x) ln x), 0 when p_k <= 3
};

SqrtPrimeQuantities sqrt_prime_quantities(const PrimeTable& table, std::size_t k);

// Adaptive Simpson quadrature to an absolute tolerance.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 60);

namespace detail {
template <typename F>
double simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                    double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

}  // namespace smoothbound
