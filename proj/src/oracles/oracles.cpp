#include "smoothbound/oracles.hpp"

#include <cmath>
#include <numbers>

namespace smoothbound::oracle {
namespace {

constexpr double kSlack = 1e-12;

// Odometer over the box prod [0, caps[i]].
template <typename Visit>
void scan_box(const std::vector<std::uint64_t>& caps, Visit&& visit) {
  std::vector<std::uint64_t> z(caps.size(), 0);
  for (;;) {
    visit(z);
    std::size_t i = 0;
    while (i < z.size() && z[i] == caps[i]) z[i++] = 0;
    if (i == z.size()) return;
    ++z[i];
  }
}

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_count(std::uint64_t x) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 2; k <= x; ++k) count += is_prime(k) ? 1 : 0;
  return count;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k <= limit; ++k) {
    if (is_prime(k)) out.push_back(k);
  }
  return out;
}

std::uint64_t largest_prime_factor(std::uint64_t k) {
  std::uint64_t largest = 1;
  for (std::uint64_t d = 2; d * d <= k; ++d) {
    while (k % d == 0) {
      largest = d;
      k /= d;
    }
  }
  return k > 1 ? k : largest;
}

std::uint64_t smooth_count(double n, double N, bool inclusive) {
  std::uint64_t count = 0;
  const auto top = static_cast<std::uint64_t>(std::floor(N));
  for (std::uint64_t k = 2; k <= top; ++k) {
    const auto p = static_cast<double>(largest_prime_factor(k));
    if (inclusive ? p <= n : p < n) ++count;
  }
  return count;
}

std::vector<std::uint64_t> smooth_set(std::uint64_t pmax, std::uint64_t N) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= N; ++k) {
    if (largest_prime_factor(k) <= pmax) out.push_back(k);
  }
  return out;
}

std::uint64_t lattice_count_box(const std::vector<double>& bounds, bool strict) {
  std::vector<std::uint64_t> caps;
  for (double a : bounds) caps.push_back(static_cast<std::uint64_t>(std::floor(a)));
  std::uint64_t count = 0;
  scan_box(caps, [&](const std::vector<std::uint64_t>& z) {
    double sum = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) sum += static_cast<double>(z[j]) / bounds[j];
    if (strict ? sum < 1.0 - kSlack : sum <= 1.0 + kSlack) ++count;
  });
  return count;
}

std::uint64_t compositions_by_enumeration(unsigned k, unsigned m) {
  if (m == 0) return k == 0 ? 1 : 0;
  std::uint64_t count = 0;
  scan_box(std::vector<std::uint64_t>(m, k), [&](const std::vector<std::uint64_t>& z) {
    std::uint64_t sum = 0;
    for (auto v : z) sum += v;
    if (sum == k) ++count;
  });
  return count;
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

std::uint64_t weighted_count_box(const std::vector<double>& weights, double budget) {
  if (budget < -kSlack) return 0;
  std::vector<std::uint64_t> caps;
  for (double w : weights) caps.push_back(static_cast<std::uint64_t>(std::floor((budget + kSlack) / w)));
  std::uint64_t count = 0;
  scan_box(caps, [&](const std::vector<std::uint64_t>& x) {
    double sum = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) sum += weights[j] * static_cast<double>(x[j]);
    if (sum <= budget + kSlack) ++count;
  });
  return count;
}

long double weighted_exp_sum_flat(const std::vector<double>& bases,
                                  const std::vector<double>& weights, double budget,
                                  bool correction) {
  if (!(budget > kSlack)) return 0.0L;
  std::vector<std::uint64_t> caps;
  for (double w : weights) caps.push_back(static_cast<std::uint64_t>(std::ceil(budget / w)));
  std::vector<long double> terms;
  scan_box(caps, [&](const std::vector<std::uint64_t>& z) {
    double used = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) used += weights[i] * static_cast<double>(z[i]);
    if (!(budget - used > kSlack)) return;
    long double term = 1.0L;
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::uint64_t k = 1; k <= z[i]; ++k) term *= static_cast<long double>(bases[i]) / k;
      if (correction) {
        const long double zz = static_cast<long double>(z[i]);
        term *= std::exp(zz * zz / bases[i]);
      }
    }
    terms.push_back(term);
  });
  long double total = 0.0L;
  for (long double t : terms) total += t;
  return total;
}

double step_exponent(double z, double c, double M, double gamma, double b) {
  const double rest = M - c * z;
  const double A = rest - rest * std::log(rest) / c + rest * gamma / c;
  const double m0 = (std::numbers::e - 1.0) * std::exp(c) / c;
  const double E = z * std::log(m0) - (z > 0 ? z * std::log(z) : 0.0) + b * z;
  return A + E;
}

}  // namespace smoothbound::oracle
