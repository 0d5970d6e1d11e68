#include "smoothbound/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

struct RealSlicer {
  std::vector<double> bounds;  // sorted descending
  Boundary boundary;
  std::uint64_t guard;
  std::uint64_t visited = 0;
  BigInt counted = 0;

  // Adds the points z_level..z_{m-1} >= 0 with sum z_j / a_j <= residual (or <).
  void walk(std::size_t level, double residual) {
    const double a = bounds[level];
    if (level + 1 == bounds.size()) {
      counted += leaf_count(a, residual);
      return;
    }
    for (std::uint64_t z = 0;; ++z) {
      const double rest = residual - static_cast<double>(z) / a;
      if (rest < -kBoundarySlack) break;
      if (++visited > guard) {
        throw ResourceLimit(
            "lattice enumeration exceeded guard of " + std::to_string(guard) + " slices", counted);
      }
      walk(level + 1, rest);
    }
  }

  std::uint64_t leaf_count(double a, double residual) const {
    if (boundary == Boundary::inclusive) {
      const double reach = a * (residual + kBoundarySlack);
      if (reach < 0.0) return 0;
      return static_cast<std::uint64_t>(std::floor(reach)) + 1;
    }
    const double reach = a * (residual - kBoundarySlack);
    if (reach <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::ceil(reach));
  }
};

struct IntegerSlicer {
  std::vector<std::int64_t> weights;  // sorted ascending => largest intercept first
  Boundary boundary;
  std::uint64_t guard;
  std::uint64_t visited = 0;
  BigInt counted = 0;

  // Adds the points with sum w_j z_j <= budget (inclusive) or < budget (strict).
  void walk(std::size_t level, std::int64_t budget) {
    const std::int64_t w = weights[level];
    if (level + 1 == weights.size()) {
      if (boundary == Boundary::inclusive) {
        if (budget >= 0) counted += budget / w + 1;
      } else if (budget > 0) {
        counted += (budget - 1) / w + 1;
      }
      return;
    }
    for (std::int64_t rest = budget; rest >= 0; rest -= w) {
      if (++visited > guard) {
        throw ResourceLimit(
            "lattice enumeration exceeded guard of " + std::to_string(guard) + " slices", counted);
      }
      walk(level + 1, rest);
    }
  }
};

}  // namespace

SimplexSpec::SimplexSpec(std::vector<double> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw InvalidArgument("simplex needs at least one intercept");
  for (double a : bounds_) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      throw InvalidArgument("simplex intercepts must be positive and finite");
    }
  }
}

BigInt count_simplex_lattice_points(const SimplexSpec& spec, Boundary boundary,
                                    std::uint64_t guard) {
  RealSlicer slicer{spec.bounds(), boundary, guard};
  std::sort(slicer.bounds.begin(), slicer.bounds.end(), std::greater<>());
  slicer.walk(0, 1.0);
  return slicer.counted;
}

BigInt count_simplex_lattice_points(std::span<const RationalBound> bounds, Boundary boundary,
                                    std::uint64_t guard) {
  if (bounds.empty()) throw InvalidArgument("simplex needs at least one intercept");
  // sum z_j den_j / num_j <= 1  <=>  sum z_j den_j (L / num_j) <= L, L = lcm(num).
  std::int64_t lcm = 1;
  for (const auto& b : bounds) {
    if (b.num <= 0 || b.den <= 0) throw InvalidArgument("rational intercepts must be positive");
    lcm = std::lcm(lcm, b.num);
    if (lcm > (std::int64_t{1} << 40)) throw InvalidArgument("rational intercepts too large");
  }
  IntegerSlicer slicer{{}, boundary, guard};
  for (const auto& b : bounds) {
    std::int64_t w = 0;
    if (__builtin_mul_overflow(b.den, lcm / b.num, &w) || w > (std::int64_t{1} << 60)) {
      throw InvalidArgument("rational intercepts too large");
    }
    slicer.weights.push_back(w);
  }
  std::sort(slicer.weights.begin(), slicer.weights.end());
  slicer.walk(0, lcm);
  return slicer.counted;
}

ScaledReal simplex_factorial_lower_bound(const SimplexSpec& spec) {
  double log_value = -std::lgamma(static_cast<double>(spec.dimension()) + 1.0);
  for (double a : spec.bounds()) log_value += std::log(a);
  const double value = std::exp(log_value);
  const bool log_only = !std::isfinite(value) || (value == 0.0);
  return {log_only ? (log_value > 0 ? HUGE_VAL : 0.0) : value, log_value, log_only};
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result holds C(n-k+i, i)
  }
  return result;
}

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt compositions_count(std::uint64_t k, std::uint64_t m) {
  if (m == 0) return k == 0 ? 1 : 0;
  return binomial(k + m - 1, k);
}

BigInt cumulative_compositions(std::uint64_t l, std::uint64_t m, bool include_zero) {
  BigInt total = 0;
  for (std::uint64_t k = include_zero ? 0 : 1; k <= l; ++k) total += compositions_count(k, m);
  return total;
}

double log_stirling_value(double z) {
  if (!(z > 0.0)) throw InvalidArgument("Stirling value needs z > 0");
  return 0.5 * std::log(2.0 * std::numbers::pi * z) + z * (std::log(z) - 1.0);
}

double stirling_value(double z) { return std::exp(log_stirling_value(z)); }

}  // namespace smoothbound
