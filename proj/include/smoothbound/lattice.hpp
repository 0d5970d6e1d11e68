#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "smoothbound/bigint.hpp"

namespace smoothbound {

// Axis intercepts a_1..a_m of the simplex {z >= 0 : sum z_j / a_j <= 1}.
class SimplexSpec {
 public:
  explicit SimplexSpec(std::vector<double> bounds);

  const std::vector<double>& bounds() const { return bounds_; }
  std::size_t dimension() const { return bounds_.size(); }

 private:
  std::vector<double> bounds_;
};

// Whether points on the slanted face count (sum == 1) or not (sum < 1).
enum class Boundary { inclusive, strict };

// Absolute slack applied to the face test: toward inclusion for
// Boundary::inclusive, toward exclusion for Boundary::strict.
inline constexpr double kBoundarySlack = 1e-12;
inline constexpr std::uint64_t kDefaultLatticeGuard = 1'000'000'000ULL;

// Exact number of nonnegative integer points in the simplex. Slices on the
// largest intercept first. Throws ResourceLimit (with the partial count
// attached) once more than `guard` slices have been visited.
BigInt count_simplex_lattice_points(const SimplexSpec& spec, Boundary boundary = Boundary::inclusive,
                                    std::uint64_t guard = kDefaultLatticeGuard);

struct RationalBound {
  std::int64_t num;
  std::int64_t den;
};

// Same count with rational intercepts a_j = num/den, decided in exact
// integer arithmetic (no slack).
BigInt count_simplex_lattice_points(std::span<const RationalBound> bounds,
                                    Boundary boundary = Boundary::inclusive,
                                    std::uint64_t guard = kDefaultLatticeGuard);

// prod a_j / m!. Strictly below the exact inclusive count for every simplex.
struct ScaledReal {
  double value;      // +inf when out of double range
  double log_value;  // always finite for valid input
  bool log_only;     // value overflowed or underflowed; use log_value
};

ScaledReal simplex_factorial_lower_bound(const SimplexSpec& spec);

// Ways to write k as an ordered sum of m nonnegative integers: C(k+m-1, k).
// f(0,0) = 1 and f(k,0) = 0 for k >= 1.
BigInt compositions_count(std::uint64_t k, std::uint64_t m);

// sum_{k=k0}^{l} f(k,m) with k0 = 0 (include_zero) or 1. With include_zero
// this is C(l+m, m), the point count of the equal-intercept simplex.
BigInt cumulative_compositions(std::uint64_t l, std::uint64_t m, bool include_zero);

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

// sqrt(2 pi z) (z/e)^z.
double stirling_value(double z);
double log_stirling_value(double z);

}  // namespace smoothbound
