#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "smoothbound/bigint.hpp"
#include "smoothbound/lattice.hpp"
#include "smoothbound/primes.hpp"

namespace smoothbound {

// r1: r = [ln n] (ln n - [ln n] < ln 2). r2: r = [ln n] + 1.
enum class BinCase { r1, r2 };

// Half-open prime interval (lower, upper]; the first bin is open at n.
struct Bin {
  double lower;
  double upper;
  bool upper_open;

  bool contains(double p) const { return p > lower && (upper_open ? p < upper : p <= upper); }
};

struct BinningSpec {
  double n = 0.0;
  int r = 0;
  BinCase case_tag = BinCase::r1;
  std::vector<Bin> bins;                // i = 1..r stored at [i-1]
  std::vector<double> weights_upper;    // ln n - i + 1
  std::vector<double> weights_lower;    // ln n - i; ln 2 for the last bin in case r2
  std::vector<std::uint64_t> prime_counts;
  std::vector<double> count_estimate;   // (e-1) n / ((ln n - i) e^i)
  std::vector<double> count_lower_claim;  // n / (e^i (ln n - i))
};

// Bin bookkeeping for smoothness bound n. Prime counts are exact.
BinningSpec build_binning(double n, const PrimeTable& table);

// 0-based bin holding prime p, if any.
std::optional<std::size_t> bin_of(const BinningSpec& spec, double p);

// prod_i f(z_i, m_i): the number of exponent vectors x that aggregate to z.
BigInt k_count(std::span<const std::uint64_t> z, const BinningSpec& spec);

inline constexpr std::uint64_t kDefaultBinningGuard = 100'000'000ULL;

// Visits every nonnegative integer z with sum_i weights[i] z_i <= budget
// (Boundary::inclusive, slack toward inclusion) or < budget (strict, slack
// toward exclusion). Coordinates with active[i] == false stay at zero.
// Throws DegenerateWeight if an active weight is <= 0 and ResourceLimit
// after `guard` visited points.
void enumerate_weighted_points(std::span<const double> weights, const std::vector<bool>& active,
                               double budget, Boundary boundary, std::uint64_t guard,
                               const std::function<void(std::span<const std::uint64_t>)>& visit);

struct UpperBarResult {
  BigInt value;
  std::uint64_t points = 0;
};

// Exact count of exponent vectors x whose bin sums z satisfy
// sum (ln n - i) z_i <= ln N. Never below psi(n, N) = nu(n, N) + 1.
UpperBarResult nu_upper_bar(double n, double N, const BinningSpec& spec,
                            std::uint64_t guard = kDefaultBinningGuard);

struct LowerUnderlineResult {
  double value = 0.0;
  double log_value = 0.0;
  std::uint64_t points = 0;
  // For every visited (bin, z_i): prod_{k<z_i} (1 + k/m_i) <= exp(z_i^2 / 2 m_i).
  bool product_bound_held = true;
  std::uint64_t product_bound_checks = 0;
};

// sum over z with sum (ln n - i + 1) z_i < ln N of prod m_i^{z_i} / z_i!.
LowerUnderlineResult nu_lower_underline(double n, double N, const BinningSpec& spec,
                                        std::uint64_t guard = kDefaultBinningGuard);

}  // namespace smoothbound
