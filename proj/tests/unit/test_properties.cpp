// Seeded randomized properties. Each case draws from its own generator so a
// failure reproduces from the printed seed alone.

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "smoothbound/auxproblems.hpp"
#include "smoothbound/binning.hpp"
#include "smoothbound/bounds.hpp"
#include "smoothbound/lattice.hpp"
#include "smoothbound/logsum.hpp"
#include "smoothbound/oracles.hpp"
#include "smoothbound/smooth.hpp"

using namespace smoothbound;

namespace {

constexpr std::uint64_t kSeed = 20240917;

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t salt) : rng(kSeed ^ (salt * 0x9E3779B97F4A7C15ULL)) {}
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  std::uint64_t integer(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  }
  std::vector<double> intercepts(std::size_t max_dim, double lo, double hi) {
    std::vector<double> a(integer(1, max_dim));
    for (auto& x : a) x = real(lo, hi);
    return a;
  }
};

const PrimeTable& table() {
  static const PrimeTable t = build_prime_table(100000);
  return t;
}

}  // namespace

TEST_CASE("lattice count: box oracle, permutation symmetry, monotonicity") {
  Gen g(1);
  for (int trial = 0; trial < 300; ++trial) {
    auto a = g.intercepts(4, 0.2, 7.0);
    INFO("trial " << trial);
    const BigInt base = count_simplex_lattice_points(SimplexSpec(a));
    REQUIRE(base == oracle::lattice_count_box(a, false));
    REQUIRE(count_simplex_lattice_points(SimplexSpec(a), Boundary::strict) == oracle::lattice_count_box(a, true));
    REQUIRE(simplex_factorial_lower_bound(SimplexSpec(a)).log_value < log_of(base));

    auto shuffled = a;
    std::shuffle(shuffled.begin(), shuffled.end(), g.rng);
    REQUIRE(count_simplex_lattice_points(SimplexSpec(shuffled)) == base);

    auto bigger = a;
    bigger[g.integer(0, a.size() - 1)] += g.real(0.0, 3.0);
    REQUIRE(count_simplex_lattice_points(SimplexSpec(bigger)) >= base);
  }
}

TEST_CASE("lattice count: slicing on the last coordinate") {
  Gen g(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = g.intercepts(4, 0.5, 6.0);
    if (a.size() < 2) a.push_back(g.real(0.5, 6.0));
    const double last = a.back();
    std::vector<double> rest(a.begin(), a.end() - 1);
    // Slice j leaves sum_{i<m} z_i / a_i <= 1 - j / a_m, i.e. intercepts scaled by that factor.
    BigInt sum = 0;
    for (int j = 0; j <= static_cast<int>(std::floor(last)); ++j) {
      const double scale = 1.0 - j / last;
      if (scale <= 1e-12) {
        sum += 1;
        continue;
      }
      std::vector<double> slice;
      for (double x : rest) slice.push_back(x * scale);
      sum += oracle::lattice_count_box(slice, false);
    }
    REQUIRE(count_simplex_lattice_points(SimplexSpec(a)) == sum);
  }
}

TEST_CASE("smooth count: monotone in n and N, direct equals recursive") {
  Gen g(3);
  const LargestPrimeFactorSieve sieve(100000);
  for (int trial = 0; trial < 200; ++trial) {
    const double n = g.real(2.5, 300.0);
    const double N = g.real(2.0, 1e5);
    const auto base = sieve.count_smooth(n, N);
    REQUIRE(sieve.count_smooth(n + g.real(0, 50), N) >= base);
    REQUIRE(sieve.count_smooth(n, std::min(1e5, N + g.real(0, 1000))) >= base);
    REQUIRE(base <= static_cast<std::uint64_t>(std::floor(N)) - 1);
    const auto rec = smooth_count_recursive(table().count_below(n), N, table());
    REQUIRE(rec.nu == base);
    REQUIRE(rec.psi == rec.nu + 1);
  }
}

TEST_CASE("binning: bin sums aggregate the exponents") {
  Gen g(4);
  for (int trial = 0; trial < 50; ++trial) {
    const double n = g.real(3.0, 5000.0);
    const BinningSpec spec = build_binning(n, table());
    std::vector<std::uint64_t> z(spec.r, 0);
    std::uint64_t total = 0;
    for (auto p : table().primes()) {
      if (p >= n) break;
      const std::uint64_t x = g.integer(0, 3);
      z[*bin_of(spec, p)] += x;
      total += x;
    }
    std::uint64_t zsum = 0;
    for (auto v : z) zsum += v;
    REQUIRE(zsum == total);
  }
}

TEST_CASE("binning: bin product equals x-space enumeration") {
  Gen g(5);
  for (int trial = 0; trial < 40; ++trial) {
    const double n = g.real(5.0, 60.0);
    const BinningSpec spec = build_binning(n, table());
    std::vector<std::uint64_t> z(spec.r);
    std::uint64_t expected = 1;
    for (int i = 0; i < spec.r; ++i) {
      z[i] = g.integer(0, 3);
      expected *= oracle::compositions_by_enumeration(static_cast<unsigned>(z[i]),
                                                      static_cast<unsigned>(spec.prime_counts[i]));
    }
    REQUIRE(k_count(z, spec) == expected);
  }
}

TEST_CASE("binning: sandwich at random cells") {
  Gen g(6);
  const LargestPrimeFactorSieve sieve(100000);
  for (int trial = 0; trial < 40; ++trial) {
    const double n = g.real(3.0, 80.0);
    const double N = std::exp(g.real(0.5, std::log(1e5)));
    INFO("n=" << n << " N=" << N);
    const BinningSpec spec = build_binning(n, table());
    const auto psi = BigInt(sieve.count_smooth(n, N)) + 1;
    REQUIRE(psi <= nu_upper_bar(n, N, spec).value);
    const auto lower = nu_lower_underline(n, N, spec);
    REQUIRE(lower.value <= static_cast<double>(psi));
    REQUIRE(lower.product_bound_held);
  }
}

TEST_CASE("aux sums: monotone in M and matching flat enumeration") {
  Gen g(7);
  for (int trial = 0; trial < 30; ++trial) {
    double c = g.real(1.2, 5.0);
    if (std::abs(c - std::round(c)) < 0.05) c += 0.1;
    const double M1 = g.real(1.1, 8.0);
    const double M2 = M1 + g.real(0.0, 3.0);
    const auto p1 = make_aux_instance(c, M1, AuxKind::P);
    const auto q1 = make_aux_instance(c, M1, AuxKind::Q);
    const double F1 = eval_F(p1).log_value;
    const double G1 = eval_G(q1).log_value;
    REQUIRE(eval_F(make_aux_instance(c, M2, AuxKind::P)).log_value >= F1);
    REQUIRE(eval_G(make_aux_instance(c, M2, AuxKind::Q)).log_value >= G1);
    REQUIRE(eval_plain_sum(q1).log_value >= F1 - 1e-12);
    const double flat = std::log(static_cast<double>(oracle::weighted_exp_sum_flat(p1.bases, p1.weights, M1, false)));
    REQUIRE(F1 == doctest::Approx(flat).epsilon(1e-10));
  }
}

TEST_CASE("closed-form maximum dominates random samples") {
  Gen g(8);
  for (int trial = 0; trial < 200; ++trial) {
    const double c = g.real(2.0, 60.0);
    const double M = g.real(c * 1.01, c * 50.0);
    const double gamma = g.real(-2.0, 6.0);
    const double a = g.real(0.0, 3.0);
    const HMax h = h_max_closed_form(c, M, gamma, a);
    for (int s = 0; s < 50; ++s) {
      REQUIRE(h_function(g.real(0.0, M / c), c, M, gamma, a) <= h.max_value + 1e-9 * std::abs(h.max_value));
    }
    REQUIRE(h.t0 > 0.0);
    REQUIRE(h.t0 < 1.0);
  }
}

TEST_CASE("log-sum accumulator matches long double summation") {
  Gen g(9);
  for (int trial = 0; trial < 50; ++trial) {
    LogSumAccumulator acc;
    long double direct = 0.0L;
    const auto count = g.integer(1, 200);
    for (std::uint64_t i = 0; i < count; ++i) {
      const double lt = g.real(-30.0, 30.0);
      acc.add(lt);
      direct += std::exp(static_cast<long double>(lt));
    }
    REQUIRE(acc.log_value() == doctest::Approx(std::log(static_cast<double>(direct))).epsilon(1e-13));
  }
}

TEST_CASE("reciprocal sums are additive at random splits") {
  Gen g(10);
  const auto primes = table().primes();
  for (int trial = 0; trial < 100; ++trial) {
    const auto i = g.integer(0, primes.size() - 3);
    const double b = primes[i];
    const double b_next = primes[i + 1];
    const double top = g.real(b_next, 1e5);
    const double whole = prime_reciprocal_sum(table(), 2, top).sum;
    const double split = prime_reciprocal_sum(table(), 2, b).sum + prime_reciprocal_sum(table(), b_next, top).sum;
    REQUIRE(split == doctest::Approx(whole).epsilon(1e-13));
  }
}
