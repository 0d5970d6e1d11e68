#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "smoothbound/binning.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/oracles.hpp"
#include "smoothbound/smooth.hpp"

using namespace smoothbound;

namespace {
const PrimeTable& table() {
  static const PrimeTable t = build_prime_table(200000);
  return t;
}
}  // namespace

TEST_CASE("r rule") {
  const BinningSpec a = build_binning(100, table());
  CHECK(a.case_tag == BinCase::r1);
  CHECK(a.r == 4);
  const BinningSpec b = build_binning(122, table());
  CHECK(b.case_tag == BinCase::r2);
  CHECK(b.r == 5);
  // ln n just below and above [ln n] + ln 2.
  const double edge = std::exp(4.0 + std::numbers::ln2);
  CHECK(build_binning(edge * (1 - 1e-12), table()).case_tag == BinCase::r1);
  CHECK(build_binning(edge * (1 + 1e-12), table()).case_tag == BinCase::r2);
  CHECK_THROWS_AS(build_binning(2.5, table()), InvalidArgument);
  CHECK_THROWS_AS(build_binning(1e6, table()), TableTooSmall);
}

TEST_CASE("bins partition the primes below n") {
  for (double n : {3.0, 10.0, 20.0, 37.0, 100.0, 122.0, 1000.0, 54321.5}) {
    const BinningSpec s = build_binning(n, table());
    const auto total = std::accumulate(s.prime_counts.begin(), s.prime_counts.end(), std::uint64_t{0});
    CHECK(total == smoothness_index(table(), n));
    for (auto p : table().primes()) {
      if (p >= n) break;
      std::size_t hits = 0;
      for (const Bin& b : s.bins) hits += b.contains(p);
      REQUIRE(hits == 1);
      REQUIRE(bin_of(s, p).has_value());
    }
    CHECK_FALSE(bin_of(s, n + 1).has_value());
    for (int i = 0; i + 1 < s.r; ++i) CHECK(s.weights_lower[i] > 0.0);
    CHECK(s.weights_lower.back() >= 0.0);
  }
}

TEST_CASE("first bin is open at n") {
  const BinningSpec s = build_binning(97, table());
  CHECK_FALSE(bin_of(s, 97).has_value());
  CHECK(bin_of(s, 89) == 0u);
  // m_1 for n = 100 is the primes 37..97.
  const BinningSpec h = build_binning(100, table());
  CHECK(h.prime_counts[0] == table().count(97) - table().count(36));
}

TEST_CASE("case r2 keeps 2 in the last bin with weight ln 2") {
  const BinningSpec s = build_binning(122, table());
  CHECK(bin_of(s, 2) == static_cast<std::size_t>(s.r - 1));
  CHECK(s.prime_counts.back() == 1);
  CHECK(s.weights_lower.back() == doctest::Approx(std::numbers::ln2));
}

TEST_CASE("bin product") {
  const BinningSpec s = build_binning(100, table());
  std::vector<std::uint64_t> zero(s.r, 0);
  CHECK(k_count(zero, s) == 1);
  std::vector<std::uint64_t> z(s.r, 0);
  z[0] = 2;
  CHECK(k_count(z, s) == compositions_count(2, s.prime_counts[0]));
  z[1] = 1;
  CHECK(k_count(z, s) == compositions_count(2, s.prime_counts[0]) * s.prime_counts[1]);
  CHECK_THROWS_AS(k_count(std::vector<std::uint64_t>{1}, s), InvalidArgument);

  BinningSpec fake = s;
  fake.prime_counts = {5, 2, 0, 0};
  CHECK(k_count(std::vector<std::uint64_t>{1, 1, 0, 0}, fake) == 10);
  CHECK(k_count(std::vector<std::uint64_t>{0, 0, 1, 0}, fake) == 0);
}

TEST_CASE("weighted enumeration") {
  const std::vector<double> w = {1.0, 1.0};
  std::uint64_t inclusive = 0, strict = 0;
  enumerate_weighted_points(w, {true, true}, 2.0, Boundary::inclusive, 1000, [&](auto) { ++inclusive; });
  enumerate_weighted_points(w, {true, true}, 2.0, Boundary::strict, 1000, [&](auto) { ++strict; });
  CHECK(inclusive == 6);
  CHECK(strict == 3);
  std::uint64_t masked = 0;
  enumerate_weighted_points(w, {true, false}, 2.0, Boundary::inclusive, 1000, [&](auto) { ++masked; });
  CHECK(masked == 3);
  const std::vector<double> bad = {1.0, 0.0};
  CHECK_THROWS_AS(enumerate_weighted_points(bad, {true, true}, 2.0, Boundary::inclusive, 1000, [](auto) {}),
                  DegenerateWeight);
  // An inactive zero weight is harmless.
  CHECK_NOTHROW(enumerate_weighted_points(bad, {true, false}, 2.0, Boundary::inclusive, 1000, [](auto) {}));
  CHECK_THROWS_AS(enumerate_weighted_points(w, {true}, 2.0, Boundary::inclusive, 1000, [](auto) {}),
                  InvalidArgument);
  CHECK_THROWS_AS(enumerate_weighted_points(w, {true, true}, 100.0, Boundary::inclusive, 10, [](auto) {}),
                  ResourceLimit);
  try {
    enumerate_weighted_points(bad, {true, true}, 2.0, Boundary::inclusive, 1000, [](auto) {});
  } catch (const DegenerateWeight& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("upper bar") {
  const BinningSpec s20 = build_binning(20, table());
  const auto bar = nu_upper_bar(20, 1000, s20);
  CHECK(bar.value >= smooth_count_direct(20, 1000).psi);

  std::vector<double> per_prime;
  for (auto p : table().primes()) {
    if (p >= 20) break;
    per_prime.push_back(s20.weights_lower[*bin_of(s20, p)]);
  }
  CHECK(bar.value == oracle::weighted_count_box(per_prime, std::log(1000.0)));

  const BinningSpec s100 = build_binning(100, table());
  CHECK(nu_upper_bar(100, 1.5, s100).value == 1);
  CHECK_THROWS_AS(nu_upper_bar(100, 1.0, s100), InvalidArgument);
  CHECK_THROWS_AS(nu_upper_bar(20, 1000, s100), InvalidArgument);
  CHECK_THROWS_AS(nu_upper_bar(20, 1e9, s20, 100), ResourceLimit);
}

TEST_CASE("lower underline") {
  const BinningSpec s20 = build_binning(20, table());
  const auto lower = nu_lower_underline(20, 1000, s20);
  CHECK(lower.value <= static_cast<double>(smooth_count_direct(20, 1000).nu));
  CHECK(lower.product_bound_held);
  CHECK(lower.product_bound_checks > 0);
  CHECK(lower.log_value == doctest::Approx(std::log(lower.value)));
  // ln N below the smallest upper weight leaves only z = 0.
  const BinningSpec s100 = build_binning(100, table());
  CHECK(nu_lower_underline(100, 1.5, s100).value == doctest::Approx(1.0));

  // Direct flat sum of prod m_i^z_i / z_i! over the strict region.
  std::vector<double> bases, weights;
  for (int i = 0; i < s20.r; ++i) {
    if (s20.prime_counts[i] == 0) continue;
    bases.push_back(static_cast<double>(s20.prime_counts[i]));
    weights.push_back(s20.weights_upper[i]);
  }
  const long double flat = oracle::weighted_exp_sum_flat(bases, weights, std::log(1000.0), false);
  CHECK(lower.value == doctest::Approx(static_cast<double>(flat)).epsilon(1e-12));
}

TEST_CASE("sandwich on the grid") {
  for (double n : {10.0, 20.0, 35.0, 50.0}) {
    const BinningSpec s = build_binning(n, table());
    for (double N : {1e3, 1e4, 1e5}) {
      const auto nu = smooth_count_direct(n, N).nu;
      CHECK(nu_lower_underline(n, N, s).value <= static_cast<double>(nu));
      CHECK(nu <= nu_upper_bar(n, N, s).value);
    }
  }
}
