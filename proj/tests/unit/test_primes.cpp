#include <cmath>
#include <numbers>

#include <boost/math/special_functions/expint.hpp>

#include "doctest.h"
#include "smoothbound/errors.hpp"
#include "smoothbound/oracles.hpp"
#include "smoothbound/primes.hpp"

using namespace smoothbound;

TEST_CASE("table holds exactly the primes up to the limit") {
  const PrimeTable t = build_prime_table(100);
  CHECK(t.size() == 25);
  CHECK(t.prime(1) == 2);
  CHECK(t.prime(25) == 97);
  CHECK(t.count(100) == 25);
  CHECK(t.count(2) == 1);
  CHECK_THROWS_AS(t.prime(26), InvalidArgument);
  CHECK_THROWS_AS(t.prime(0), InvalidArgument);
  CHECK_THROWS_AS(t.count(101), TableTooSmall);
}

TEST_CASE("counts agree with trial division up to 1e5") {
  const PrimeTable t = build_prime_table(100000);
  const auto oracle = oracle::primes_up_to(100000);
  REQUIRE(t.size() == oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) REQUIRE(t.primes()[i] == oracle[i]);
  std::size_t idx = 0;
  for (std::uint64_t x = 2; x <= 100000; x += 7) {
    while (idx < oracle.size() && oracle[idx] <= x) ++idx;
    REQUIRE(t.count(x) == idx);
  }
}

TEST_CASE("segmented sieve matches the plain sieve across the threshold") {
  const std::uint64_t limit = kSegmentedSieveThreshold + 200000;
  const PrimeTable big = build_prime_table(limit);
  CHECK(big.count(kSegmentedSieveThreshold) == 664579);  // pi(1e7)
  for (std::size_t i = big.count(kSegmentedSieveThreshold - 1000); i < big.size(); ++i) {
    REQUIRE(oracle::is_prime(big.primes()[i]));
  }
  std::uint64_t tail = 0;
  for (std::uint64_t x = kSegmentedSieveThreshold + 1; x <= limit; ++x) tail += oracle::is_prime(x);
  CHECK(big.size() == 664579 + tail);
}

TEST_CASE("table construction limits") {
  CHECK_THROWS_AS(build_prime_table(1), InvalidArgument);
  CHECK_THROWS_AS(build_prime_table(1000, 999), ResourceLimit);
  CHECK(build_prime_table(2).size() == 1);
}

TEST_CASE("smoothness index uses p_m < n") {
  const PrimeTable t = build_prime_table(200);
  CHECK(smoothness_index(t, 11) == 4);
  CHECK(smoothness_index(t, 11.5) == 5);
  CHECK(smoothness_index(t, 3) == 1);
  CHECK(smoothness_index(t, 100) == 25);
  CHECK_THROWS_AS(smoothness_index(t, 2), InvalidArgument);
  CHECK_THROWS_AS(smoothness_index(t, 500), TableTooSmall);
}

TEST_CASE("reciprocal sums") {
  const PrimeTable t = build_prime_table(1000000);
  const auto small = prime_reciprocal_sum(t, 2, 10);
  CHECK(small.sum == doctest::Approx(1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7).epsilon(1e-15));
  CHECK(small.terms == 4);
  CHECK_FALSE(small.mertens_estimate.has_value());
  CHECK(prime_reciprocal_sum(t, 97, 97).sum == doctest::Approx(1.0 / 97));
  CHECK(prime_reciprocal_sum(t, 90, 96).terms == 0);

  const auto wide = prime_reciprocal_sum(t, 1e3, 1e6);
  REQUIRE(wide.mertens_estimate.has_value());
  CHECK(*wide.mertens_estimate == doctest::Approx(std::numbers::ln2).epsilon(1e-12));
  CHECK(std::abs(wide.sum - std::numbers::ln2) < 0.05);

  CHECK_THROWS_AS(prime_reciprocal_sum(t, 10, 2), InvalidArgument);
  CHECK_THROWS_AS(prime_reciprocal_sum(t, 1, 2), InvalidArgument);
  CHECK_THROWS_AS(prime_reciprocal_sum(t, 2, 2e6), TableTooSmall);
}

TEST_CASE("sums over p^-1/2") {
  const PrimeTable t = build_prime_table(1000);
  const auto one = sqrt_prime_quantities(t, 1);
  CHECK(one.sqrt_sum == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(one.product == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)));
  CHECK(one.integral_bound == 0.0);
  CHECK(sqrt_prime_quantities(t, 2).integral_bound == 0.0);  // p_2 = 3

  CHECK(sqrt_prime_quantities(t, 3).sqrt_sum ==
        doctest::Approx(1 / std::sqrt(2.0) + 1 / std::sqrt(3.0) + 1 / std::sqrt(5.0)));

  const auto q25 = sqrt_prime_quantities(t, 25);
  CHECK(q25.product > 0.0);
  CHECK(std::log(1.0 / q25.product) < q25.sqrt_sum / (1.0 - 1.0 / std::sqrt(2.0)));

  CHECK_THROWS_AS(sqrt_prime_quantities(t, 0), InvalidArgument);
  CHECK_THROWS_AS(sqrt_prime_quantities(t, t.size() + 1), InvalidArgument);
}

TEST_CASE("integral bound matches the logarithmic integral") {
  // Substituting x = u^2 turns the integrand into 1 / ln u, so the integral
  // is li(sqrt p) - li(sqrt 3) with li(y) = Ei(ln y).
  const PrimeTable t = build_prime_table(10000);
  auto li = [](double y) { return boost::math::expint(std::log(y)); };
  for (std::size_t k : {3u, 10u, 100u, 1000u}) {
    const double p = static_cast<double>(t.prime(k));
    const double expected = li(std::sqrt(p)) - li(std::sqrt(3.0));
    CHECK(sqrt_prime_quantities(t, k).integral_bound == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("adaptive Simpson on a polynomial and an empty interval") {
  CHECK(adaptive_simpson([](double x) { return x * x * x; }, 0.0, 2.0, 1e-12) == doctest::Approx(4.0));
  CHECK(adaptive_simpson([](double) { return 1.0; }, 3.0, 1.0, 1e-9) == 0.0);
}
