#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "smoothbound/errors.hpp"
#include "smoothbound/lattice.hpp"
#include "smoothbound/oracles.hpp"

using namespace smoothbound;

namespace {
BigInt count(std::vector<double> a, Boundary b = Boundary::inclusive) {
  return count_simplex_lattice_points(SimplexSpec(std::move(a)), b);
}
}  // namespace

TEST_CASE("simplex spec validation") {
  CHECK_THROWS_AS(SimplexSpec({}), InvalidArgument);
  CHECK_THROWS_AS(SimplexSpec({1.0, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(SimplexSpec({-1.0}), InvalidArgument);
  CHECK_THROWS_AS(SimplexSpec({INFINITY}), InvalidArgument);
  CHECK_THROWS_AS(SimplexSpec({NAN}), InvalidArgument);
}

TEST_CASE("small simplices") {
  CHECK(count({3.0}) == 4);
  CHECK(count({5.5}) == 6);
  CHECK(count({0.5}) == 1);
  CHECK(count({2, 2}) == 6);
  CHECK(count({1, 1, 1}) == 4);
  // Strict drops the slanted face.
  CHECK(count({3.0}, Boundary::strict) == 3);
  CHECK(count({2, 2}, Boundary::strict) == 3);
  CHECK(count({1, 1, 1}, Boundary::strict) == 1);
  CHECK(count({0.5}, Boundary::strict) == 1);
}

TEST_CASE("points on the face are decided by the slack rule") {
  // 1/3 + 2/3 is not exactly 1 in binary floating point.
  CHECK(count({3.0, 1.5}) == oracle::lattice_count_box({3.0, 1.5}, false));
  CHECK(count({3.0, 1.5}, Boundary::strict) == oracle::lattice_count_box({3.0, 1.5}, true));
}

TEST_CASE("rational intercepts are exact") {
  const std::vector<RationalBound> r = {{2, 1}, {2, 1}};
  CHECK(count_simplex_lattice_points(std::span<const RationalBound>(r)) == 6);
  CHECK(count_simplex_lattice_points(std::span<const RationalBound>(r), Boundary::strict) == 3);
  const std::vector<RationalBound> thirds = {{10, 3}, {5, 3}};
  CHECK(count_simplex_lattice_points(std::span<const RationalBound>(thirds)) ==
        oracle::lattice_count_box({10.0 / 3, 5.0 / 3}, false));
  const std::vector<RationalBound> bad = {{1, 0}};
  CHECK_THROWS_AS(count_simplex_lattice_points(std::span<const RationalBound>(bad)), InvalidArgument);
  const std::vector<RationalBound> neg = {{-1, 2}};
  CHECK_THROWS_AS(count_simplex_lattice_points(std::span<const RationalBound>(neg)), InvalidArgument);
}

TEST_CASE("guard raises with a partial lower estimate") {
  try {
    count_simplex_lattice_points(SimplexSpec({200, 200, 200}), Boundary::inclusive, 1000);
    FAIL("expected ResourceLimit");
  } catch (const ResourceLimit& e) {
    REQUIRE(e.partial_lower_estimate().has_value());
    CHECK(*e.partial_lower_estimate() <= binomial(203, 3));
  }
}

TEST_CASE("large counts stay exact") {
  // Equal intercepts l give C(l + m, m).
  CHECK(count({60, 60, 60, 60}) == binomial(64, 4));
  CHECK(count({1000, 1000}) == binomial(1002, 2));
}

TEST_CASE("factorial lower bound") {
  CHECK(simplex_factorial_lower_bound(SimplexSpec({2, 2})).value == doctest::Approx(2.0));
  CHECK(simplex_factorial_lower_bound(SimplexSpec({1, 1, 1})).value == doctest::Approx(1.0 / 6));
  CHECK(simplex_factorial_lower_bound(SimplexSpec({5.5})).value == doctest::Approx(5.5));
  std::vector<double> huge(200, 1e10);
  const ScaledReal big = simplex_factorial_lower_bound(SimplexSpec(huge));
  CHECK(big.log_only);
  CHECK(big.log_value == doctest::Approx(200 * std::log(1e10) - std::lgamma(201.0)));
}

TEST_CASE("compositions") {
  CHECK(compositions_count(2, 3) == 6);
  CHECK(compositions_count(5, 4) == 56);
  CHECK(compositions_count(5, 4) == oracle::compositions_by_enumeration(5, 4));
  for (unsigned k = 0; k < 10; ++k) CHECK(compositions_count(k, 1) == 1);
  CHECK(compositions_count(0, 0) == 1);
  CHECK(compositions_count(3, 0) == 0);
  CHECK(cumulative_compositions(2, 3, true) == 10);
  CHECK(cumulative_compositions(2, 3, false) == 9);
  CHECK(cumulative_compositions(0, 5, true) == 1);
  CHECK(cumulative_compositions(7, 0, true) == 1);
  CHECK(cumulative_compositions(7, 3, true) == count({7, 7, 7}));
}

TEST_CASE("binomial and factorial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == oracle::factorial(20));
  CHECK(factorial(50) == oracle::factorial(50));
}

TEST_CASE("Stirling values") {
  CHECK(stirling_value(1) == doctest::Approx(std::sqrt(2 * std::numbers::pi) / std::numbers::e));
  CHECK(stirling_value(10) == doctest::Approx(3598695.6).epsilon(1e-7));
  const double ratio20 = std::exp(log_of(oracle::factorial(20)) - log_stirling_value(20));
  CHECK(ratio20 > 1.0);
  CHECK(ratio20 < 1.005);
  CHECK(log_stirling_value(500) == doctest::Approx(0.5 * std::log(1000 * std::numbers::pi) + 500 * (std::log(500.0) - 1)));
  CHECK_THROWS_AS(stirling_value(0), InvalidArgument);
  CHECK_THROWS_AS(log_stirling_value(-1), InvalidArgument);
}
