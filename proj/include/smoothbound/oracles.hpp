#pragma once

// Brute-force reference computations. Nothing here calls into the main
// library; every routine takes the slow, obvious route so it can serve as an
// independent check.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace smoothbound::oracle {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t x);
std::uint64_t prime_count(std::uint64_t x);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

std::uint64_t largest_prime_factor(std::uint64_t k);

// #{2 <= k <= N : every prime factor of k is < n (or <= n)}.
std::uint64_t smooth_count(double n, double N, bool inclusive = false);

// Every k in [1, N] whose prime factors are all <= pmax, ascending.
std::vector<std::uint64_t> smooth_set(std::uint64_t pmax, std::uint64_t N);

// Nonnegative integer points with sum z_j / a_j <= 1 (+1e-12) or < 1 (-1e-12),
// by scanning the whole bounding box.
std::uint64_t lattice_count_box(const std::vector<double>& bounds, bool strict);

// m-tuples of nonnegative integers summing to k, by enumeration.
std::uint64_t compositions_by_enumeration(unsigned k, unsigned m);

BigInt factorial(unsigned n);

// Points x >= 0 with sum_j weights[j] x_j <= budget (+1e-12), by box scan.
std::uint64_t weighted_count_box(const std::vector<double>& weights, double budget);

// sum over z >= 0 with sum_i weights[i] z_i < budget (-1e-12) of
// prod bases[i]^{z_i} e^{corr z_i^2 / bases[i]} / z_i!, accumulated as a flat
// list of terms in extended precision.
long double weighted_exp_sum_flat(const std::vector<double>& bases,
                                  const std::vector<double>& weights, double budget,
                                  bool correction);

// A + E of the induction step, with E = z ln m0 - z ln z + b z and
// m0 = (e-1) e^c / c.
double step_exponent(double z, double c, double M, double gamma, double b);

}  // namespace smoothbound::oracle
