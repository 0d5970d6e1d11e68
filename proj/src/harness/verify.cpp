#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "smoothbound/auxproblems.hpp"
#include "smoothbound/binning.hpp"
#include "smoothbound/bounds.hpp"
#include "smoothbound/errors.hpp"
#include "smoothbound/harness.hpp"
#include "smoothbound/lattice.hpp"
#include "smoothbound/oracles.hpp"
#include "smoothbound/primes.hpp"
#include "smoothbound/smooth.hpp"

namespace smoothbound {
namespace {

// Thrown by a check body to report a failed assertion with a reason.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CheckFailure(what);
}

std::string str(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300});
}

class Suite {
 public:
  explicit Suite(const VerifyOptions& opt) : opt_(opt), rng_(opt.seed) {}

  // body returns a detail string; CheckFailure marks a failed assertion.
  void run(const std::string& name, const std::string& formula, bool asserted,
           const std::function<std::string()>& body) {
    CheckOutcome out{name, formula, asserted, "", ""};
    try {
      out.detail = body();
      out.status = asserted ? "pass" : "reported";
    } catch (const CheckFailure& e) {
      out.status = asserted ? "fail" : "reported";
      out.detail = e.what();
    } catch (const ResourceLimit& e) {
      out.status = "skipped";
      out.detail = e.what();
    } catch (const std::exception& e) {
      out.status = asserted ? "fail" : "reported";
      out.detail = std::string("unexpected error: ") + e.what();
    }
    if (out.status == "fail") exit_code_ = 1;
    checks_.push_back(std::move(out));
  }

  std::mt19937_64& rng() { return rng_; }
  const VerifyOptions& options() const { return opt_; }
  VerifyResult finish() { return {std::move(checks_), exit_code_}; }

 private:
  VerifyOptions opt_;
  std::mt19937_64 rng_;
  std::vector<CheckOutcome> checks_;
  int exit_code_ = 0;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

void prime_checks(Suite& s, const PrimeTable& table) {
  s.run("prime-count", "prime table counts vs trial division", true, [&] {
    const auto oracle = oracle::primes_up_to(20000);
    std::size_t idx = 0;
    for (std::uint64_t x = 2; x <= 20000; ++x) {
      while (idx < oracle.size() && oracle[idx] <= x) ++idx;
      require(table.count(x) == idx, "pi(" + std::to_string(x) + ") mismatch");
    }
    return "pi(x) matches for 2 <= x <= 20000";
  });
  s.run("smoothness-index", "p_m < n <= p_{m+1}", true, [&] {
    require(smoothness_index(table, 11) == 4, "m(11) != 4");
    require(smoothness_index(table, 3) == 1, "m(3) != 1");
    require(smoothness_index(table, 100) == 25, "m(100) != 25");
    return "m(11)=4, m(3)=1, m(100)=25";
  });
  s.run("reciprocal-sum", "sum of 1/p over [a, b]", true, [&] {
    const auto primes = table.primes();
    for (std::size_t i = 5; i + 1 < 2000; i += 97) {
      const double a = 2.0, b = primes[i], b_next = primes[i + 1], c = 20000.0;
      const double split = prime_reciprocal_sum(table, a, b).sum + prime_reciprocal_sum(table, b_next, c).sum;
      require(close_rel(split, prime_reciprocal_sum(table, a, c).sum, 1e-12), "additivity failed");
    }
    require(close_rel(prime_reciprocal_sum(table, 2, 10).sum, 1.0 / 2 + 1.0 / 3 + 1.0 / 5 + 1.0 / 7, 1e-14),
            "S(2,10)");
    return "additive across adjacent intervals; S(2,10) exact";
  });
  s.run("sqrt-prime-sum", "sum of p^-1/2 and prod (1 - p^-1/2) vs integral", true, [&] {
    double prev_sum = 0.0, prev_prod = 1.0;
    const double base = sqrt_prime_quantities(table, 4).sqrt_sum;
    for (std::size_t k = 1; k <= 300; ++k) {
      const auto q = sqrt_prime_quantities(table, k);
      require(q.sqrt_sum > prev_sum, "sqrt_sum not increasing at k=" + std::to_string(k));
      require(q.product < prev_prod, "product not decreasing at k=" + std::to_string(k));
      if (table.prime(k) >= 10) {
        require(q.sqrt_sum - base <= 4.0 * q.integral_bound, "integral comparison at k=" + std::to_string(k));
      }
      prev_sum = q.sqrt_sum;
      prev_prod = q.product;
    }
    return "k = 1..300";
  });
}

void mertens_check(Suite& s) {
  s.run("mertens-window", "sum of 1/p over [1e3, 1e6] near ln 2", true, [&] {
    const PrimeTable big = build_prime_table(1'000'000);
    const auto r = prime_reciprocal_sum(big, 1e3, 1e6);
    require(std::abs(r.sum - std::numbers::ln2) < 0.05, "sum " + str(r.sum));
    return "sum = " + str(r.sum) + ", estimate = " + str(*r.mertens_estimate);
  });
}

void smooth_checks(Suite& s, const PrimeTable& table) {
  s.run("smooth-direct-vs-recursive", "psi recursion over powers of the largest prime", true, [&] {
    const LargestPrimeFactorSieve sieve(10000, s.options().guard);
    std::size_t cells = 0;
    for (int n = 3; n <= 30; ++n) {
      const std::size_t k = table.count_below(n);
      for (double N : {100.0, 1000.0, 10000.0}) {
        const auto rec = smooth_count_recursive(k, N, table, s.options().guard);
        const BigInt direct = sieve.count_smooth(n, N);
        require(rec.nu == direct, "n=" + std::to_string(n) + " N=" + str(N));
        if (N <= 1000.0) require(direct == oracle::smooth_count(n, N), "oracle n=" + std::to_string(n));
        ++cells;
      }
    }
    require(smooth_count_direct(3, 10, FactorBase::inclusive).nu == 6, "nu(3,10) != 6");
    require(smooth_count_recursive(2, 100, table).psi == 20, "psi(p_2, 100) != 20");
    // Strict base at n = p_4 = 7 is the inclusive base at p_3 = 5.
    require(smooth_count_recursive(3, 1000, table).psi == 86, "psi(7, 1000) != 86");
    return std::to_string(cells) + " cells plus spot values";
  });
  s.run("smooth-partition", "disjoint split by exponent of the largest prime", true, [&] {
    for (std::size_t k = 2; k <= 5; ++k) {
      const std::uint64_t p = table.prime(k);
      for (std::uint64_t N : {100u, 500u}) {
        const auto whole = oracle::smooth_set(p, N);
        std::multiset<std::uint64_t> pieces;
        for (std::uint64_t pj = 1; pj <= N; pj *= p) {
          for (auto x : oracle::smooth_set(table.prime(k - 1), N / pj)) pieces.insert(x * pj);
        }
        require(std::multiset<std::uint64_t>(whole.begin(), whole.end()) == pieces,
                "k=" + std::to_string(k) + " N=" + std::to_string(N));
      }
    }
    return "k = 2..5, N in {100, 500}";
  });
  s.run("preliminary-bound", "f(l, m) <= nu with equal-intercept simplex", true, [&] {
    const LargestPrimeFactorSieve sieve(1000000, s.options().guard);
    std::size_t checked = 0;
    for (int n = 7; n <= 50; ++n) {
      for (double N : {1e2, 1e3, 1e4, 1e5, 1e6}) {
        if (!(static_cast<double>(n) * n < N)) continue;
        BoundReport r = preliminary_lower_bound(n, N, table);
        const BigInt nu = sieve.count_smooth(n, N);
        require(BigInt(r.counts.at("f(l,m)")) <= nu, "f(l,m) > nu at n=" + std::to_string(n) + " N=" + str(N));
        const double l = r.inputs.at("l");
        const double envelope = std::numbers::ln2 + 0.5 * std::log(2.0 * std::numbers::pi * l);
        require(std::abs(r.bound_logs.at("stirling_l") - r.bound_logs.at("stirling_lnN")) <= envelope,
                "closed forms apart at n=" + std::to_string(n) + " N=" + str(N));
        ++checked;
      }
    }
    return std::to_string(checked) + " cells with n^2 < N";
  });
}

void lattice_checks(Suite& s) {
  s.run("lattice-vs-box", "lattice points in the simplex", true, [&] {
    const std::vector<double> pool = {0.5, 1.0, 1.7, 2.0, 3.3, 6.0};
    std::size_t instances = 0;
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<std::size_t> idx(m, 0);
      for (;;) {
        std::vector<double> a;
        for (auto i : idx) a.push_back(pool[i]);
        const SimplexSpec spec(a);
        const BigInt inc = count_simplex_lattice_points(spec, Boundary::inclusive, s.options().guard);
        require(inc == oracle::lattice_count_box(a, false), "inclusive mismatch");
        require(count_simplex_lattice_points(spec, Boundary::strict, s.options().guard) ==
                    oracle::lattice_count_box(a, true),
                "strict mismatch");
        require(simplex_factorial_lower_bound(spec).log_value < log_of(inc), "prod a / m! not below count");
        ++instances;
        std::size_t j = 0;
        while (j < m && ++idx[j] == pool.size()) idx[j++] = 0;
        if (j == m) break;
      }
    }
    for (int trial = 0; trial < 200; ++trial) {
      const auto m = static_cast<std::size_t>(1 + s.rng()() % 4);
      std::vector<double> a;
      for (std::size_t j = 0; j < m; ++j) a.push_back(uniform(s.rng(), 0.3, 8.0));
      const SimplexSpec spec(a);
      const BigInt inc = count_simplex_lattice_points(spec, Boundary::inclusive, s.options().guard);
      require(inc == oracle::lattice_count_box(a, false), "random inclusive mismatch");
      require(simplex_factorial_lower_bound(spec).log_value < log_of(inc), "random prod a / m! bound");
      ++instances;
    }
    return std::to_string(instances) + " simplices";
  });
  s.run("lattice-rational", "lattice points with rational intercepts", true, [&] {
    const std::vector<RationalBound> r = {{3, 2}, {5, 1}, {7, 3}};
    const BigInt exact = count_simplex_lattice_points(std::span<const RationalBound>(r));
    require(exact == oracle::lattice_count_box({1.5, 5.0, 7.0 / 3.0}, false), "rational inclusive");
    return "(3/2, 5, 7/3) = " + to_decimal(exact);
  });
  s.run("composition-identity", "sum_k f(k, m) = C(l + m, m)", true, [&] {
    for (std::uint64_t l = 0; l <= 30; ++l) {
      for (std::uint64_t m = 0; m <= 30; ++m) {
        require(cumulative_compositions(l, m, true) == binomial(l + m, m),
                "l=" + std::to_string(l) + " m=" + std::to_string(m));
      }
    }
    for (unsigned k = 0; k <= 6; ++k) {
      for (unsigned m = 1; m <= 4; ++m) {
        require(compositions_count(k, m) == oracle::compositions_by_enumeration(k, m), "f(k,m) enumeration");
      }
    }
    return "l, m <= 30";
  });
  s.run("stirling-bracket", "St(z) < z! < 2 St(z)", true, [&] {
    for (unsigned z = 1; z <= 170; ++z) {
      const double lf = log_of(oracle::factorial(z));
      const double ls = log_stirling_value(z);
      require(ls < lf && lf < ls + std::numbers::ln2, "z=" + std::to_string(z));
    }
    return "z = 1..170";
  });
}

void binning_checks(Suite& s, const PrimeTable& table) {
  s.run("sandwich", "nu_lower <= nu <= nu_upper", true, [&] {
    ExperimentGrid g;
    g.n_values = {10, 20};
    g.N_values = {2.5, 1e3, 1e4};
    g.options["guard"] = static_cast<double>(s.options().guard);
    const CommandResult r = run_sandwich(g);
    std::size_t ok = 0;
    for (const auto& row : r.table.rows()) {
      const std::string st = row.at("status").get<std::string>();
      if (st == "skipped") throw ResourceLimit("sandwich cell skipped");
      require(st == "ok", "cell n=" + str(row.at("n").get<double>()) + " N=" + str(row.at("N").get<double>()));
      ++ok;
    }
    return std::to_string(ok) + " cells";
  });
  s.run("upper-bar-xspace", "nu_upper as a count of exponent vectors", true, [&] {
    for (auto [n, N] : {std::pair{10.0, 100.0}, std::pair{20.0, 1000.0}}) {
      const BinningSpec spec = build_binning(n, table);
      std::vector<double> per_prime;
      for (auto p : table.primes()) {
        if (p >= n) break;
        per_prime.push_back(spec.weights_lower[*bin_of(spec, p)]);
      }
      const auto bar = nu_upper_bar(n, N, spec, s.options().guard);
      require(bar.value == oracle::weighted_count_box(per_prime, std::log(N)),
              "n=" + str(n) + " N=" + str(N));
    }
    return "(10, 100) and (20, 1000)";
  });
  s.run("bin-product", "K(z) = prod f(z_i, m_i)", true, [&] {
    const BinningSpec spec = build_binning(20, table);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::uint64_t> z;
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < spec.prime_counts.size(); ++i) {
        const std::uint64_t zi = s.rng()() % 4;
        z.push_back(zi);
        expected *= oracle::compositions_by_enumeration(static_cast<unsigned>(zi),
                                                        static_cast<unsigned>(spec.prime_counts[i]));
      }
      require(k_count(z, spec) == expected, "K mismatch");
    }
    return "50 random z at n = 20";
  });
}

void aux_checks(Suite& s) {
  s.run("aux-F-recursion", "F by recursion vs flat enumeration", true, [&] {
    for (double c : {1.5, 2.5, 3.3, 4.8}) {
      for (double M : {2.0, 5.0, 10.0, 20.0}) {
        const AuxInstance inst = make_aux_instance(c, M, AuxKind::P);
        const double rec = eval_F(inst, s.options().guard).log_value;
        const long double flat = oracle::weighted_exp_sum_flat(inst.bases, inst.weights, M, false);
        require(close_rel(std::exp(rec), static_cast<double>(flat), 1e-9), "c=" + str(c) + " M=" + str(M));
      }
    }
    const double hand = 1.0 + (std::numbers::e - 1.0) * std::exp(1.5) / 1.5;
    const double got = std::exp(eval_F(make_aux_instance(1.5, 3, AuxKind::P)).log_value);
    require(close_rel(got, hand, 1e-12), "F(1.5, 3)");
    return "16 cells; F(1.5, 3) = " + str(got);
  });
  s.run("aux-G-enumeration", "G with e^{z^2/m} factors vs flat enumeration", true, [&] {
    for (double c : {1.5, 2.5, 3.3, 4.5}) {
      for (double M : {2.0, 5.0, 10.0}) {
        const AuxInstance inst = make_aux_instance(c, M, AuxKind::Q);
        const double rec = eval_G(inst, s.options().guard).log_value;
        const long double flat = oracle::weighted_exp_sum_flat(inst.bases, inst.weights, M, true);
        require(close_rel(rec, std::log(static_cast<double>(flat)), 1e-9), "c=" + str(c) + " M=" + str(M));
      }
    }
    return "12 cells";
  });
  s.run("aux-structure", "F and G monotone in M; nested bases; G support dominates F", true, [&] {
    for (double c : {2.5, 3.3, 4.5}) {
      double prev_F = -INFINITY, prev_G = -INFINITY;
      for (double M = 1.5; M <= 12.0; M += 0.5) {
        const double F = eval_F(make_aux_instance(c, M, AuxKind::P)).log_value;
        const double G = eval_G(make_aux_instance(c, M, AuxKind::Q)).log_value;
        require(F >= prev_F && G >= prev_G, "monotonicity at c=" + str(c) + " M=" + str(M));
        require(eval_plain_sum(make_aux_instance(c, M, AuxKind::Q)).log_value >= F - 1e-12,
                "Q-support sum below F at c=" + str(c));
        prev_F = F;
        prev_G = G;
      }
      const auto outer = aux_bases(c, 3);
      const auto inner = aux_bases(c - 1.0, 2);
      require(close_rel(outer[1], inner[0], 1e-15) && close_rel(outer[2], inner[1], 1e-15), "nested bases");
    }
    return "c in {2.5, 3.3, 4.5}";
  });
  s.run("G-vs-2cF", "G <= 2^c F under z^2/m < ln 2", true, [&] {
    std::size_t asserted = 0, flagged = 0;
    for (double c : {4.5, 5.5, 6.7}) {
      for (double M : {2.0, 5.0, 9.0}) {
        if (M > std::exp(c / 2.0)) continue;
        const BoundReport r = check_G_vs_F(c, M, s.options().guard);
        if (r.flags.at("2^c*F") == CheckStatus::asserted) {
          require(r.holds("2^c*F"), "c=" + str(c) + " M=" + str(M));
          ++asserted;
        } else {
          ++flagged;
        }
      }
    }
    return std::to_string(asserted) + " asserted, " + std::to_string(flagged) + " premise-flagged";
  });
  s.run("F-psi-anchor", "F(ln n, ln N) vs psi(n, N)", false, [&] {
    const LargestPrimeFactorSieve sieve(10000);
    std::ostringstream os;
    bool all = true;
    for (double n : {10.0, 20.0}) {
      for (double N : {1e3, 1e4}) {
        const double F = eval_F(make_aux_instance(std::log(n), std::log(N), AuxKind::P)).log_value;
        const double psi = static_cast<double>(sieve.count_smooth(n, N)) + 1.0;
        all = all && F <= std::log(psi);
        os << "(" << n << "," << N << "): lnF=" << str(F) << " ln psi=" << str(std::log(psi)) << " ";
      }
    }
    if (!all) throw CheckFailure(os.str());
    return os.str();
  });
}

void bounds_checks(Suite& s) {
  s.run("h-closed-form", "closed-form maximum of H and its maximizer", true, [&] {
    const int samples = 100000;
    for (int tuple = 0; tuple < 100; ++tuple) {
      const double c = uniform(s.rng(), 5.0, 50.0);
      const double M = uniform(s.rng(), 2.0 * c, std::exp(c / 2.0));
      const double gamma = uniform(s.rng(), 0.0, 5.0);
      const double a = uniform(s.rng(), 0.0, 2.0);
      const HMax h = h_max_closed_form(c, M, gamma, a);
      const double K = M / c;
      double best = -INFINITY, arg = 0.0;
      for (int i = 0; i <= samples; ++i) {
        const double z = std::min(K, K * i / samples);
        const double v = h_function(z, c, M, gamma, a);
        if (v > best) {
          best = v;
          arg = z;
        }
      }
      require(h.max_value >= best - 1e-9 * std::abs(best), "sample above the closed form");
      require(std::abs(h.max_value - best) <= 1e-5 * std::abs(h.max_value), "best sample too far below");
      require(std::abs(arg - h.t0 * K) <= K / samples + 1e-12, "maximizer off grid step");
      const double z = h.t0 * K;
      require(close_rel(h_function(z, c, M, gamma, a),
                        oracle::step_exponent(z, c, M, gamma, a - std::log(std::numbers::e - 1.0)), 1e-9),
              "H differs from the A + E decomposition");
    }
    const HMax at_a = h_max_closed_form(10, 100, 1.3, 1.3);
    require(std::abs(at_a.f_gamma - std::numbers::ln2) <= 1e-12 && std::abs(at_a.t0 - 0.5) <= 1e-12,
            "f(a) or t0(a)");
    return "100 tuples x 1e5 samples";
  });
  s.run("phi-identity", "max_t phi(t) = ln(1 + e^{a - gamma})", true, [&] {
    for (double gamma : {0.0, 0.7, 2.0}) {
      for (double a : {0.0, 1.0, a_star()}) {
        double best = -INFINITY;
        for (int i = 0; i <= 100000; ++i) best = std::max(best, phi_function(i / 100000.0, gamma, a));
        require(std::abs(best - std::log1p(std::exp(a - gamma))) <= 1e-8, "gamma=" + str(gamma));
      }
    }
    return "9 (gamma, a) pairs";
  });
  s.run("seed-coefficient", "B(kappa, gamma) e^{e^{kappa+gamma}/(kappa+1)} < 1", true, [&] {
    require(std::abs(seed_coefficient(0, 0) - std::exp(-1.0)) < 1e-15, "B(0,0)");
    for (double kappa : {0.5, 1.0, 2.0, 3.0}) {
      for (double gamma : {0.0, 1.0, 2.0}) {
        require(seed_coefficient(kappa, gamma) * std::exp(std::exp(kappa + gamma) / (kappa + 1.0)) < 1.0,
                "kappa=" + str(kappa));
      }
    }
    return "kappa in {0.5,1,2,3}, gamma in {0,1,2}";
  });
  s.run("rhs-ordering", "lower right-hand side <= upper right-hand side", true, [&] {
    for (double n : {20.0, 50.0, 100.0, 1000.0}) {
      for (double N : {1e4, 1e6, 1e9}) {
        const double lo = lower_bound_rhs(n, N, a_star(), 0.0);
        const double hi = upper_bound_rhs(n, N, a_star(), false).value;
        require(lo <= hi, "n=" + str(n) + " N=" + str(N));
      }
    }
    return "12 cells";
  });
  s.run("trace-contraction", "ln M' < ln M (1 - e^{alpha/2}/c) along the lower iteration", true, [&] {
    const double alpha = 0.1, beta = 0.4;
    std::size_t asserted = 0, outside = 0, outside_failed = 0;
    for (double c : {10.5, 20.5, 30.5, 50.5}) {
      for (double lnM : {2.0, 0.2 * c, 0.4 * c}) {
        const auto trace = iterate_lower_trace(c, std::exp(lnM), alpha, beta, 500);
        for (const auto& st : trace.steps) {
          if (!st.in_domain) continue;
          // Sufficient condition for the contraction, derived from the step fraction.
          const double h = std::exp(-alpha / 2.0);
          if (st.c * (1.0 - h) + h > std::exp(alpha / 2.0) * std::log(st.M)) {
            require(st.contraction_held, "c=" + str(st.c) + " M=" + str(st.M));
            ++asserted;
          } else {
            ++outside;
            outside_failed += st.contraction_held ? 0 : 1;
          }
        }
      }
    }
    return std::to_string(asserted) + " steps asserted; " + std::to_string(outside_failed) + " of " +
           std::to_string(outside) + " in-domain steps outside the sufficient condition failed";
  });
  s.run("upper-step", "one induction step of the upper bound", false, [&] {
    std::size_t held = 0, total = 0;
    for (double c : {5.5, 8.5, 12.5, 20.5}) {
      for (double M : {3.0 * default_upper_step_K() * c, std::exp((c + 0.5) / 2.0)}) {
        if (!(M > std::numbers::e)) continue;
        const auto u = upper_step_check(c, M, a_star(), 1.1, default_upper_step_K());
        held += u.inequality_held ? 1 : 0;
        ++total;
      }
    }
    const std::string d = std::to_string(held) + " of " + std::to_string(total) + " steps held";
    if (held != total) throw CheckFailure(d);
    return d;
  });
}

}  // namespace

VerifyResult run_verify(const VerifyOptions& options) {
  Suite s(options);
  const PrimeTable table = build_prime_table(20000);
  prime_checks(s, table);
  mertens_check(s);
  smooth_checks(s, table);
  lattice_checks(s);
  binning_checks(s, table);
  aux_checks(s);
  bounds_checks(s);
  return s.finish();
}

void print_verify(const VerifyResult& result, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& c : result.checks) width = std::max(width, c.name.size());
  for (const auto& c : result.checks) {
    out << std::left << std::setw(9) << ("[" + c.status + "]") << ' ' << std::setw(static_cast<int>(width))
        << c.name << "  " << c.detail << '\n';
  }
  out << "\ncoverage\n";
  std::map<std::string, std::vector<const CheckOutcome*>> by_formula;
  for (const auto& c : result.checks) by_formula[c.formula].push_back(&c);
  for (const auto& [formula, list] : by_formula) {
    out << "  " << formula << ":";
    for (const auto* c : list) out << ' ' << c->name << (c->asserted ? "" : " (reported)") << " [" << c->status << "]";
    out << '\n';
  }
  std::size_t pass = 0, fail = 0, skipped = 0, reported = 0;
  for (const auto& c : result.checks) {
    pass += c.status == "pass";
    fail += c.status == "fail";
    skipped += c.status == "skipped";
    reported += c.status == "reported";
  }
  out << "\n" << pass << " passed, " << fail << " failed, " << skipped << " skipped, " << reported
      << " reported\n";
}

}  // namespace smoothbound
