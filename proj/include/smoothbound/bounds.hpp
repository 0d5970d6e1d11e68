#pragma once

#include <string>
#include <vector>

namespace smoothbound {

// a* = 1 + ln(e - 1).
double a_star();

// Some displayed bound forms divide by c, others by c + 1.
enum class Denominator { c, c_plus_1 };

// M (1 - ln M / d + gamma / d) with d = c or c + 1.
double fform_exponent(double c, double M, double gamma, Denominator denom);

// H(z) = M(1 + g/c) + (a - g) z - (M/c) ln c - z ln z - (M/c - z) ln(M/c - z)
// on 0 <= z <= M/c, with x ln x -> 0 at the endpoints.
double h_function(double z, double c, double M, double gamma, double a);

// phi(t) = (a - g) t - t ln t - (1 - t) ln(1 - t) on [0, 1].
double phi_function(double t, double gamma, double a);

struct HMax {
  double max_value;  // M (1 - ln M / c + (gamma + f) / c)
  double t0;         // 1 / (1 + e^{gamma - a}); the maximizer is z = t0 M / c
  double f_gamma;    // ln(1 + e^{a - gamma})
};

HMax h_max_closed_form(double c, double M, double gamma, double a);

enum class Schedule { lower, upper };

// lower: offset + ln c - ln ln M (offset = a - alpha)
// upper: offset + ln c + ln ln c - ln ln M (offset = a_bar)
double gamma_schedule(double c, double M, Schedule mode, double offset);

// 1 <= M <= e^{beta c}
bool in_domain_beta(double c, double M, double beta);
// e^{c/2} < M < e^{(c+1)/2}
bool in_upper_seed_strip(double c, double M);

struct TraceStep {
  double c;
  double M;
  double gamma;  // lower schedule at (c, M) with a = a*
  double t;      // step fraction; the next M is M (1 - t)
  bool in_domain;
  // ln M' < ln M (1 - e^{alpha/2} / c); equivalently the ratio form
  // ln M' / (c - 1) < (ln M / c)(c - e^{alpha/2}) / (c - 1).
  bool contraction_held;
};

struct IterationTrace {
  std::vector<TraceStep> steps;
  double alpha = 0.0;
  double beta = 0.0;
  double final_c = 0.0;
  double final_M = 0.0;
  bool final_in_domain = false;
  std::string stop_reason;
};

// Follows (c, M) -> (c - 1, M (1 - t)) with t = 1 / (1 + e^{-alpha} (c - 1) / ln M)
// until c <= 2, M <= e, or max_steps.
IterationTrace iterate_lower_trace(double c, double M, double alpha, double beta, int max_steps);

// 1 - (ln ln N + ln ln ln N)/ln n + (a + ln ln n + delta)/ln n
double lower_bound_rhs(double n, double N, double a, double delta);

enum class Precondition { inside, boundary, outside };
std::string to_string(Precondition p);

struct UpperRhs {
  double value;
  Precondition sqrt_condition;  // N < e^{sqrt n}
};

// 1 - (ln ln N + ln ln ln N)/ln n + (a_bar + ln ln n + ln ln ln n)/ln n,
// plus ln n ln(2 ln N) / ln N when with_tail is set.
UpperRhs upper_bound_rhs(double n, double N, double a_bar, bool with_tail);

struct LogSquareValues {
  double rhs;                 // 1 - ln ln N / ln n + C / ln n
  double n;                   // alpha (ln N)^2
  double sqrt_smooth_log_bound;  // ln N / 2 + C sqrt(n) / ln n
};

LogSquareValues log_square_rhs(double N, double alpha, double C);

// ln N / 2 + C sqrt(p) / ln p, the log of the product-form upper bound.
double sqrt_smooth_log_bound(double N, double p, double C);

struct LnkLadder {
  double lnk;  // k-fold iterated log
  double Lnk;  // sum_{j=2}^k of the j-fold iterated logs
};

LnkLadder lnk_ladder(double x, int k);

// Iterated-log generalizations of the lower/upper right-hand sides; k = 3
// gives lower_bound_rhs / upper_bound_rhs (without tail).
double ladder_lower_rhs(double n, double N, int k, double a, double delta);
double ladder_upper_rhs(double n, double N, int k, double a);

// Exponents of the auxiliary-problem bounds:
//   lower: M (1 - (ln M + ln ln M)/d + (a + ln c + delta)/d)
//   upper: M (1 - (ln M + ln ln M)/d + (a_bar + ln c + ln ln c)/d)
double aux_lower_exponent(double c, double M, double a, double delta, Denominator denom);
double aux_upper_exponent(double c, double M, double a_bar, Denominator denom);

// One induction step of the upper-bound argument at (c, M): solves for
// M0 = M (1 - t0) self-consistently and compares both sides of
// (g0 + f(g0)) / c < ln M / (c (c+1)) + g' / (c+1).
struct UpperStepCheck {
  double gamma0;
  double gamma_prime;
  double M0;
  double t0;
  double lhs;
  double rhs;
  bool inequality_held;
  bool f_bound_held;     // f(g0)/c < q ln M / (c (c+1) ln c)
  bool premise_M_gt_Kc;  // M > K c
};

double default_upper_step_K();
UpperStepCheck upper_step_check(double c, double M, double a_bar, double q, double K);

}  // namespace smoothbound
