#include "smoothbound/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"

namespace smoothbound {
namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

double denominator(double c, Denominator d) { return d == Denominator::c ? c : c + 1.0; }

// ln ln x, requiring x > e so the result is positive and ln ln ln x may follow.
double loglog_checked(double x, const char* what) {
  if (!(x > 1.0)) throw DomainError(std::string(what) + " must exceed 1 for ln ln");
  return std::log(std::log(x));
}

}  // namespace

double a_star() { return 1.0 + std::log(std::numbers::e - 1.0); }

double fform_exponent(double c, double M, double gamma, Denominator denom) {
  if (!(M > 0.0)) throw DomainError("exponent form needs M > 0");
  const double d = denominator(c, denom);
  return M * (1.0 - std::log(M) / d + gamma / d);
}

double h_function(double z, double c, double M, double gamma, double a) {
  if (!(c > 1.0) || !(M > c)) throw DomainError("H needs c > 1 and M > c");
  const double K = M / c;
  if (z < 0.0 || z > K) throw DomainError("H evaluated outside [0, M/c]");
  return M * (1.0 + gamma / c) + (a - gamma) * z - K * std::log(c) - xlogx(z) - xlogx(K - z);
}

double phi_function(double t, double gamma, double a) {
  if (t < 0.0 || t > 1.0) throw DomainError("phi evaluated outside [0, 1]");
  return (a - gamma) * t - xlogx(t) - xlogx(1.0 - t);
}

HMax h_max_closed_form(double c, double M, double gamma, double a) {
  if (!(c > 1.0) || !(M > c)) throw DomainError("H maximum needs c > 1 and M > c");
  HMax out;
  // log1p(exp(x)) without overflow for large x.
  const double x = a - gamma;
  out.f_gamma = x > 30.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
  out.t0 = 1.0 / (1.0 + std::exp(gamma - a));
  out.max_value = fform_exponent(c, M, gamma + out.f_gamma, Denominator::c);
  return out;
}

double gamma_schedule(double c, double M, Schedule mode, double offset) {
  if (!(M > std::numbers::e)) throw InvalidArgument("gamma schedule needs M > e");
  if (!(c > 0.0)) throw InvalidArgument("gamma schedule needs c > 0");
  const double lnln_M = std::log(std::log(M));
  if (mode == Schedule::lower) return offset + std::log(c) - lnln_M;
  if (!(c > std::numbers::e)) throw InvalidArgument("upper gamma schedule needs c > e");
  return offset + std::log(c) + std::log(std::log(c)) - lnln_M;
}

bool in_domain_beta(double c, double M, double beta) {
  return M >= 1.0 && std::log(M) <= beta * c;
}

bool in_upper_seed_strip(double c, double M) {
  const double ln_M = std::log(M);
  return ln_M > c / 2.0 && ln_M < (c + 1.0) / 2.0;
}

IterationTrace iterate_lower_trace(double c, double M, double alpha, double beta, int max_steps) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw InvalidArgument("trace needs alpha, beta > 0");
  if (!(c > 2.0) || !(M > std::numbers::e)) throw InvalidArgument("trace needs c > 2, M > e");
  IterationTrace trace;
  trace.alpha = alpha;
  trace.beta = beta;
  const double shrink = std::exp(alpha / 2.0);
  int steps = 0;
  for (;;) {
    if (!(c > 2.0)) {
      trace.stop_reason = "c <= 2";
      break;
    }
    if (!(M > std::numbers::e)) {
      trace.stop_reason = "M <= e";
      break;
    }
    if (steps >= max_steps) {
      trace.stop_reason = "max steps";
      break;
    }
    const double ln_M = std::log(M);
    // gamma0 - a = -alpha + ln(c - 1) - ln ln M
    const double t = 1.0 / (1.0 + std::exp(-alpha) * (c - 1.0) / ln_M);
    const double next_M = M * (1.0 - t);
    TraceStep step;
    step.c = c;
    step.M = M;
    step.gamma = gamma_schedule(c, M, Schedule::lower, a_star() - alpha);
    step.t = t;
    step.in_domain = in_domain_beta(c, M, beta);
    step.contraction_held = std::log(next_M) < ln_M * (1.0 - shrink / c);
    trace.steps.push_back(step);
    c -= 1.0;
    M = next_M;
    ++steps;
  }
  trace.final_c = c;
  trace.final_M = M;
  trace.final_in_domain = in_domain_beta(c, M, beta);
  return trace;
}

double lower_bound_rhs(double n, double N, double a, double delta) {
  if (!(n > std::numbers::e)) throw InvalidArgument("lower right-hand side needs n > e");
  if (!(N > std::exp(std::numbers::e))) throw InvalidArgument("lower right-hand side needs N > e^e");
  const double ln_n = std::log(n);
  const double lnln_N = std::log(std::log(N));
  return 1.0 - (lnln_N + std::log(lnln_N)) / ln_n + (a + std::log(ln_n) + delta) / ln_n;
}

std::string to_string(Precondition p) {
  switch (p) {
    case Precondition::inside:
      return "inside";
    case Precondition::boundary:
      return "boundary";
    case Precondition::outside:
      return "outside";
  }
  return "outside";
}

UpperRhs upper_bound_rhs(double n, double N, double a_bar, bool with_tail) {
  const double ee = std::exp(std::numbers::e);
  if (!(n > ee)) throw InvalidArgument("upper right-hand side needs n > e^e");
  if (!(N > ee)) throw InvalidArgument("upper right-hand side needs N > e^e");
  const double ln_n = std::log(n);
  const double ln_N = std::log(N);
  const double lnln_N = std::log(ln_N);
  const double lnln_n = std::log(ln_n);
  UpperRhs out;
  out.value = 1.0 - (lnln_N + std::log(lnln_N)) / ln_n + (a_bar + lnln_n + std::log(lnln_n)) / ln_n;
  if (with_tail) out.value += ln_n * std::log(2.0 * ln_N) / ln_N;
  const double root = std::sqrt(n);
  if (std::abs(ln_N - root) <= 1e-9 * root) {
    out.sqrt_condition = Precondition::boundary;
  } else {
    out.sqrt_condition = ln_N < root ? Precondition::inside : Precondition::outside;
  }
  return out;
}

LogSquareValues log_square_rhs(double N, double alpha, double C) {
  if (!(N > std::numbers::e)) throw InvalidArgument("log-square bound needs N > e");
  if (!(alpha > 0.0)) throw InvalidArgument("log-square bound needs alpha > 0");
  if (!(C > 1.0)) throw InvalidArgument("log-square bound needs C > 1");
  const double ln_N = std::log(N);
  LogSquareValues out;
  out.n = alpha * ln_N * ln_N;
  if (!(out.n > 1.0)) throw DomainError("log-square bound induced n = alpha (ln N)^2 must exceed 1");
  const double ln_n = std::log(out.n);
  out.rhs = 1.0 - std::log(ln_N) / ln_n + C / ln_n;
  out.sqrt_smooth_log_bound = sqrt_smooth_log_bound(N, out.n, C);
  return out;
}

double sqrt_smooth_log_bound(double N, double p, double C) {
  if (!(p > 1.0) || !(N > 0.0)) throw DomainError("sqrt-smooth bound needs p > 1, N > 0");
  return 0.5 * std::log(N) + C * std::sqrt(p) / std::log(p);
}

LnkLadder lnk_ladder(double x, int k) {
  if (k < 2) throw InvalidArgument("iterated-log ladder needs k >= 2");
  LnkLadder out{x, 0.0};
  for (int depth = 1; depth <= k; ++depth) {
    if (!(out.lnk > 0.0)) {
      throw InvalidArgument("iterated log is not positive at depth " + std::to_string(depth - 1));
    }
    out.lnk = std::log(out.lnk);
    if (depth >= 2) out.Lnk += out.lnk;
  }
  if (!(out.lnk > 0.0)) {
    throw InvalidArgument("iterated log is not positive at depth " + std::to_string(k));
  }
  return out;
}

double ladder_lower_rhs(double n, double N, int k, double a, double delta) {
  const double ln_n = std::log(n);
  return 1.0 - lnk_ladder(N, k).Lnk / ln_n + (a + lnk_ladder(n, k - 1).Lnk + delta) / ln_n;
}

double ladder_upper_rhs(double n, double N, int k, double a) {
  const double ln_n = std::log(n);
  return 1.0 - lnk_ladder(N, k).Lnk / ln_n + (a + lnk_ladder(n, k).Lnk) / ln_n;
}

double aux_lower_exponent(double c, double M, double a, double delta, Denominator denom) {
  const double lnln_M = loglog_checked(M, "M");
  const double d = denominator(c, denom);
  return M * (1.0 - (std::log(M) + lnln_M) / d + (a + std::log(c) + delta) / d);
}

double aux_upper_exponent(double c, double M, double a_bar, Denominator denom) {
  const double lnln_M = loglog_checked(M, "M");
  const double lnln_c = loglog_checked(c, "c");
  const double d = denominator(c, denom);
  return M * (1.0 - (std::log(M) + lnln_M) / d + (a_bar + std::log(c) + lnln_c) / d);
}

double default_upper_step_K() { return std::exp(2.0) * (a_star() + 1.0); }

UpperStepCheck upper_step_check(double c, double M, double a_bar, double q, double K) {
  if (!(c - 1.0 > std::numbers::e)) throw DomainError("upper step needs c > e + 1");
  if (!(M > std::numbers::e)) throw DomainError("upper step needs M > e");
  const double as = a_star();
  UpperStepCheck out{};
  out.gamma_prime = gamma_schedule(c, M, Schedule::upper, a_bar);
  // Fixed point M0 = M (1 - t0(gamma0(M0))).
  double M0 = M;
  for (int it = 0; it < 200; ++it) {
    if (!(M0 > std::numbers::e)) throw DomainError("upper step: M0 fell below e");
    const double g0 = gamma_schedule(c - 1.0, M0, Schedule::upper, a_bar);
    const double t0 = 1.0 / (1.0 + std::exp(g0 - as));
    const double next = M * (1.0 - t0);
    const bool done = std::abs(next - M0) <= 1e-13 * M;
    M0 = next;
    out.gamma0 = g0;
    out.t0 = t0;
    if (done) break;
  }
  out.M0 = M0;
  const double f0 = std::log1p(std::exp(as - out.gamma0));
  out.lhs = (out.gamma0 + f0) / c;
  out.rhs = std::log(M) / (c * (c + 1.0)) + out.gamma_prime / (c + 1.0);
  out.inequality_held = out.lhs < out.rhs;
  out.f_bound_held = f0 / c < q * std::log(M) / (c * (c + 1.0) * std::log(c));
  out.premise_M_gt_Kc = M > K * c;
  return out;
}

}  // namespace smoothbound
