#include "smoothbound/auxproblems.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"
#include "smoothbound/lattice.hpp"
#include "smoothbound/logsum.hpp"

namespace smoothbound {
namespace {

class AuxEvaluator {
 public:
  AuxEvaluator(const AuxInstance& inst, bool correction, std::uint64_t guard)
      : inst_(inst), correction_(correction), guard_(guard) {
    for (double m : inst.bases) log_bases_.push_back(std::log(m));
  }

  AuxSum run() {
    AuxSum out;
    out.log_value = level(0, inst_.M);
    out.terms = terms_;
    out.max_premise_ratio = max_ratio_;
    return out;
  }

 private:
  // log of the sum over z_i..z_last with sum (c-j) z_j < residual.
  double level(std::size_t i, double residual) {
    if (i == inst_.weights.size()) {
      if (++terms_ > guard_) {
        throw ResourceLimit("auxiliary sum exceeded guard of " + std::to_string(guard_) +
                            " terms");
      }
      return 0.0;
    }
    const double w = inst_.weights[i];
    const double m = inst_.bases[i];
    LogSumAccumulator acc;
    for (std::uint64_t z = 0;; ++z) {
      const double rest = residual - static_cast<double>(z) * w;
      if (!(rest > kBoundarySlack)) break;
      if (z > kAuxVariableCap) {
        throw ResourceLimit("variable z_" + std::to_string(i) + " (weight " + std::to_string(w) +
                            ") passed the cap of " + std::to_string(kAuxVariableCap));
      }
      const double dz = static_cast<double>(z);
      double log_term = dz * log_bases_[i] - std::lgamma(dz + 1.0);
      const double ratio = dz * dz / m;
      if (ratio > max_ratio_) max_ratio_ = ratio;
      if (correction_) log_term += ratio;
      acc.add(log_term + level(i + 1, rest));
    }
    return acc.log_value();
  }

  const AuxInstance& inst_;
  bool correction_;
  std::uint64_t guard_;
  std::vector<double> log_bases_;
  std::uint64_t terms_ = 0;
  double max_ratio_ = 0.0;
};

bool is_integer(double x) { return std::floor(x) == x; }

}  // namespace

std::vector<double> aux_bases(double c, int count) {
  std::vector<double> bases;
  for (int i = 0; i < count; ++i) {
    const double w = c - i;
    bases.push_back((std::numbers::e - 1.0) * std::exp(w) / w);
  }
  return bases;
}

AuxInstance make_aux_instance(double c, double M, AuxKind kind) {
  if (!(c > 1.0) || !std::isfinite(c)) throw InvalidArgument("auxiliary problem needs c > 1");
  if (!(M > 1.0) || !std::isfinite(M)) throw InvalidArgument("auxiliary problem needs M > 1");
  AuxInstance inst;
  inst.c = c;
  inst.M = M;
  inst.kind = kind;
  inst.r = static_cast<int>(std::floor(c));
  if (kind == AuxKind::Q && is_integer(c)) {
    throw DegenerateWeight("Q instance with integer c has weight c - r = 0 on z_r",
                           static_cast<std::size_t>(inst.r));
  }
  const int count = kind == AuxKind::P ? inst.r : inst.r + 1;
  inst.bases = aux_bases(c, count);
  for (int i = 0; i < count; ++i) inst.weights.push_back(c - i);
  return inst;
}

AuxSum eval_F(const AuxInstance& inst, std::uint64_t guard) {
  if (inst.kind != AuxKind::P) throw InvalidArgument("F is defined on P instances");
  return AuxEvaluator(inst, false, guard).run();
}

AuxSum eval_G(const AuxInstance& inst, std::uint64_t guard) {
  if (inst.kind != AuxKind::Q) throw InvalidArgument("G is defined on Q instances");
  return AuxEvaluator(inst, true, guard).run();
}

AuxSum eval_plain_sum(const AuxInstance& inst, std::uint64_t guard) {
  return AuxEvaluator(inst, false, guard).run();
}

BoundReport check_G_vs_F(double c, double M, std::uint64_t guard) {
  if (is_integer(c)) throw DomainError("G versus F comparison needs non-integer c");
  if (!(c > std::numbers::e / std::numbers::ln2)) {
    throw DomainError("G versus F comparison needs c > e / ln 2");
  }
  if (!(M <= std::exp(c / 2.0))) throw DomainError("G versus F comparison needs M <= e^{c/2}");
  const AuxSum F = eval_F(make_aux_instance(c, M, AuxKind::P), guard);
  const AuxSum G = eval_G(make_aux_instance(c, M, AuxKind::Q), guard);

  BoundReport report;
  report.inputs = {{"c", c}, {"M", M}, {"max_premise_ratio", G.max_premise_ratio},
                   {"log_F", F.log_value}};
  report.set_exact_log(G.log_value);
  const bool premise = G.max_premise_ratio < std::numbers::ln2;
  report.add_bound("2^c*F", F.log_value + c * std::numbers::ln2, BoundDirection::upper,
                   premise ? CheckStatus::asserted : CheckStatus::premise_failed);
  return report;
}

double seed_coefficient(double kappa, double gamma) { return std::exp(-std::exp(kappa + gamma)); }

}  // namespace smoothbound
