#pragma once

#include <cstdint>
#include <vector>

#include "smoothbound/report.hpp"

namespace smoothbound {

// P: variables z_0..z_{r-1}. Q: z_0..z_r, with correction factors e^{z^2/m}.
enum class AuxKind { P, Q };

struct AuxInstance {
  double c = 0.0;
  double M = 0.0;
  AuxKind kind = AuxKind::P;
  int r = 0;                     // [c]
  std::vector<double> bases;     // (e-1) e^{c-i} / (c-i)
  std::vector<double> weights;   // c - i
};

// Bases (e-1) e^{c-i} / (c-i) for i = 0..count-1.
std::vector<double> aux_bases(double c, int count);

AuxInstance make_aux_instance(double c, double M, AuxKind kind);

inline constexpr std::uint64_t kDefaultAuxGuard = 100'000'000ULL;
inline constexpr std::uint64_t kAuxVariableCap = 1'000'000ULL;

struct AuxSum {
  double log_value = 0.0;
  std::uint64_t terms = 0;
  // Largest z_i^2 / m_i over visited coordinates.
  double max_premise_ratio = 0.0;
};

// F(c, M): sum over sum (c-i) z_i < M of prod m_i^{z_i} / z_i!, by peeling
// off one variable at a time (z_0 first). Log space throughout.
AuxSum eval_F(const AuxInstance& inst, std::uint64_t guard = kDefaultAuxGuard);

// G(c, M): as F over the Q support, with factors e^{z_i^2 / m_i}.
AuxSum eval_G(const AuxInstance& inst, std::uint64_t guard = kDefaultAuxGuard);

// The F summand over the support of any instance (for Q: G without the
// correction factors).
AuxSum eval_plain_sum(const AuxInstance& inst, std::uint64_t guard = kDefaultAuxGuard);

// Compares ln G against ln F + c ln 2. The inequality is asserted only when
// every visited coordinate had z^2/m < ln 2; otherwise it is flagged.
// Requires non-integer c > e / ln 2 and M <= e^{c/2}.
BoundReport check_G_vs_F(double c, double M, std::uint64_t guard = kDefaultAuxGuard);

// exp(-exp(kappa + gamma)).
double seed_coefficient(double kappa, double gamma);

}  // namespace smoothbound
