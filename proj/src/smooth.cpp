#include "smoothbound/smooth.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "smoothbound/errors.hpp"
#include "smoothbound/lattice.hpp"

namespace smoothbound {
namespace {

std::uint64_t floor_count(double N) {
  if (!(N >= 0.0) || !std::isfinite(N)) throw InvalidArgument("N must be finite and nonnegative");
  return static_cast<std::uint64_t>(std::floor(N));
}

struct PairHash {
  std::size_t operator()(const std::pair<std::size_t, std::uint64_t>& key) const {
    return std::hash<std::uint64_t>{}(key.second * 0x9E3779B97F4A7C15ULL ^ key.first);
  }
};

class PsiMemo {
 public:
  PsiMemo(const PrimeTable& table, std::uint64_t guard) : table_(table), guard_(guard) {}

  std::uint64_t psi(std::size_t k, std::uint64_t N) {
    if (N == 0) return 0;
    if (N == 1) return 1;
    if (k == 1) return static_cast<std::uint64_t>(std::bit_width(N));  // 1, 2, 4, ..., <= N
    const auto key = std::make_pair(k, N);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::uint64_t p = table_.prime(k);
    std::uint64_t total = 0;
    for (std::uint64_t rest = N;; rest /= p) {
      total += psi(k - 1, rest);
      if (rest < p) break;
    }
    if (memo_.size() >= guard_) {
      throw ResourceLimit("smooth-count memo exceeded guard of " + std::to_string(guard_) +
                          " entries");
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  const PrimeTable& table_;
  std::uint64_t guard_;
  std::unordered_map<std::pair<std::size_t, std::uint64_t>, std::uint64_t, PairHash> memo_;
};

}  // namespace

LargestPrimeFactorSieve::LargestPrimeFactorSieve(std::uint64_t limit, std::uint64_t guard)
    : limit_(limit) {
  if (limit > guard) {
    throw ResourceLimit("direct smooth count up to " + std::to_string(limit) +
                        " exceeds guard " + std::to_string(guard));
  }
  // Smallest prime factor first.
  lpf_.assign(limit + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (lpf_[i] != 0) continue;
    lpf_[i] = static_cast<std::uint32_t>(i);
    if (i * i > limit) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) {
      if (lpf_[j] == 0) lpf_[j] = static_cast<std::uint32_t>(i);
    }
  }
  if (limit >= 1) lpf_[1] = 1;
  lpf_[0] = 1;
  // In place: k / spf(k) < k was already resolved to its largest factor.
  for (std::uint64_t k = 2; k <= limit; ++k) {
    const std::uint32_t spf = lpf_[k];
    const std::uint32_t rest = lpf_[k / spf];
    lpf_[k] = spf > rest ? spf : rest;
  }
}

std::uint64_t LargestPrimeFactorSieve::count_smooth(double n, double N, FactorBase base) const {
  const std::uint64_t top = std::min<std::uint64_t>(floor_count(N), limit_);
  std::uint64_t count = 0;
  for (std::uint64_t k = 2; k <= top; ++k) {
    const double p = lpf_[k];
    if (base == FactorBase::strict ? p < n : p <= n) ++count;
  }
  return count;
}

SmoothCountResult smooth_count_direct(double n, double N, FactorBase base, std::uint64_t guard) {
  if (!(n > 2.0)) throw InvalidArgument("smoothness bound n must exceed 2");
  if (!(N >= 2.0)) throw InvalidArgument("direct smooth count needs N >= 2");
  const std::uint64_t top = floor_count(N);
  const LargestPrimeFactorSieve sieve(top, guard);
  SmoothCountResult out;
  out.n = n;
  out.N = N;
  out.nu = sieve.count_smooth(n, N, base);
  out.psi = out.nu + 1;
  out.method = CountMethod::direct;
  out.base = base;
  return out;
}

SmoothCountResult smooth_count_recursive(std::size_t k, double N, const PrimeTable& table,
                                         std::uint64_t memo_guard) {
  if (k < 1) throw InvalidArgument("recursive smooth count needs k >= 1");
  if (k > table.size()) throw TableTooSmall("prime index k beyond prime table");
  if (!(N >= 1.0)) throw InvalidArgument("recursive smooth count needs N >= 1");
  PsiMemo memo(table, memo_guard);
  SmoothCountResult out;
  out.n = static_cast<double>(table.prime(k));
  out.N = N;
  out.psi = memo.psi(k, floor_count(N));
  out.nu = out.psi - 1;
  out.method = CountMethod::recursive;
  out.base = FactorBase::inclusive;
  return out;
}

std::uint64_t simplex_level(double n, double N) {
  const double ratio = std::log(N) / std::log(n);
  if (ratio < 0.0) return 0;
  auto l = static_cast<std::uint64_t>(std::floor(ratio));
  // Repair rounding at exact powers: n^(l+1) <= N must raise l.
  if (std::pow(n, static_cast<double>(l + 1)) <= N * (1.0 + 1e-14)) {
    if (std::abs(static_cast<double>(l + 1) - ratio) < 1e-9) ++l;
  }
  return l;
}

BoundReport preliminary_lower_bound(double n, double N, const PrimeTable& table) {
  if (!(n > 2.0)) throw InvalidArgument("preliminary bound needs n > 2");
  if (!(N > n)) throw InvalidArgument("preliminary bound needs N > n");
  const std::size_t m = smoothness_index(table, n);
  const std::uint64_t l = simplex_level(n, N);
  const double ln_n = std::log(n);
  const double ln_N = std::log(N);

  BoundReport report;
  report.inputs = {{"n", n}, {"N", N}, {"m", static_cast<double>(m)}, {"l", static_cast<double>(l)}};
  const BigInt f = compositions_count(l, m);
  report.counts["f(l,m)"] = to_decimal(f);
  if (l == 0) {
    report.add_bound("f(l,m)", 0.0, BoundDirection::lower);
    report.flags["degenerate-range"] = CheckStatus::reported;
    return report;
  }
  const double dl = static_cast<double>(l);
  const double dm = static_cast<double>(m);
  report.add_bound("f(l,m)", log_of(f), BoundDirection::lower, CheckStatus::asserted);
  report.add_bound("m^l/l!", dl * std::log(dm) - std::lgamma(dl + 1.0), BoundDirection::lower,
                   CheckStatus::asserted);
  report.add_bound("stirling_l",
                   -0.5 * std::log(2.0 * std::numbers::pi * dl) + dl * (1.0 + std::log(dm / dl)),
                   BoundDirection::lower);
  report.add_bound("stirling_lnN",
                   -0.5 * std::log(ln_N) + (ln_N / ln_n) * (1.0 + ln_n - std::log(ln_N)),
                   BoundDirection::lower);
  return report;
}

}  // namespace smoothbound
