#include "smoothbound/binning.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "smoothbound/errors.hpp"
#include "smoothbound/logsum.hpp"

namespace smoothbound {
namespace {

void check_spec_matches(double n, const BinningSpec& spec) {
  if (n != spec.n) throw InvalidArgument("binning spec was built for a different n");
}

std::vector<bool> active_bins(const BinningSpec& spec) {
  std::vector<bool> active(spec.prime_counts.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = spec.prime_counts[i] > 0;
  return active;
}

}  // namespace

BinningSpec build_binning(double n, const PrimeTable& table) {
  if (!(n > std::numbers::e)) throw InvalidArgument("binning needs n > e");
  if (n > static_cast<double>(table.limit())) {
    throw TableTooSmall("binning bound beyond sieve limit");
  }
  const double ln_n = std::log(n);
  const double whole = std::floor(ln_n);
  BinningSpec spec;
  spec.n = n;
  // Exact equality ln n = [ln n] + ln 2 falls in r2, which keeps 2 inside the
  // closed upper end of the last bin.
  if (ln_n < whole + std::numbers::ln2) {
    spec.case_tag = BinCase::r1;
    spec.r = static_cast<int>(whole);
  } else {
    spec.case_tag = BinCase::r2;
    spec.r = static_cast<int>(whole) + 1;
  }

  for (int i = 1; i <= spec.r; ++i) {
    const double di = i;
    Bin bin{n / std::exp(di), n / std::exp(di - 1.0), i == 1};
    if (i == 1) bin.upper = n;
    spec.bins.push_back(bin);
    spec.weights_upper.push_back(ln_n - di + 1.0);
    // In case r2 the last bin lies inside (0, e) and holds only the prime 2.
    const bool last_r2 = spec.case_tag == BinCase::r2 && i == spec.r;
    spec.weights_lower.push_back(last_r2 ? std::numbers::ln2 : ln_n - di);
    const std::size_t upto = bin.upper_open ? table.count_below(bin.upper)
                                            : table.count_at_most(bin.upper);
    const std::size_t below = table.count_at_most(bin.lower);
    spec.prime_counts.push_back(upto - below);
    spec.count_estimate.push_back((std::numbers::e - 1.0) * n / ((ln_n - di) * std::exp(di)));
    spec.count_lower_claim.push_back(n / (std::exp(di) * (ln_n - di)));
  }
  return spec;
}

std::optional<std::size_t> bin_of(const BinningSpec& spec, double p) {
  for (std::size_t i = 0; i < spec.bins.size(); ++i) {
    if (spec.bins[i].contains(p)) return i;
  }
  return std::nullopt;
}

BigInt k_count(std::span<const std::uint64_t> z, const BinningSpec& spec) {
  if (z.size() != spec.prime_counts.size()) {
    throw InvalidArgument("z must have one entry per bin");
  }
  BigInt product = 1;
  for (std::size_t i = 0; i < z.size(); ++i) {
    product *= compositions_count(z[i], spec.prime_counts[i]);
    if (product == 0) break;
  }
  return product;
}

void enumerate_weighted_points(std::span<const double> weights, const std::vector<bool>& active,
                               double budget, Boundary boundary, std::uint64_t guard,
                               const std::function<void(std::span<const std::uint64_t>)>& visit) {
  const std::size_t dims = weights.size();
  if (active.size() != dims) throw InvalidArgument("active mask must match the weights");
  for (std::size_t i = 0; i < dims; ++i) {
    if (active[i] && !(weights[i] > 0.0)) {
      throw DegenerateWeight("bin " + std::to_string(i + 1) +
                                 " has a nonpositive weight but can be nonzero; the region is "
                                 "unbounded",
                             i);
    }
  }
  const auto admits = [boundary](double rest) {
    return boundary == Boundary::inclusive ? rest >= -kBoundarySlack : rest > kBoundarySlack;
  };
  if (!admits(budget)) return;

  std::vector<std::uint64_t> z(dims, 0);
  std::uint64_t visited = 0;
  // Depth-first; each level advances its coordinate while the residual admits it.
  const std::function<void(std::size_t, double)> walk = [&](std::size_t level, double residual) {
    if (level == dims) {
      if (++visited > guard) {
        throw ResourceLimit("z-space enumeration exceeded guard of " + std::to_string(guard) +
                            " points");
      }
      visit(z);
      return;
    }
    if (!active[level]) {
      walk(level + 1, residual);
      return;
    }
    for (std::uint64_t value = 0;; ++value) {
      const double rest = residual - static_cast<double>(value) * weights[level];
      if (!admits(rest)) break;
      z[level] = value;
      walk(level + 1, rest);
    }
    z[level] = 0;
  };
  walk(0, budget);
}

UpperBarResult nu_upper_bar(double n, double N, const BinningSpec& spec, std::uint64_t guard) {
  check_spec_matches(n, spec);
  if (!(N > 1.0)) throw InvalidArgument("nu upper bar needs N > 1");
  const std::vector<bool> active = active_bins(spec);

  // f(z, m_i) tables grow lazily per bin.
  std::vector<std::vector<BigInt>> tables(spec.prime_counts.size());
  const auto f = [&](std::size_t i, std::uint64_t z) -> const BigInt& {
    auto& t = tables[i];
    while (t.size() <= z) t.push_back(compositions_count(t.size(), spec.prime_counts[i]));
    return t[z];
  };

  UpperBarResult out;
  out.value = 0;
  enumerate_weighted_points(spec.weights_lower, active, std::log(N),
                            Boundary::inclusive, guard, [&](std::span<const std::uint64_t> z) {
                              BigInt term = 1;
                              for (std::size_t i = 0; i < z.size(); ++i) {
                                if (z[i] != 0) term *= f(i, z[i]);
                              }
                              out.value += term;
                              ++out.points;
                            });
  return out;
}

LowerUnderlineResult nu_lower_underline(double n, double N, const BinningSpec& spec,
                                        std::uint64_t guard) {
  check_spec_matches(n, spec);
  if (!(N > 1.0)) throw InvalidArgument("nu lower underline needs N > 1");
  const std::vector<bool> active = active_bins(spec);

  const std::size_t r = spec.prime_counts.size();
  std::vector<double> log_m(r);
  for (std::size_t i = 0; i < r; ++i) log_m[i] = std::log(static_cast<double>(spec.prime_counts[i]));

  LowerUnderlineResult out;
  // (bin, z) pairs whose product bound was already checked.
  std::vector<std::uint64_t> checked_upto(r, 0);
  LogSumAccumulator acc;
  enumerate_weighted_points(
      spec.weights_upper, active, std::log(N), Boundary::strict, guard,
      [&](std::span<const std::uint64_t> z) {
        double log_term = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
          const std::uint64_t zi = z[i];
          if (zi == 0) continue;
          const double dz = static_cast<double>(zi);
          log_term += dz * log_m[i] - std::lgamma(dz + 1.0);
          while (checked_upto[i] < zi) {
            const std::uint64_t value = ++checked_upto[i];
            const double m = static_cast<double>(spec.prime_counts[i]);
            double log_product = 0.0;
            for (std::uint64_t k = 1; k < value; ++k) log_product += std::log1p(static_cast<double>(k) / m);
            const double dv = static_cast<double>(value);
            if (log_product > dv * dv / (2.0 * m)) out.product_bound_held = false;
            ++out.product_bound_checks;
          }
        }
        acc.add(log_term);
        ++out.points;
      });
  out.log_value = acc.log_value();
  out.value = std::exp(out.log_value);
  return out;
}

}  // namespace smoothbound
