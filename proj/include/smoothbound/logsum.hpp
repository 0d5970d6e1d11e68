#pragma once

#include <cmath>
#include <limits>

namespace smoothbound {

// Accumulates log(sum_i exp(x_i)) without overflow. Terms are rescaled
// against the running maximum and summed with Neumaier compensation.
class LogSumAccumulator {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (count_ == 0) {
      max_ = log_term;
      sum_ = 1.0;
      comp_ = 0.0;
    } else if (log_term > max_) {
      const double scale = std::exp(max_ - log_term);
      sum_ *= scale;
      comp_ *= scale;
      max_ = log_term;
      accumulate(1.0);
    } else {
      accumulate(std::exp(log_term - max_));
    }
    ++count_;
  }

  void add_log_sum(const LogSumAccumulator& other) {
    if (other.count_ > 0) add(other.log_value());
  }

  double log_value() const {
    if (count_ == 0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_ + comp_);
  }

  double value() const { return std::exp(log_value()); }

  unsigned long long count() const { return count_; }

 private:
  void accumulate(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  double comp_ = 0.0;
  unsigned long long count_ = 0;
};

// Neumaier-compensated running sum in linear space.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace smoothbound
