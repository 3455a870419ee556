#pragma once

#include "spinfock/types.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace spinfock {

/// Sample mean of complex values with the standard error
/// sqrt(sum |x - mean|^2 / (N (N - 1))).
class ComplexAccumulator {
 public:
  void add(Complex x) {
    ++count_;
    const Complex delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += std::real(std::conj(delta) * (x - mean_));
  }

  std::size_t count() const { return count_; }
  Complex mean() const { return mean_; }

  double variance() const {
    return count_ < 2 ? std::numeric_limits<double>::quiet_NaN() : m2_ / static_cast<double>(count_ - 1);
  }

  double std_error() const {
    return count_ < 2 ? std::numeric_limits<double>::quiet_NaN()
                      : std::sqrt(variance() / static_cast<double>(count_));
  }

 private:
  std::size_t count_ = 0;
  Complex mean_{0.0, 0.0};
  double m2_ = 0.0;
};

struct McEstimate {
  Complex mean;
  double std_error;
  std::size_t samples;

  double z_score(Complex target) const { return std::abs(mean - target) / std_error; }
  bool within(Complex target, double sigmas) const { return z_score(target) <= sigmas; }
};

inline McEstimate summarize(std::span<const Complex> values) {
  ComplexAccumulator acc;
  for (Complex v : values) acc.add(v);
  return {acc.mean(), acc.std_error(), acc.count()};
}

}  // namespace spinfock
