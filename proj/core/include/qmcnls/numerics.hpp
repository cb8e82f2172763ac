#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qmcnls {

/// Compensated accumulator (Kahan-Neumaier improved summation).
class KahanSum {
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

/// Streaming mean and sum of squared deviations (Welford's recurrence).
/// Deterministic given a fixed insertion order.
class StreamingMoments {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }

  std::int64_t count() const { return count_; }
  double mean() const { return mean_; }
  double sum_squared_deviations() const { return m2_; }
  double variance_unbiased() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
};

/// Ordinary least squares y ~ slope * x + intercept.
inline LinearFit fit_line(std::span<const double> xs,
                          std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw std::invalid_argument("fit_line: need two or more paired samples");
  }
  const auto n = static_cast<double>(xs.size());
  KahanSum sx, sy, sxx, sxy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx.add(xs[i]);
    sy.add(ys[i]);
    sxx.add(xs[i] * xs[i]);
    sxy.add(xs[i] * ys[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  const double var = sxx.value() / n - mx * mx;
  if (var <= 0.0) {
    throw std::invalid_argument("fit_line: abscissae are degenerate");
  }
  LinearFit fit;
  fit.slope = (sxy.value() / n - mx * my) / var;
  fit.intercept = my - fit.slope * mx;
  KahanSum res;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
    res.add(r * r);
  }
  fit.residual_rms = std::sqrt(res.value() / n);
  return fit;
}

/// Fits log2(y) against log2(x); the slope is the observed convergence order
/// (negative for errors decaying in x).
inline LinearFit fit_loglog(std::span<const double> xs,
                            std::span<const double> ys) {
  std::vector<double> lx(xs.size()), ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw std::invalid_argument("fit_loglog: inputs must be positive");
    }
    lx[i] = std::log2(xs[i]);
    ly[i] = std::log2(ys[i]);
  }
  return fit_line(lx, ly);
}

}  // namespace qmcnls
