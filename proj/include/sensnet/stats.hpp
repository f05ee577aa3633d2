#pragma once

#include <vector>

namespace sensnet {

struct WilsonCI {
  double p_hat = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  long long trials = 0;
};

// Wilson score interval; the default z gives 95% coverage.
WilsonCI wilson(long long successes, long long trials, double z = 1.959963984540054);

double mean(const std::vector<double>& v);
double sample_sd(const std::vector<double>& v);

// Nearest-rank percentile, pct in [0, 100].
double percentile(std::vector<double> values, double pct);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double slope_se = 0.0;
};

// Ordinary least squares of y on x. Needs at least two distinct x values.
LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace sensnet
