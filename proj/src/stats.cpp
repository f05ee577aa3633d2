#include "sensnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sensnet {

WilsonCI wilson(long long successes, long long trials, double z) {
  if (trials <= 0) throw std::invalid_argument("wilson: trials must be positive");
  if (successes < 0 || successes > trials)
    throw std::invalid_argument("wilson: successes out of range");
  WilsonCI ci;
  ci.trials = trials;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  ci.p_hat = p;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = p + z2 / (2.0 * n);
  const double spread = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  // Rounding in centre - spread can leave a tiny residue at the exact ends.
  ci.lo = successes == 0 ? 0.0 : (centre - spread) / denom;
  ci.hi = successes == trials ? 1.0 : (centre + spread) / denom;
  return ci;
}

double mean(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("mean: empty input");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

double sample_sd(const std::vector<double>& v) {
  if (v.size() < 2) throw std::invalid_argument("sample_sd: need at least two values");
  const double m = mean(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double percentile(std::vector<double> values, double pct) {
  if (values.empty()) throw std::invalid_argument("percentile: empty input");
  if (!(pct >= 0.0 && pct <= 100.0))
    throw std::invalid_argument("percentile: pct must lie in [0, 100]");
  std::sort(values.begin(), values.end());
  if (pct == 0.0) return values.front();
  const auto rank = static_cast<std::size_t>(
      std::ceil(pct / 100.0 * static_cast<double>(values.size())));
  return values[rank - 1];
}

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("fit_linear: need matched inputs of size >= 2");
  const double n = static_cast<double>(x.size());
  const double mx = mean(x), my = mean(y);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_linear: x values are all equal");
  LinearFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  const double ss_res = syy - f.slope * sxy;
  f.r2 = syy == 0.0 ? 1.0 : 1.0 - ss_res / syy;
  if (x.size() > 2) {
    const double var_res = std::max(ss_res, 0.0) / (n - 2.0);
    f.slope_se = std::sqrt(var_res / sxx);
  }
  return f;
}

}  // namespace sensnet
