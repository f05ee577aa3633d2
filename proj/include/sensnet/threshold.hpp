#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sensnet/stats.hpp"
#include "sensnet/tiling.hpp"

namespace sensnet {

// Fraction of trials in which a freshly sampled tile is good, i.e. passes
// classification and staffing. Each trial draws a Poisson configuration over
// the tile and a one-tile margin and judges the centre tile. Pass k = 0 for
// the unit-disk model. Deterministic for a given seed regardless of the
// worker count.
WilsonCI estimate_good_prob(const TileGeom& geom, double lambda, int k, long long trials,
                            std::uint64_t seed, int threads = 0);

struct ThresholdReport {
  std::string parameter;  // "lambda" or "k"
  double estimate = 0.0;    // smallest evaluated value whose rate exceeds the target
  double bracket_lo = 0.0;  // final straddling bracket around the crossing
  double bracket_hi = 0.0;
  double p_at_estimate = 0.0;
  double p_ci_lo = 0.0;
  double p_ci_hi = 0.0;
  long long trials_used = 0;
  double target = 0.0;
  double tol = 0.0;
  std::string notes;
};

// Bisection of a monotone success rate. `eval` is called at bracket points
// and midpoints; with integer_param the bracket narrows to consecutive
// integers, otherwise until hi - lo <= tol. Throws invalid_argument when the
// initial bracket does not straddle the target.
ThresholdReport bisect_threshold(const std::function<WilsonCI(double)>& eval, double lo,
                                 double hi, double target, double tol, bool integer_param);

// Density at which good tiles become more likely than `target`. Evaluations
// start at `trials` per point and double while the interval straddles the
// target, up to `trial_cap`.
ThresholdReport find_threshold_lambda(const TileGeom& geom, double lo, double hi, double target,
                                      double tol, long long trials, long long trial_cap,
                                      std::uint64_t seed, int threads = 0);

// Neighbour budget at which good tiles become more likely than `target`,
// holding the density fixed.
ThresholdReport find_threshold_k(const TileGeom& geom, double lambda, int lo, int hi,
                                 double target, long long trials, long long trial_cap,
                                 std::uint64_t seed, int threads = 0);

struct ThetaPoint {
  double p = 0.0;
  double theta_mean = 0.0;
  double theta_sd = 0.0;
  double spanning_rate = 0.0;
};

// Largest-cluster fraction and spanning rate of iid n-by-n site lattices,
// averaged over `seeds` lattices per occupation probability.
std::vector<ThetaPoint> theta_curve(const std::vector<double>& probs, int n, int seeds,
                                    std::uint64_t seed);

}  // namespace sensnet
