#include "sensnet/threshold.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "sensnet/lattice.hpp"
#include "sensnet/parallel.hpp"
#include "sensnet/rng.hpp"
#include "sensnet/subnet.hpp"

namespace sensnet {
namespace {

bool good_trial(const TileGeom& geom, double lambda, int k, std::uint64_t trial_seed) {
  std::mt19937_64 eng = make_engine(trial_seed);
  const double half = 1.5 * geom.side;
  const double area = 9.0 * geom.side * geom.side;
  long long n = 0;
  if (lambda > 0.0) {
    std::poisson_distribution<long long> pd(lambda * area);
    n = pd(eng);
  }
  std::uniform_real_distribution<double> coord(-half, half);
  std::vector<Candidate> centre;
  int next_id = 0;
  for (long long i = 0; i < n; ++i) {
    const double x = coord(eng);
    const double y = coord(eng);
    if (tile_of(geom, {x, y}) == TileId{0, 0}) centre.push_back({next_id++, {x, y}});
  }
  TileStatus ts = classify_tile(geom, {0, 0}, std::move(centre), k);
  if (ts.good) staff_tile(geom, ts);
  return ts.good;
}

}  // namespace

WilsonCI estimate_good_prob(const TileGeom& geom, double lambda, int k, long long trials,
                            std::uint64_t seed, int threads) {
  if (trials <= 0) throw std::invalid_argument("estimate_good_prob: trials must be positive");
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw std::invalid_argument("estimate_good_prob: lambda must be finite and non-negative");
  if (geom.kind == TileGeom::Kind::KNearest && k < 1)
    throw std::invalid_argument("estimate_good_prob: k must be at least 1");

  std::atomic<long long> successes{0};
  parallel_chunks(trials, threads, [&](long long lo, long long hi) {
    long long local = 0;
    for (long long t = lo; t < hi; ++t) {
      if (good_trial(geom, lambda, k, substream_seed(seed, static_cast<std::uint64_t>(t))))
        ++local;
    }
    successes.fetch_add(local, std::memory_order_relaxed);
  });
  return wilson(successes.load(), trials);
}

ThresholdReport bisect_threshold(const std::function<WilsonCI(double)>& eval, double lo,
                                 double hi, double target, double tol, bool integer_param) {
  if (!(lo < hi)) throw std::invalid_argument("bisect_threshold: bracket is empty");
  if (!integer_param && !(tol > 0.0))
    throw std::invalid_argument("bisect_threshold: tol must be positive");

  ThresholdReport rep;
  rep.target = target;
  rep.tol = integer_param ? 1.0 : tol;

  std::map<double, WilsonCI> seen;
  const auto probe = [&](double x) {
    auto it = seen.find(x);
    if (it == seen.end()) {
      it = seen.emplace(x, eval(x)).first;
      rep.trials_used += it->second.trials;
    }
    return it->second;
  };

  if (probe(lo).p_hat >= target || probe(hi).p_hat <= target)
    throw std::invalid_argument("bisect_threshold: bracket does not straddle the target");

  while (integer_param ? hi - lo > 1.0 : hi - lo > tol) {
    double mid = integer_param ? std::floor((lo + hi) / 2.0) : (lo + hi) / 2.0;
    if (integer_param && (mid <= lo || mid >= hi)) break;
    if (probe(mid).p_hat > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  rep.bracket_lo = lo;
  rep.bracket_hi = hi;
  const WilsonCI at = probe(hi);
  rep.estimate = hi;
  rep.p_at_estimate = at.p_hat;
  rep.p_ci_lo = at.lo;
  rep.p_ci_hi = at.hi;
  return rep;
}

namespace {

// Evaluation with precision that adapts near the target: double the trial
// count while the interval still straddles it.
WilsonCI adaptive_estimate(const TileGeom& geom, double lambda, int k, long long trials,
                           long long trial_cap, double target, std::uint64_t seed, int threads) {
  long long t = trials;
  WilsonCI ci = estimate_good_prob(geom, lambda, k, t, seed, threads);
  while (ci.lo <= target && target <= ci.hi && 2 * t <= trial_cap) {
    t *= 2;
    ci = estimate_good_prob(geom, lambda, k, t, seed, threads);
  }
  return ci;
}

}  // namespace

ThresholdReport find_threshold_lambda(const TileGeom& geom, double lo, double hi, double target,
                                      double tol, long long trials, long long trial_cap,
                                      std::uint64_t seed, int threads) {
  std::uint64_t eval_index = 0;
  const auto eval = [&](double lambda) {
    return adaptive_estimate(geom, lambda, 0, trials, trial_cap, target,
                             substream_seed(seed, eval_index++), threads);
  };
  ThresholdReport rep = bisect_threshold(eval, lo, hi, target, tol, false);
  rep.parameter = "lambda";
  return rep;
}

ThresholdReport find_threshold_k(const TileGeom& geom, double lambda, int lo, int hi,
                                 double target, long long trials, long long trial_cap,
                                 std::uint64_t seed, int threads) {
  if (lo < 1) throw std::invalid_argument("find_threshold_k: bracket must start at 1 or above");
  std::uint64_t eval_index = 0;
  const auto eval = [&](double k) {
    return adaptive_estimate(geom, lambda, static_cast<int>(k), trials, trial_cap, target,
                             substream_seed(seed, eval_index++), threads);
  };
  ThresholdReport rep =
      bisect_threshold(eval, static_cast<double>(lo), static_cast<double>(hi), target, 0.0, true);
  rep.parameter = "k";
  return rep;
}

std::vector<ThetaPoint> theta_curve(const std::vector<double>& probs, int n, int seeds,
                                    std::uint64_t seed) {
  if (seeds < 1) throw std::invalid_argument("theta_curve: seeds must be positive");
  std::vector<ThetaPoint> out;
  out.reserve(probs.size());
  for (std::size_t pi = 0; pi < probs.size(); ++pi) {
    ThetaPoint pt;
    pt.p = probs[pi];
    std::vector<double> thetas;
    int spans = 0;
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t sub =
          substream_seed(seed, pi * static_cast<std::uint64_t>(seeds) + static_cast<std::uint64_t>(s));
      const ClusterStats cs = label_clusters(sample_site_lattice(n, n, probs[pi], sub));
      thetas.push_back(cs.theta_hat);
      spans += cs.spanning ? 1 : 0;
    }
    pt.theta_mean = mean(thetas);
    pt.theta_sd = thetas.size() > 1 ? sample_sd(thetas) : 0.0;
    pt.spanning_rate = static_cast<double>(spans) / static_cast<double>(seeds);
    out.push_back(pt);
  }
  return out;
}

}  // namespace sensnet
