#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sensnet/stats.hpp"
#include "sensnet/subnet.hpp"
#include "sensnet/threshold.hpp"

namespace sensnet {

// Raised when a study's preconditions fail on the given parameters; the
// command line maps it to its own exit code.
struct experiment_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr double kSiteThreshold = 0.592746;

// Transmission cost of one link of length delta under a path-loss exponent
// beta, i.e. delta to the power beta. Exponents outside [2, 5] are rejected.
double power_stretch(double delta, double beta);

struct StretchParams {
  TileGeom geom{};
  double lambda = 0.0;
  int k = 0;
  double radius = 1.0;
  int tiles = 40;
  std::uint64_t seed = 1;
  std::vector<std::pair<double, double>> bins = {{10.0, 20.0}, {20.0, 40.0}, {40.0, 80.0}};
  int pairs_per_bin = 200;
  int max_sources = 400;
  std::vector<double> betas = {2.0, 3.0, 4.0, 5.0};
  double supercrit_target = kSiteThreshold;
  long long precheck_trials = 2000;
  int threads = 0;
};

struct StretchBin {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  double ratio_p50 = 0.0, ratio_p99 = 0.0, ratio_max = 0.0;
  double exceed_frac = 0.0;     // share of ratios above 1.5x the bin median
  double hop_ratio_p99 = 0.0;   // link count over straight-line separation
};

struct PowerStretchRow {
  double beta = 0.0;
  double p99 = 0.0;
  double max = 0.0;
};

struct StretchReport {
  WilsonCI p_good{};
  long long nodes = 0, edges = 0, component_nodes = 0;
  std::vector<StretchBin> bins;
  double alpha_hat = 0.0;          // 99th percentile of length over distance, all pairs
  double alpha_lattice_hat = 0.0;  // same with tile-grid separation as the denominator
  std::vector<PowerStretchRow> power;
};

// Distance stretch between representatives of the largest overlay component,
// stratified by straight-line separation. Aborts when the good-tile rate is
// not above the site threshold.
StretchReport run_stretch(const StretchParams& p);

struct CoverageParams {
  TileGeom geom{};
  int k = 0;
  double radius = 1.0;
  std::vector<double> lambdas = {2.0, 2.5};
  int tiles = 64;
  int seeds = 10;
  std::uint64_t seed = 7;
  std::vector<int> sizes = {2, 4, 6, 8, 10, 12};
  double supercrit_target = kSiteThreshold;
  long long precheck_trials = 2000;
  int threads = 0;
};

struct CoverageFit {
  double lambda = 0.0;
  std::vector<int> sizes;
  std::vector<double> freq_mean;  // per size, mean of per-seed vacancy frequencies
  LinearFit pooled{};             // log mean frequency against box side
  double slope_mean = 0.0, slope_ci_lo = 0.0, slope_ci_hi = 0.0;
  int seeds_used = 0;
  std::string note;
};

struct CoverageReport {
  std::vector<CoverageFit> fits;
};

// Frequency of node-free square boxes by side length, over the full overlay.
// A density below the site threshold is reported in the fit note rather than
// aborting, since vacancy statistics remain well defined.
CoverageReport run_coverage(const CoverageParams& p);

struct RouteStudyParams {
  double p = 0.65;
  int n = 256;
  int lattices = 5;
  int pairs = 100;  // per lattice
  std::uint64_t seed = 3;
  std::vector<long long> ratio_bin_edges = {8, 32, 128, 384};
};

struct RouteBin {
  long long lo = 0, hi = 0;
  int count = 0;
  double probe_ratio_mean = 0.0;  // probes over fewest open-site hops
};

struct RouteStudyReport {
  int pairs_total = 0;
  int delivered = 0;
  int unreachable = 0;
  int same_cluster_pairs = 0;
  int delivered_same_cluster = 0;
  bool outcome_matches_cluster = true;
  double mean_detours = 0.0;
  std::vector<RouteBin> bins;
};

// Routing over iid lattices: delivery versus cluster membership and probe
// cost by separation.
RouteStudyReport run_route_study(const RouteStudyParams& p);

}  // namespace sensnet
