#include "sensnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>

#include "sensnet/lattice.hpp"
#include "sensnet/rng.hpp"
#include "sensnet/routing.hpp"

namespace sensnet {
namespace {

std::string rate_str(const WilsonCI& ci) {
  return std::to_string(ci.p_hat) + " [" + std::to_string(ci.lo) + ", " +
         std::to_string(ci.hi) + "]";
}

// Shortest-path lengths from one overlay node under edge weight |e|^beta
// (beta = 1 gives plain Euclidean length).
std::vector<double> dijkstra_pow(const SubnetGraph& sg, int src_idx, double beta) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best(sg.members.size(), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  best[static_cast<std::size_t>(src_idx)] = 0.0;
  pq.push({0.0, src_idx});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > best[static_cast<std::size_t>(u)]) continue;
    for (int vb : sg.adj[static_cast<std::size_t>(u)]) {
      const int v = sg.index_of(vb);
      if (v < 0) continue;
      const double len = dist(sg.pos[static_cast<std::size_t>(u)], sg.pos[static_cast<std::size_t>(v)]);
      const double w = beta == 1.0 ? len : std::pow(len, beta);
      if (d + w < best[static_cast<std::size_t>(v)]) {
        best[static_cast<std::size_t>(v)] = d + w;
        pq.push({d + w, v});
      }
    }
  }
  return best;
}

}  // namespace

double power_stretch(double delta, double beta) {
  if (!(beta >= 2.0 && beta <= 5.0))
    throw std::invalid_argument("power_stretch: beta must lie in [2, 5]");
  if (!(delta >= 0.0) || !std::isfinite(delta))
    throw std::invalid_argument("power_stretch: delta must be finite and non-negative");
  return std::pow(delta, beta);
}

StretchReport run_stretch(const StretchParams& p) {
  for (double beta : p.betas) power_stretch(1.0, beta);
  StretchReport rep;
  rep.p_good = estimate_good_prob(p.geom, p.lambda, p.k, p.precheck_trials,
                                  substream_seed(p.seed, 0), p.threads);
  if (!(rep.p_good.p_hat > p.supercrit_target))
    throw experiment_error("run_stretch: good-tile rate " + rate_str(rep.p_good) +
                           " is not above the required " + std::to_string(p.supercrit_target));

  const Window w = window_for_tiles(p.tiles, p.geom.side);
  const PointSet ps = sample_poisson(w, p.lambda, substream_seed(p.seed, 1));
  ConstructParams cp;
  cp.geom = p.geom;
  cp.radius = p.radius;
  cp.k = p.k;
  const Construction c = construct_subnet(ps, cp);
  rep.nodes = static_cast<long long>(c.subnet.members.size());
  rep.edges = c.subnet.edge_count();

  const std::vector<int> comp = largest_component(c.subnet);
  rep.component_nodes = static_cast<long long>(comp.size());

  std::vector<int> reps;  // component indices of representative nodes
  for (int idx : comp) {
    if (c.subnet.roles[static_cast<std::size_t>(idx)] == Role::Representative) reps.push_back(idx);
  }
  if (reps.size() < 2)
    throw experiment_error("run_stretch: largest component has fewer than two representatives");

  const std::size_t nbins = p.bins.size();
  std::vector<std::vector<double>> ratios(nbins);
  std::vector<std::vector<double>> hop_ratios(nbins);
  std::vector<double> lattice_ratios;
  std::vector<std::vector<std::vector<double>>> pow_ratios(
      p.betas.size(), std::vector<std::vector<double>>(nbins));

  std::mt19937_64 eng = make_engine(substream_seed(p.seed, 2));
  std::uniform_int_distribution<std::size_t> pick(0, reps.size() - 1);
  const auto bins_full = [&] {
    for (std::size_t b = 0; b < nbins; ++b) {
      if (static_cast<int>(ratios[b].size()) < p.pairs_per_bin) return false;
    }
    return true;
  };

  for (int s = 0; s < p.max_sources && !bins_full(); ++s) {
    const int src = reps[pick(eng)];
    const std::vector<double> d1 = dijkstra_pow(c.subnet, src, 1.0);
    const std::vector<double> hops = dijkstra_pow(c.subnet, src, 0.0);
    std::vector<std::vector<double>> db;
    db.reserve(p.betas.size());
    for (double beta : p.betas) db.push_back(dijkstra_pow(c.subnet, src, beta));

    for (int v : reps) {
      if (v == src) continue;
      const double euclid = dist(c.subnet.pos[static_cast<std::size_t>(src)],
                                 c.subnet.pos[static_cast<std::size_t>(v)]);
      for (std::size_t b = 0; b < nbins; ++b) {
        if (euclid < p.bins[b].first || euclid >= p.bins[b].second) continue;
        if (static_cast<int>(ratios[b].size()) >= p.pairs_per_bin) break;
        const double dw = d1[static_cast<std::size_t>(v)];
        if (!std::isfinite(dw)) continue;  // not in the component; cannot happen for comp members
        ratios[b].push_back(dw / euclid);
        hop_ratios[b].push_back(hops[static_cast<std::size_t>(v)] / euclid);
        const TileId ts = c.subnet.member_tile[static_cast<std::size_t>(src)];
        const TileId tv = c.subnet.member_tile[static_cast<std::size_t>(v)];
        const int dl = std::abs(ts.i - tv.i) + std::abs(ts.j - tv.j);
        if (dl > 0) lattice_ratios.push_back(dw / static_cast<double>(dl));
        for (std::size_t bi = 0; bi < p.betas.size(); ++bi) {
          pow_ratios[bi][b].push_back(db[bi][static_cast<std::size_t>(v)] /
                                      power_stretch(euclid, p.betas[bi]));
        }
        break;
      }
    }
  }

  std::vector<double> all;
  for (std::size_t b = 0; b < nbins; ++b) {
    StretchBin sb;
    sb.lo = p.bins[b].first;
    sb.hi = p.bins[b].second;
    sb.count = static_cast<int>(ratios[b].size());
    if (sb.count > 0) {
      sb.ratio_p50 = percentile(ratios[b], 50.0);
      sb.ratio_p99 = percentile(ratios[b], 99.0);
      sb.ratio_max = *std::max_element(ratios[b].begin(), ratios[b].end());
      int exceed = 0;
      for (double r : ratios[b])
        if (r > 1.5 * sb.ratio_p50) ++exceed;
      sb.exceed_frac = static_cast<double>(exceed) / sb.count;
      sb.hop_ratio_p99 = percentile(hop_ratios[b], 99.0);
      all.insert(all.end(), ratios[b].begin(), ratios[b].end());
    }
    rep.bins.push_back(sb);
  }
  if (all.empty()) throw experiment_error("run_stretch: no pair fell into any separation bin");
  rep.alpha_hat = percentile(all, 99.0);
  if (!lattice_ratios.empty()) rep.alpha_lattice_hat = percentile(lattice_ratios, 99.0);

  for (std::size_t bi = 0; bi < p.betas.size(); ++bi) {
    std::vector<double> pooled;
    for (std::size_t b = 0; b < nbins; ++b)
      pooled.insert(pooled.end(), pow_ratios[bi][b].begin(), pow_ratios[bi][b].end());
    PowerStretchRow row;
    row.beta = p.betas[bi];
    if (!pooled.empty()) {
      row.p99 = percentile(pooled, 99.0);
      row.max = *std::max_element(pooled.begin(), pooled.end());
    }
    rep.power.push_back(row);
  }
  return rep;
}

CoverageReport run_coverage(const CoverageParams& p) {
  if (p.seeds < 1) throw std::invalid_argument("run_coverage: seeds must be positive");
  for (int s : p.sizes) {
    if (s < 1 || s > p.tiles)
      throw std::invalid_argument("run_coverage: box sides must lie in [1, tiles]");
  }
  CoverageReport rep;

  for (std::size_t li = 0; li < p.lambdas.size(); ++li) {
    const double lambda = p.lambdas[li];
    CoverageFit fit;
    fit.lambda = lambda;
    fit.sizes = p.sizes;

    const WilsonCI pre = estimate_good_prob(p.geom, lambda, p.k, p.precheck_trials,
                                            substream_seed(p.seed, 1000 + li), p.threads);
    if (!(pre.p_hat > p.supercrit_target))
      fit.note = "good-tile rate " + rate_str(pre) + " is below " +
                 std::to_string(p.supercrit_target) + "; vacancy statistics reported anyway";

    std::vector<std::vector<double>> per_seed_freq(static_cast<std::size_t>(p.seeds));
    std::vector<double> slopes;

    for (int s = 0; s < p.seeds; ++s) {
      const Window w = window_for_tiles(p.tiles, p.geom.side);
      const std::uint64_t sub =
          substream_seed(p.seed, li * static_cast<std::uint64_t>(p.seeds) + s);
      const PointSet ps = sample_poisson(w, lambda, sub);
      ConstructParams cp;
      cp.geom = p.geom;
      cp.radius = p.radius;
      cp.k = p.k;
      const Construction c = construct_subnet(ps, cp);

      // Per-tile node counts, then prefix sums for box queries.
      const int W = c.tiles.w, H = c.tiles.h;
      std::vector<int> count(static_cast<std::size_t>(W) * H, 0);
      for (std::size_t m = 0; m < c.subnet.members.size(); ++m) {
        const TileId t = c.subnet.member_tile[m];
        count[static_cast<std::size_t>(t.j - c.tiles.origin.j) * W +
              static_cast<std::size_t>(t.i - c.tiles.origin.i)] += 1;
      }
      std::vector<long long> pre2(static_cast<std::size_t>(W + 1) * (H + 1), 0);
      for (int j = 0; j < H; ++j) {
        for (int i = 0; i < W; ++i) {
          pre2[static_cast<std::size_t>(j + 1) * (W + 1) + (i + 1)] =
              pre2[static_cast<std::size_t>(j) * (W + 1) + (i + 1)] +
              pre2[static_cast<std::size_t>(j + 1) * (W + 1) + i] -
              pre2[static_cast<std::size_t>(j) * (W + 1) + i] +
              count[static_cast<std::size_t>(j) * W + i];
        }
      }
      const auto box_sum = [&](int i0, int j0, int side) {
        return pre2[static_cast<std::size_t>(j0 + side) * (W + 1) + (i0 + side)] -
               pre2[static_cast<std::size_t>(j0) * (W + 1) + (i0 + side)] -
               pre2[static_cast<std::size_t>(j0 + side) * (W + 1) + i0] +
               pre2[static_cast<std::size_t>(j0) * (W + 1) + i0];
      };

      std::vector<double> xs, ys;
      for (int sz : p.sizes) {
        long long vacant = 0;
        const long long total =
            static_cast<long long>(W - sz + 1) * static_cast<long long>(H - sz + 1);
        for (int j0 = 0; j0 + sz <= H; ++j0)
          for (int i0 = 0; i0 + sz <= W; ++i0)
            if (box_sum(i0, j0, sz) == 0) ++vacant;
        const double freq = static_cast<double>(vacant) / static_cast<double>(total);
        per_seed_freq[static_cast<std::size_t>(s)].push_back(freq);
        if (freq > 0.0) {
          xs.push_back(static_cast<double>(sz));
          ys.push_back(std::log(freq));
        }
      }
      if (xs.size() >= 2) {
        slopes.push_back(fit_linear(xs, ys).slope);
        ++fit.seeds_used;
      }
    }

    std::vector<double> xs, ys;
    for (std::size_t zi = 0; zi < p.sizes.size(); ++zi) {
      double m = 0.0;
      for (int s = 0; s < p.seeds; ++s) m += per_seed_freq[static_cast<std::size_t>(s)][zi];
      m /= static_cast<double>(p.seeds);
      fit.freq_mean.push_back(m);
      if (m > 0.0) {
        xs.push_back(static_cast<double>(p.sizes[zi]));
        ys.push_back(std::log(m));
      }
    }
    if (xs.size() < 2)
      throw experiment_error("run_coverage: too few box sides with nonzero vacancy at lambda " +
                             std::to_string(lambda));
    fit.pooled = fit_linear(xs, ys);
    if (slopes.size() >= 2) {
      fit.slope_mean = mean(slopes);
      const double half =
          1.959963984540054 * sample_sd(slopes) / std::sqrt(static_cast<double>(slopes.size()));
      fit.slope_ci_lo = fit.slope_mean - half;
      fit.slope_ci_hi = fit.slope_mean + half;
    } else if (slopes.size() == 1) {
      fit.slope_mean = fit.slope_ci_lo = fit.slope_ci_hi = slopes.front();
    }
    rep.fits.push_back(fit);
  }
  return rep;
}

RouteStudyReport run_route_study(const RouteStudyParams& p) {
  if (p.lattices < 1 || p.pairs < 1)
    throw std::invalid_argument("run_route_study: lattices and pairs must be positive");
  if (p.ratio_bin_edges.size() < 2)
    throw std::invalid_argument("run_route_study: need at least two bin edges");
  RouteStudyReport rep;
  const std::size_t nbins = p.ratio_bin_edges.size() - 1;
  std::vector<std::vector<double>> bin_ratios(nbins);
  long long detours = 0;

  for (int l = 0; l < p.lattices; ++l) {
    const LatticeWindow lw =
        sample_site_lattice(p.n, p.n, p.p, substream_seed(p.seed, 2 * static_cast<std::uint64_t>(l)));
    const ClusterStats cs = label_clusters(lw);
    std::vector<Site> open_sites;
    for (int j = 0; j < lw.h; ++j)
      for (int i = 0; i < lw.w; ++i)
        if (lw.is_open(i, j)) open_sites.push_back({i, j});
    if (open_sites.size() < 2) throw experiment_error("run_route_study: lattice has no open pairs");

    std::mt19937_64 eng =
        make_engine(substream_seed(p.seed, 2 * static_cast<std::uint64_t>(l) + 1));
    std::uniform_int_distribution<std::size_t> pick(0, open_sites.size() - 1);
    for (int q = 0; q < p.pairs; ++q) {
      const Site src = open_sites[pick(eng)];
      Site dst = open_sites[pick(eng)];
      while (dst == src) dst = open_sites[pick(eng)];

      const RouteTrace tr = route(lw, src, dst);
      ++rep.pairs_total;
      detours += tr.bfs_invocations;
      const bool same =
          cs.label[static_cast<std::size_t>(src.second) * lw.w + src.first] ==
          cs.label[static_cast<std::size_t>(dst.second) * lw.w + dst.first];
      rep.same_cluster_pairs += same ? 1 : 0;
      if (tr.outcome == RouteOutcome::Delivered) {
        ++rep.delivered;
        if (same) ++rep.delivered_same_cluster;
        if (!same) rep.outcome_matches_cluster = false;
      } else {
        ++rep.unreachable;
        if (same) rep.outcome_matches_cluster = false;
      }

      if (tr.outcome == RouteOutcome::Delivered) {
        const long long l1 = std::llabs(static_cast<long long>(src.first) - dst.first) +
                             std::llabs(static_cast<long long>(src.second) - dst.second);
        const ChemDist cd = chemical_distance(lw, src.first, src.second, dst.first, dst.second);
        if (!cd.hops.has_value() || *cd.hops < 1)
          throw std::logic_error("run_route_study: delivered pair lacks an open path");
        for (std::size_t b = 0; b < nbins; ++b) {
          if (l1 >= p.ratio_bin_edges[b] && l1 < p.ratio_bin_edges[b + 1]) {
            bin_ratios[b].push_back(static_cast<double>(tr.probes) /
                                    static_cast<double>(*cd.hops));
            break;
          }
        }
      }
    }
  }

  rep.mean_detours =
      rep.pairs_total > 0 ? static_cast<double>(detours) / rep.pairs_total : 0.0;
  for (std::size_t b = 0; b < nbins; ++b) {
    RouteBin rb;
    rb.lo = p.ratio_bin_edges[b];
    rb.hi = p.ratio_bin_edges[b + 1];
    rb.count = static_cast<int>(bin_ratios[b].size());
    if (rb.count > 0) rb.probe_ratio_mean = mean(bin_ratios[b]);
    rep.bins.push_back(rb);
  }
  return rep;
}

}  // namespace sensnet
