#include "sensnet/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sensnet/config.hpp"
#include "sensnet/experiments.hpp"
#include "sensnet/geometry.hpp"
#include "sensnet/lattice.hpp"
#include "sensnet/point_set.hpp"
#include "sensnet/reports.hpp"
#include "sensnet/routing.hpp"
#include "sensnet/subnet.hpp"
#include "sensnet/threshold.hpp"
#include "sensnet/tiling.hpp"

namespace sensnet {
namespace {

using nlohmann::ordered_json;

const char* const kUsage = R"(usage: sensnet <command> [key=value ...]

commands
  generate        sample a Poisson point set over a tile window
  build-subnet    construct the sparse overlay and summarize it
  percolation     cluster statistics of a coupled or iid site lattice
  find-threshold  locate the density or neighbour budget where tiles turn good
  stretch         path stretch between overlay representatives
  coverage        frequency of node-free boxes by side length
  route           greedy lattice routing with detours
  render          draw the overlay as SVG, with optional rasters

shared keys
  model=udg|nn tiles=N lambda=F seed=U k=N r0=F a=F lens_samples=N
  radius=F margin_tiles=F threads=N out=FILE config=FILE

config=FILE loads key=value lines first; direct tokens override them.
out and *_out name report files. Unknown keys are rejected with a list
of what the command accepts.
)";

const char* const kCommandKeys[][2] = {
    {"generate", "out points_out"},
    {"build-subnet", "distributed out edges_out svg_out"},
    {"percolation", "source p n height probs seeds out csv_out pbm_out"},
    {"find-threshold", "param lo hi bracket target tol trials trial_cap out"},
    {"stretch", "bin_edges betas pairs_per_bin max_sources precheck_trials out csv_out"},
    {"coverage", "lambdas sizes seeds precheck_trials out csv_out"},
    {"route", "source p n height lattices pairs bin_edges src_i src_j dst_i dst_j out"},
    {"render", "svg_out pbm_out raster_out raster_n out"},
};

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> words;
  std::string cur;
  for (char ch : s) {
    if (ch == ' ') {
      if (!cur.empty()) words.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) words.push_back(cur);
  return words;
}

// Every command accepts the model and window keys; the command-specific ones
// come from the table above.
void check_keys(const Config& cfg, const std::string& command) {
  std::vector<std::string> allowed = {"model",        "tiles",  "lambda",       "seed",
                                      "k",            "r0",     "a",            "lens_samples",
                                      "radius",       "margin_tiles", "threads"};
  for (const auto& row : kCommandKeys) {
    if (command == row[0]) {
      for (auto& w : split_words(row[1])) allowed.push_back(w);
      break;
    }
  }
  cfg.require_known(allowed);
}

std::string model_from(const Config& cfg) {
  if (!cfg.has("model")) throw std::invalid_argument("missing required key: model");
  std::string model = cfg.get_str("model", "");
  std::transform(model.begin(), model.end(), model.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (model != "udg" && model != "nn")
    throw std::invalid_argument("model must be udg or nn, got " + model);
  return model;
}

TileGeom geom_from(const Config& cfg) {
  if (model_from(cfg) == "udg") return TileGeom::udg(cfg.get_double("r0", 0.25));
  return TileGeom::nn(cfg.get_double("a", 0.893),
                      static_cast<int>(cfg.get_int("lens_samples", 720)));
}

int base_k(const Config& cfg, const TileGeom& g) {
  const long long def = g.kind == TileGeom::Kind::KNearest ? 188 : 0;
  const long long k = cfg.get_int("k", def);
  if (g.kind == TileGeom::Kind::KNearest && k < 1)
    throw std::invalid_argument("k must be at least 1 for the nn model");
  if (g.kind == TileGeom::Kind::UnitDisk && k != 0)
    throw std::invalid_argument("k has no effect in the udg model; drop it");
  return static_cast<int>(k);
}

double default_lambda(const TileGeom& g) {
  return g.kind == TileGeom::Kind::UnitDisk ? 3.0 : 1.0;
}

struct Instance {
  Window window{};
  PointSet points;
  ConstructParams params{};
};

Instance instance_from(const Config& cfg) {
  Instance inst;
  inst.params.geom = geom_from(cfg);
  inst.params.radius = cfg.get_double("radius", 1.0);
  inst.params.k = base_k(cfg, inst.params.geom);
  const int tiles = static_cast<int>(cfg.get_int("tiles", 16));
  const double margin = cfg.get_double("margin_tiles", 2.0);
  inst.window = window_for_tiles(tiles, inst.params.geom.side, margin);
  const double lambda = cfg.get_double("lambda", default_lambda(inst.params.geom));
  inst.points = sample_poisson(inst.window, lambda, cfg.get_u64("seed", 1));
  return inst;
}

ordered_json window_json(const Window& w) {
  return ordered_json{{"x_min", w.x_min},
                      {"y_min", w.y_min},
                      {"x_max", w.x_max},
                      {"y_max", w.y_max},
                      {"margin", w.margin}};
}

ordered_json subnet_json(const Construction& c) {
  const SubnetGraph& sg = c.subnet;
  long long max_deg = 0;
  for (const auto& nb : sg.adj) max_deg = std::max<long long>(max_deg, (long long)nb.size());
  long long reps = 0, relays = 0, both = 0;
  for (Role r : sg.roles) {
    if (r == Role::Representative) ++reps;
    else if (r == Role::Relay) ++relays;
    else ++both;
  }
  // Component count by scanning the overlay adjacency directly.
  const int n = static_cast<int>(sg.members.size());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int comps = 0;
  long long largest = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    long long size = 0;
    stack.assign(1, s);
    label[static_cast<std::size_t>(s)] = comps;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++size;
      for (int vb : sg.adj[static_cast<std::size_t>(u)]) {
        const int v = sg.index_of(vb);
        if (label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = comps;
          stack.push_back(v);
        }
      }
    }
    largest = std::max(largest, size);
    ++comps;
  }
  int good = 0;
  for (const auto& ts : c.tiles.cells) good += ts.good ? 1 : 0;
  ordered_json j;
  j["tiles"] = ordered_json{{"w", c.tiles.w}, {"h", c.tiles.h}, {"good", good}};
  j["nodes"] = sg.members.size();
  j["edges"] = sg.edge_count();
  j["max_degree"] = max_deg;
  j["roles"] = ordered_json{{"representative", reps}, {"relay", relays}, {"both", both}};
  j["components"] = ordered_json{{"count", comps}, {"largest", largest}};
  j["understaffed"] = c.understaffed;
  j["elect_nonclique"] = c.elect_nonclique;
  j["wiring_failures"] = c.wiring_failures;
  j["anomalies"] = c.anomaly_log;
  return j;
}

void emit(const ordered_json& j, const Config& cfg) {
  const std::string out = cfg.get_str("out", "");
  if (out.empty()) {
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    write_json(j, out);
    std::printf("wrote %s\n", out.c_str());
  }
}

int cmd_generate(const Config& cfg) {
  Instance inst = instance_from(cfg);
  const std::string points_out = cfg.get_str("points_out", "");
  if (!points_out.empty()) {
    std::vector<std::vector<double>> rows;
    rows.reserve(inst.points.points.size());
    for (std::size_t i = 0; i < inst.points.points.size(); ++i)
      rows.push_back({static_cast<double>(i), inst.points.points[i].x, inst.points.points[i].y});
    write_csv(points_out, {"id", "x", "y"}, rows);
  }
  ordered_json j = provenance_json("generate", cfg);
  j["n"] = inst.points.n();
  j["window"] = window_json(inst.window);
  j["intensity_per_area"] = static_cast<double>(inst.points.n()) / inst.window.padded_area();
  emit(j, cfg);
  return 0;
}

int cmd_build_subnet(const Config& cfg) {
  Instance inst = instance_from(cfg);
  const bool distributed = cfg.get_bool("distributed", false);
  AuditStats audit;
  Construction c = distributed ? construct_subnet_distributed(inst.points, inst.params, &audit)
                               : construct_subnet(inst.points, inst.params);
  ordered_json j = provenance_json("build-subnet", cfg);
  j["n_points"] = inst.points.n();
  j["window"] = window_json(inst.window);
  j["subnet"] = subnet_json(c);
  if (distributed) {
    j["audit"] = ordered_json{{"reads", audit.reads},
                              {"violations", audit.violations},
                              {"rounds", audit.rounds},
                              {"divergences", audit.divergences}};
  }
  const std::string edges_out = cfg.get_str("edges_out", "");
  if (!edges_out.empty()) {
    std::FILE* f = std::fopen(edges_out.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open " + edges_out);
    const SubnetGraph& sg = c.subnet;
    for (std::size_t u = 0; u < sg.members.size(); ++u)
      for (int vb : sg.adj[u])
        if (sg.members[u] < vb) std::fprintf(f, "%d %d\n", sg.members[u], vb);
    std::fclose(f);
  }
  const std::string svg_out = cfg.get_str("svg_out", "");
  if (!svg_out.empty()) write_svg_subnet(c.subnet, inst.window, svg_out);
  emit(j, cfg);
  return 0;
}

ordered_json clusters_json(const LatticeWindow& lw, const ClusterStats& cs) {
  long long open_sites = 0;
  for (char v : lw.open) open_sites += v ? 1 : 0;
  ordered_json j;
  j["lattice"] = ordered_json{{"w", lw.w}, {"h", lw.h}, {"open", open_sites}};
  j["clusters"] = ordered_json{{"count", cs.sizes.size()},
                               {"largest", cs.largest_size},
                               {"theta_hat", cs.theta_hat},
                               {"spanning", cs.spanning}};
  return j;
}

int cmd_percolation(const Config& cfg) {
  const std::string source = cfg.get_str("source", "coupled");
  ordered_json j = provenance_json("percolation", cfg);
  const std::string pbm_out = cfg.get_str("pbm_out", "");
  if (source == "coupled") {
    Instance inst = instance_from(cfg);
    Construction c = construct_subnet(inst.points, inst.params);
    LatticeWindow lw = couple_lattice(c.tiles);
    ClusterStats cs = label_clusters(lw);
    CouplingCheck check = verify_coupling(c, lw);
    j.update(clusters_json(lw, cs));
    j["subnet"] = subnet_json(c);
    j["coupling"] = ordered_json{{"ok", check.ok}, {"detail", check.detail}};
    if (!pbm_out.empty()) write_pbm(lw, pbm_out);
  } else if (source == "iid") {
    const int n = static_cast<int>(cfg.get_int("n", 128));
    const std::uint64_t seed = cfg.get_u64("seed", 1);
    if (cfg.has("probs")) {
      const std::vector<double> probs = cfg.get_list("probs", {});
      const int seeds = static_cast<int>(cfg.get_int("seeds", 20));
      std::vector<ThetaPoint> curve = theta_curve(probs, n, seeds, seed);
      ordered_json rows = ordered_json::array();
      std::vector<std::vector<double>> csv_rows;
      for (const ThetaPoint& tp : curve) {
        rows.push_back(ordered_json{{"p", tp.p},
                                    {"theta_mean", tp.theta_mean},
                                    {"theta_sd", tp.theta_sd},
                                    {"spanning_rate", tp.spanning_rate}});
        csv_rows.push_back({tp.p, tp.theta_mean, tp.theta_sd, tp.spanning_rate});
      }
      j["n"] = n;
      j["seeds"] = seeds;
      j["curve"] = rows;
      const std::string csv_out = cfg.get_str("csv_out", "");
      if (!csv_out.empty())
        write_csv(csv_out, {"p", "theta_mean", "theta_sd", "spanning_rate"}, csv_rows);
    } else {
      const double p = cfg.get_double("p", 0.6);
      const int h = static_cast<int>(cfg.get_int("height", n));
      LatticeWindow lw = sample_site_lattice(n, h, p, seed);
      ClusterStats cs = label_clusters(lw);
      j.update(clusters_json(lw, cs));
      if (!pbm_out.empty()) write_pbm(lw, pbm_out);
    }
  } else {
    throw std::invalid_argument("source must be coupled or iid, got " + source);
  }
  emit(j, cfg);
  return 0;
}

ordered_json threshold_json(const ThresholdReport& r) {
  ordered_json j;
  j["parameter"] = r.parameter;
  j["estimate"] = r.estimate;
  j["bracket"] = ordered_json{{"lo", r.bracket_lo}, {"hi", r.bracket_hi}};
  j["p_at_estimate"] = r.p_at_estimate;
  j["p_ci"] = ordered_json{{"lo", r.p_ci_lo}, {"hi", r.p_ci_hi}};
  j["trials_used"] = r.trials_used;
  j["target"] = r.target;
  j["tol"] = r.tol;
  j["notes"] = r.notes;
  return j;
}

// Bracket endpoints come from lo/hi or from bracket=LO..HI.
std::pair<double, double> bracket_from(const Config& cfg, double def_lo, double def_hi) {
  if (cfg.has("bracket")) {
    if (cfg.has("lo") || cfg.has("hi"))
      throw std::invalid_argument("give either bracket or lo/hi, not both");
    const std::string s = cfg.get_str("bracket", "");
    const std::size_t dots = s.find("..");
    if (dots == std::string::npos || dots == 0 || dots + 2 >= s.size())
      throw std::invalid_argument("bracket must look like LO..HI, got " + s);
    std::size_t used = 0;
    double lo = 0.0, hi = 0.0;
    try {
      lo = std::stod(s.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(s);
      hi = std::stod(s.substr(dots + 2), &used);
      if (used != s.size() - dots - 2) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("bracket must look like LO..HI, got " + s);
    }
    return {lo, hi};
  }
  return {cfg.get_double("lo", def_lo), cfg.get_double("hi", def_hi)};
}

int cmd_find_threshold(const Config& cfg) {
  const TileGeom geom = geom_from(cfg);
  const std::string param = cfg.get_str("param", geom.kind == TileGeom::Kind::UnitDisk ? "lambda" : "k");
  const double target = cfg.get_double("target", kSiteThreshold);
  const long long trials = cfg.get_int("trials", 2000);
  const long long trial_cap = cfg.get_int("trial_cap", 50000);
  const std::uint64_t seed = cfg.get_u64("seed", 1);
  const int threads = static_cast<int>(cfg.get_int("threads", 0));
  ordered_json j = provenance_json("find-threshold", cfg);
  if (param == "lambda") {
    if (geom.kind != TileGeom::Kind::UnitDisk)
      throw std::invalid_argument("param=lambda supports the udg model only");
    base_k(cfg, geom);
    const auto [lo, hi] = bracket_from(cfg, 0.5, 12.0);
    ThresholdReport r = find_threshold_lambda(geom, lo, hi, target, cfg.get_double("tol", 0.05),
                                              trials, trial_cap, seed, threads);
    j["report"] = threshold_json(r);
  } else if (param == "k") {
    if (geom.kind != TileGeom::Kind::KNearest)
      throw std::invalid_argument("param=k requires model=nn");
    const auto [lo, hi] = bracket_from(cfg, 150.0, 230.0);
    ThresholdReport r = find_threshold_k(geom, cfg.get_double("lambda", 1.0),
                                         static_cast<int>(lo), static_cast<int>(hi), target,
                                         trials, trial_cap, seed, threads);
    j["report"] = threshold_json(r);
  } else if (param == "rate") {
    const int k = base_k(cfg, geom);
    const double lambda = cfg.get_double("lambda", default_lambda(geom));
    WilsonCI ci = estimate_good_prob(geom, lambda, k, trials, seed, threads);
    j["report"] = ordered_json{{"parameter", "rate"},
                               {"lambda", lambda},
                               {"k", k},
                               {"p_hat", ci.p_hat},
                               {"p_ci", ordered_json{{"lo", ci.lo}, {"hi", ci.hi}}},
                               {"trials", ci.trials}};
  } else {
    throw std::invalid_argument("param must be lambda, k, or rate, got " + param);
  }
  emit(j, cfg);
  return 0;
}

std::vector<std::pair<double, double>> bins_from_edges(const std::vector<double>& edges) {
  if (edges.size() < 2) throw std::invalid_argument("bin_edges needs at least two values");
  std::vector<std::pair<double, double>> bins;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i] < edges[i + 1]))
      throw std::invalid_argument("bin_edges must be strictly increasing");
    bins.emplace_back(edges[i], edges[i + 1]);
  }
  return bins;
}

int cmd_stretch(const Config& cfg) {
  StretchParams p;
  p.geom = geom_from(cfg);
  p.k = base_k(cfg, p.geom);
  p.radius = cfg.get_double("radius", 1.0);
  if (!cfg.has("lambda")) throw std::invalid_argument("stretch: lambda is required");
  p.lambda = cfg.get_double("lambda", 0.0);
  p.tiles = static_cast<int>(cfg.get_int("tiles", p.tiles));
  p.seed = cfg.get_u64("seed", p.seed);
  p.bins = bins_from_edges(cfg.get_list("bin_edges", {10.0, 20.0, 40.0, 80.0}));
  p.pairs_per_bin = static_cast<int>(cfg.get_int("pairs_per_bin", p.pairs_per_bin));
  p.max_sources = static_cast<int>(cfg.get_int("max_sources", p.max_sources));
  p.betas = cfg.get_list("betas", p.betas);
  p.precheck_trials = cfg.get_int("precheck_trials", p.precheck_trials);
  p.threads = static_cast<int>(cfg.get_int("threads", 0));
  StretchReport r = run_stretch(p);
  ordered_json j = provenance_json("stretch", cfg);
  j["p_good"] = ordered_json{
      {"p_hat", r.p_good.p_hat}, {"lo", r.p_good.lo}, {"hi", r.p_good.hi}, {"trials", r.p_good.trials}};
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["component_nodes"] = r.component_nodes;
  j["alpha_hat"] = r.alpha_hat;
  j["alpha_lattice_hat"] = r.alpha_lattice_hat;
  ordered_json bins = ordered_json::array();
  std::vector<std::vector<double>> csv_rows;
  for (const StretchBin& b : r.bins) {
    bins.push_back(ordered_json{{"lo", b.lo},
                                {"hi", b.hi},
                                {"count", b.count},
                                {"ratio_p50", b.ratio_p50},
                                {"ratio_p99", b.ratio_p99},
                                {"ratio_max", b.ratio_max},
                                {"exceed_frac", b.exceed_frac},
                                {"hop_ratio_p99", b.hop_ratio_p99}});
    csv_rows.push_back({b.lo, b.hi, static_cast<double>(b.count), b.ratio_p50, b.ratio_p99,
                        b.ratio_max, b.exceed_frac, b.hop_ratio_p99});
  }
  j["bins"] = bins;
  ordered_json power = ordered_json::array();
  for (const PowerStretchRow& row : r.power)
    power.push_back(ordered_json{{"beta", row.beta}, {"p99", row.p99}, {"max", row.max}});
  j["power"] = power;
  const std::string csv_out = cfg.get_str("csv_out", "");
  if (!csv_out.empty())
    write_csv(csv_out,
              {"lo", "hi", "count", "ratio_p50", "ratio_p99", "ratio_max", "exceed_frac",
               "hop_ratio_p99"},
              csv_rows);
  emit(j, cfg);
  return 0;
}

int cmd_coverage(const Config& cfg) {
  CoverageParams p;
  p.geom = geom_from(cfg);
  p.k = base_k(cfg, p.geom);
  p.radius = cfg.get_double("radius", 1.0);
  p.lambdas = cfg.get_list("lambdas", p.lambdas);
  p.tiles = static_cast<int>(cfg.get_int("tiles", p.tiles));
  p.seeds = static_cast<int>(cfg.get_int("seeds", p.seeds));
  p.seed = cfg.get_u64("seed", p.seed);
  if (cfg.has("sizes")) {
    p.sizes.clear();
    for (double v : cfg.get_list("sizes", {}))
      p.sizes.push_back(static_cast<int>(v));
  }
  p.precheck_trials = cfg.get_int("precheck_trials", p.precheck_trials);
  p.threads = static_cast<int>(cfg.get_int("threads", 0));
  CoverageReport r = run_coverage(p);
  ordered_json j = provenance_json("coverage", cfg);
  ordered_json fits = ordered_json::array();
  std::vector<std::vector<double>> csv_rows;
  for (const CoverageFit& f : r.fits) {
    ordered_json sizes = ordered_json::array();
    for (std::size_t i = 0; i < f.sizes.size(); ++i) {
      sizes.push_back(ordered_json{{"side", f.sizes[i]}, {"freq_mean", f.freq_mean[i]}});
      csv_rows.push_back({f.lambda, static_cast<double>(f.sizes[i]), f.freq_mean[i]});
    }
    fits.push_back(ordered_json{{"lambda", f.lambda},
                                {"sizes", sizes},
                                {"slope", f.pooled.slope},
                                {"intercept", f.pooled.intercept},
                                {"r2", f.pooled.r2},
                                {"slope_mean", f.slope_mean},
                                {"slope_ci", ordered_json{{"lo", f.slope_ci_lo}, {"hi", f.slope_ci_hi}}},
                                {"seeds_used", f.seeds_used},
                                {"note", f.note}});
  }
  j["fits"] = fits;
  const std::string csv_out = cfg.get_str("csv_out", "");
  if (!csv_out.empty()) write_csv(csv_out, {"lambda", "side", "freq_mean"}, csv_rows);
  emit(j, cfg);
  return 0;
}

int cmd_route(const Config& cfg) {
  const std::string source = cfg.get_str("source", "iid");
  const bool single = cfg.has("src_i") || cfg.has("src_j") || cfg.has("dst_i") || cfg.has("dst_j");
  ordered_json j = provenance_json("route", cfg);
  if (single) {
    for (const char* key : {"src_i", "src_j", "dst_i", "dst_j"})
      if (!cfg.has(key)) throw std::invalid_argument(std::string("route: missing ") + key);
    const Site src{static_cast<int>(cfg.get_int("src_i", 0)),
                   static_cast<int>(cfg.get_int("src_j", 0))};
    const Site dst{static_cast<int>(cfg.get_int("dst_i", 0)),
                   static_cast<int>(cfg.get_int("dst_j", 0))};
    LatticeWindow lw;
    Construction c;
    if (source == "coupled") {
      Instance inst = instance_from(cfg);
      c = construct_subnet(inst.points, inst.params);
      lw = couple_lattice(c.tiles);
    } else if (source == "iid") {
      const int n = static_cast<int>(cfg.get_int("n", 128));
      lw = sample_site_lattice(n, static_cast<int>(cfg.get_int("height", n)),
                               cfg.get_double("p", 0.65), cfg.get_u64("seed", 1));
    } else {
      throw std::invalid_argument("source must be coupled or iid, got " + source);
    }
    RouteTrace t = route(lw, src, dst);
    ordered_json sites = ordered_json::array();
    for (const Site& s : t.sites) sites.push_back(ordered_json::array({s.first, s.second}));
    j["src"] = ordered_json::array({src.first, src.second});
    j["dst"] = ordered_json::array({dst.first, dst.second});
    j["outcome"] = t.outcome == RouteOutcome::Delivered ? "delivered" : "unreachable";
    j["lattice_hops"] = t.lattice_hops;
    j["probes"] = t.probes;
    j["bfs_invocations"] = t.bfs_invocations;
    j["sites"] = sites;
    if (source == "coupled" && t.outcome == RouteOutcome::Delivered) {
      std::vector<int> nodes = expand_route(c, lw, t);
      j["node_path"] = nodes;
      j["node_hops"] = nodes.empty() ? 0 : static_cast<long long>(nodes.size()) - 1;
    }
  } else {
    if (source != "iid")
      throw std::invalid_argument("route study supports source=iid only; give src_i/src_j/"
                                  "dst_i/dst_j for a single coupled route");
    RouteStudyParams p;
    p.p = cfg.get_double("p", p.p);
    p.n = static_cast<int>(cfg.get_int("n", p.n));
    p.lattices = static_cast<int>(cfg.get_int("lattices", p.lattices));
    p.pairs = static_cast<int>(cfg.get_int("pairs", p.pairs));
    p.seed = cfg.get_u64("seed", p.seed);
    if (cfg.has("bin_edges")) {
      p.ratio_bin_edges.clear();
      for (double v : cfg.get_list("bin_edges", {}))
        p.ratio_bin_edges.push_back(static_cast<long long>(v));
    }
    RouteStudyReport r = run_route_study(p);
    j["pairs_total"] = r.pairs_total;
    j["delivered"] = r.delivered;
    j["unreachable"] = r.unreachable;
    j["same_cluster_pairs"] = r.same_cluster_pairs;
    j["delivered_same_cluster"] = r.delivered_same_cluster;
    j["outcome_matches_cluster"] = r.outcome_matches_cluster;
    j["mean_detours"] = r.mean_detours;
    ordered_json bins = ordered_json::array();
    for (const RouteBin& b : r.bins)
      bins.push_back(ordered_json{
          {"lo", b.lo}, {"hi", b.hi}, {"count", b.count}, {"probe_ratio_mean", b.probe_ratio_mean}});
    j["bins"] = bins;
  }
  emit(j, cfg);
  return 0;
}

int cmd_render(const Config& cfg) {
  const std::string svg_out = cfg.get_str("svg_out", "");
  const std::string raster_out = cfg.get_str("raster_out", "");
  const std::string pbm_out = cfg.get_str("pbm_out", "");
  if (svg_out.empty() && raster_out.empty() && pbm_out.empty())
    throw std::invalid_argument("render: give at least one of svg_out, pbm_out, raster_out");
  ordered_json j = provenance_json("render", cfg);
  ordered_json made = ordered_json::array();
  if (!raster_out.empty()) {
    region_raster_csv(geom_from(cfg), static_cast<int>(cfg.get_int("raster_n", 400)), raster_out);
    made.push_back("raster");
  }
  if (!svg_out.empty() || !pbm_out.empty()) {
    Instance inst = instance_from(cfg);
    Construction c = construct_subnet(inst.points, inst.params);
    if (!svg_out.empty()) {
      write_svg_subnet(c.subnet, inst.window, svg_out);
      made.push_back("svg");
    }
    if (!pbm_out.empty()) {
      write_pbm(couple_lattice(c.tiles), pbm_out);
      made.push_back("pbm");
    }
    j["subnet"] = subnet_json(c);
  }
  j["artifacts"] = made;
  emit(j, cfg);
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args) {
  if (args.empty() || args[0] == "help" || args[0] == "-h" || args[0] == "--help") {
    std::fputs(kUsage, args.empty() ? stderr : stdout);
    return args.empty() ? 1 : 0;
  }
  const std::string command = args[0];
  using Handler = int (*)(const Config&);
  const std::pair<const char*, Handler> table[] = {
      {"generate", cmd_generate},        {"build-subnet", cmd_build_subnet},
      {"percolation", cmd_percolation},  {"find-threshold", cmd_find_threshold},
      {"stretch", cmd_stretch},          {"coverage", cmd_coverage},
      {"route", cmd_route},              {"render", cmd_render},
  };
  Handler handler = nullptr;
  for (const auto& [name, fn] : table)
    if (command == name) handler = fn;
  if (handler == nullptr) {
    std::fprintf(stderr, "unknown command: %s\n%s", command.c_str(), kUsage);
    return 1;
  }
  try {
    const std::vector<std::string> tokens(args.begin() + 1, args.end());
    Config cfg = Config::from_tokens(tokens);
    check_keys(cfg, command);
    return handler(cfg);
  } catch (const experiment_error& e) {
    std::fprintf(stderr, "refused: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}

}  // namespace sensnet
