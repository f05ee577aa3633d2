#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sensnet/graph.hpp"

using namespace sensnet;

namespace {

PointSet make_set(std::vector<Point> pts) {
  PointSet ps;
  ps.points = std::move(pts);
  ps.lambda = 1.0;
  ps.seed = 0;
  ps.window = Window{-1000.0, -1000.0, 1000.0, 1000.0, 0.0};
  return ps;
}

PointSet random_set(int n, double extent, std::uint64_t seed) {
  oracles::MixRng rng(seed);
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(0, extent), rng.uniform(0, extent)});
  return make_set(std::move(pts));
}

void check_invariants(const AdjGraph& g) {
  for (int u = 0; u < g.n; ++u) {
    const auto& row = g.adj[static_cast<std::size_t>(u)];
    CHECK(std::is_sorted(row.begin(), row.end()));
    CHECK(std::adjacent_find(row.begin(), row.end()) == row.end());
    for (int v : row) {
      CHECK(v != u);
      CHECK(g.has_edge(v, u));
    }
  }
}

}  // namespace

TEST_CASE("unit-disk edges appear exactly within the radius") {
  const AdjGraph g = build_udg(make_set({{0, 0}, {0.5, 0}, {2, 0}}));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("a pair at exactly the radius is connected") {
  const AdjGraph g = build_udg(make_set({{0, 0}, {1, 0}}));
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("unit-disk construction matches the quadratic scan") {
  const PointSet ps = random_set(2000, 40.0, 21);
  const AdjGraph g = build_udg(ps);
  CHECK(g.adj == oracles::brute_udg_adj(ps.points, 1.0));
  check_invariants(g);
}

TEST_CASE("radius scaling leaves the edge set alone when points scale too") {
  const PointSet base = random_set(300, 10.0, 4);
  const AdjGraph g1 = build_udg(base, 1.0);
  for (double c : {2.0, 3.0}) {
    PointSet scaled = base;
    for (Point& p : scaled.points) {
      p.x *= c;
      p.y *= c;
    }
    const AdjGraph gc = build_udg(scaled, c);
    CHECK(gc.adj == g1.adj);
  }
}

TEST_CASE("nearest-neighbour links on a line") {
  // x = 0, 1, 3, 7 with k = 1: each point links to its closer neighbour,
  // and the union is undirected.
  const AdjGraph g = build_knn(make_set({{0, 0}, {1, 0}, {3, 0}, {7, 0}}), 1);
  CHECK(g.edge_count() == 3);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
}

TEST_CASE("the undirected union can exceed degree k") {
  // A hub with five satellites arranged so each satellite's nearest
  // neighbour is the hub. With k = 1 the hub still ends up with degree 5.
  std::vector<Point> pts{{0, 0}};
  for (int i = 0; i < 5; ++i) {
    const double ang = 2.0 * 3.14159265358979323846 * i / 5.0;
    pts.push_back({std::cos(ang), std::sin(ang)});
  }
  const AdjGraph g = build_knn(make_set(std::move(pts)), 1);
  CHECK(g.adj[0].size() == 5);
}

TEST_CASE("nearest-neighbour construction matches the quadratic scan") {
  const PointSet ps = random_set(2000, 40.0, 8);
  const AdjGraph g = build_knn(ps, 10);
  CHECK(g.adj == oracles::brute_knn_adj(ps.points, 10));
  check_invariants(g);
}

TEST_CASE("degenerate vertex counts") {
  const AdjGraph lone = build_knn(make_set({{0, 0}}), 3);
  CHECK(lone.n == 1);
  CHECK(lone.edge_count() == 0);
  CHECK_THROWS_AS(build_knn(make_set({{0, 0}, {1, 0}}), 0), std::invalid_argument);
  CHECK_THROWS_AS(build_udg(make_set({{0, 0}}), 0.0), std::invalid_argument);
}

TEST_CASE("component labelling") {
  AdjGraph edgeless = build_udg(make_set({{0, 0}, {10, 0}, {20, 0}, {30, 0}, {40, 0}}));
  Components c = connected_components(edgeless);
  CHECK(c.sizes == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(c.largest == 0);

  AdjGraph path = build_udg(make_set({{0, 0}, {1, 0}, {2, 0}}));
  c = connected_components(path);
  CHECK(c.sizes == std::vector<int>{3});
  CHECK(c.labels == std::vector<int>{0, 0, 0});
}

TEST_CASE("component labelling matches a reference flood fill") {
  const PointSet ps = random_set(1200, 20.0, 33);
  const AdjGraph g = build_udg(ps);
  const Components c = connected_components(g);
  const std::vector<int> ref = oracles::bfs_labels(g.adj);
  REQUIRE(c.labels.size() == ref.size());
  // Both label in first-occurrence order, so they agree exactly.
  CHECK(c.labels == ref);
  long long total = 0;
  for (int s : c.sizes) total += s;
  CHECK(total == g.n);
}

TEST_CASE("graph distances in hops and in length") {
  const AdjGraph g = build_udg(make_set({{0, 0}, {1, 0}, {2, 0}, {50, 50}}));
  CHECK(graph_distance(g, 0, 0) == 0.0);
  CHECK(graph_distance(g, 0, 2) == 2.0);
  CHECK(graph_distance(g, 0, 2, true) == doctest::Approx(2.0));
  CHECK_FALSE(graph_distance(g, 0, 3).has_value());
  CHECK_THROWS_AS(graph_distance(g, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS(graph_distance(g, -1, 0), std::invalid_argument);
}

TEST_CASE("graph distances match a quadratic relaxation") {
  const PointSet ps = random_set(500, 12.0, 2);
  const AdjGraph g = build_udg(ps);
  oracles::MixRng rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const int u = rng.pick(g.n);
    const int v = rng.pick(g.n);
    for (bool weighted : {false, true}) {
      const auto got = graph_distance(g, u, v, weighted);
      const double want = oracles::slow_dijkstra(g, u, weighted)[static_cast<std::size_t>(v)];
      if (std::isfinite(want)) {
        REQUIRE(got.has_value());
        CHECK(*got == doctest::Approx(want));
      } else {
        CHECK_FALSE(got.has_value());
      }
    }
  }
}

TEST_CASE("edge list files are sorted u < v pairs") {
  const AdjGraph g = build_udg(make_set({{0, 0}, {1, 0}, {1.5, 0.5}}));
  const char* path = "edge_list_check.txt";
  write_edge_list(g, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == "0 1\n1 2\n");
  std::remove(path);
}
