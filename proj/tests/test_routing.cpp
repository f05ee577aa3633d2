#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sensnet/routing.hpp"

using namespace sensnet;

namespace {

LatticeWindow lattice_from(int w, int h, const char* rows) {
  // rows lists row 0 first; '#' marks an open site.
  LatticeWindow lw;
  lw.w = w;
  lw.h = h;
  lw.open.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  for (int j = 0; j < h; ++j)
    for (int i = 0; i < w; ++i)
      lw.open[static_cast<std::size_t>(j) * w + i] = rows[j * w + i] == '#' ? 1 : 0;
  return lw;
}

std::vector<Point> udg_tile_points(const TileGeom& g, TileId t) {
  const Point c = g.center(t);
  return {{c.x, c.y},       {c.x + 0.6, c.y}, {c.x - 0.6, c.y},
          {c.x, c.y + 0.6}, {c.x, c.y - 0.6}};
}

}  // namespace

TEST_CASE("the axis-ordered step closes the column gap first") {
  CHECK(compute_next({3, 0}, {3, 2}) == Site{3, 1});
  CHECK(compute_next({0, 0}, {2, 5}) == Site{1, 0});
  CHECK(compute_next({5, 5}, {4, 5}) == Site{4, 5});
  CHECK(compute_next({5, 5}, {5, 3}) == Site{5, 4});
  CHECK_THROWS_AS(compute_next({1, 1}, {1, 1}), std::logic_error);
}

TEST_CASE("the detour search stops at the nearest on-path site") {
  const LatticeWindow lw = lattice_from(4, 3,
                                        "####"
                                        "####"
                                        "####");
  const DetourResult r = dist_bfs(lw, {0, 0}, {3, 0});
  CHECK(r.found);
  CHECK(r.site == Site{1, 0});
  CHECK(r.path == std::vector<Site>{{0, 0}, {1, 0}});
  CHECK(r.probes > 0);
}

TEST_CASE("the detour search walks around a blocked column") {
  // Column 1 is closed except at the top; the path must climb over it.
  const LatticeWindow lw = lattice_from(4, 3,
                                        "#.##"
                                        "#.##"
                                        "####");
  const DetourResult r = dist_bfs(lw, {0, 0}, {3, 0});
  REQUIRE(r.found);
  // The first reachable on-path site is (2, 0), via the top row.
  CHECK(r.site == Site{2, 0});
  CHECK(r.path.front() == Site{0, 0});
  CHECK(r.path.back() == Site{2, 0});
  CHECK(r.path.size() == 7);
}

TEST_CASE("the detour search fails across a cluster boundary") {
  const LatticeWindow lw = lattice_from(5, 2,
                                        "##.##"
                                        "##.##");
  const DetourResult r = dist_bfs(lw, {1, 0}, {4, 0});
  CHECK_FALSE(r.found);
  CHECK_THROWS_AS(dist_bfs(lw, {2, 0}, {4, 0}), std::invalid_argument);
}

TEST_CASE("probe counts deduplicate across calls through a shared buffer") {
  const LatticeWindow lw = lattice_from(4, 3,
                                        "####"
                                        "####"
                                        "####");
  std::vector<char> probed(12, 0);
  const DetourResult first = dist_bfs(lw, {0, 0}, {3, 0}, &probed);
  const DetourResult second = dist_bfs(lw, {0, 0}, {3, 0}, &probed);
  CHECK(first.probes > 0);
  CHECK(second.probes == 0);
  std::vector<char> wrong(5, 0);
  CHECK_THROWS_AS(dist_bfs(lw, {0, 0}, {3, 0}, &wrong), std::invalid_argument);
}

TEST_CASE("routing on a fully open window follows the axis path") {
  const LatticeWindow lw = sample_site_lattice(8, 8, 1.0, 1);
  const RouteTrace t = route(lw, {0, 0}, {3, 2});
  CHECK(t.outcome == RouteOutcome::Delivered);
  CHECK(t.lattice_hops == 5);
  CHECK(t.sites.size() == 6);
  CHECK(t.sites.front() == Site{0, 0});
  CHECK(t.sites.back() == Site{3, 2});
  CHECK(t.bfs_invocations == 0);
  // Every visited site is looked up once, the source being free.
  CHECK(t.probes == 5);
}

TEST_CASE("routing detours around a single closed site") {
  const LatticeWindow lw = lattice_from(5, 3,
                                        "##.##"
                                        "#####"
                                        "#####");
  const RouteTrace t = route(lw, {0, 0}, {4, 0});
  CHECK(t.outcome == RouteOutcome::Delivered);
  CHECK(t.bfs_invocations == 1);
  // Optimal is 4 steps; one blockage costs at most 2 extra.
  CHECK(t.lattice_hops == 6);
  for (std::size_t s = 1; s < t.sites.size(); ++s) {
    const auto [i0, j0] = t.sites[s - 1];
    const auto [i1, j1] = t.sites[s];
    CHECK(std::abs(i1 - i0) + std::abs(j1 - j0) == 1);
    CHECK(lw.is_open(i1, j1));
  }
}

TEST_CASE("routing rejects closed endpoints") {
  const LatticeWindow lw = lattice_from(3, 1, "#.#");
  CHECK_THROWS_AS(route(lw, {1, 0}, {2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(route(lw, {0, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(route(lw, {-1, 0}, {0, 0}), std::invalid_argument);
}

TEST_CASE("delivery coincides with shared clusters") {
  oracles::MixRng rng(21);
  int delivered = 0, unreachable = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const LatticeWindow lw = sample_site_lattice(24, 24, 0.65, seed + 50);
    const auto labels = oracles::flood_labels(lw);
    for (int q = 0; q < 15; ++q) {
      const int i0 = rng.pick(24), j0 = rng.pick(24);
      const int i1 = rng.pick(24), j1 = rng.pick(24);
      if (!lw.is_open(i0, j0) || !lw.is_open(i1, j1)) continue;
      if (i0 == i1 && j0 == j1) continue;
      const RouteTrace t = route(lw, {i0, j0}, {i1, j1});
      const bool same = labels[static_cast<std::size_t>(j0) * 24 + i0] ==
                        labels[static_cast<std::size_t>(j1) * 24 + i1];
      if (same) {
        CHECK(t.outcome == RouteOutcome::Delivered);
        ++delivered;
      } else {
        CHECK(t.outcome == RouteOutcome::Unreachable);
        ++unreachable;
      }
      if (t.outcome == RouteOutcome::Delivered) {
        CHECK(t.sites.back() == Site{i1, j1});
        CHECK(t.lattice_hops == static_cast<long long>(t.sites.size()) - 1);
      }
    }
  }
  // The sweep must exercise both outcomes to mean anything.
  CHECK(delivered > 30);
  CHECK(unreachable > 15);
}

TEST_CASE("routing twice produces identical traces") {
  const LatticeWindow lw = sample_site_lattice(32, 32, 0.66, 123);
  for (int q = 0; q < 10; ++q) {
    const int i0 = q, j0 = 0, i1 = 31 - q, j1 = 31;
    if (!lw.is_open(i0, j0) || !lw.is_open(i1, j1)) continue;
    const RouteTrace a = route(lw, {i0, j0}, {i1, j1});
    const RouteTrace b = route(lw, {i0, j0}, {i1, j1});
    CHECK(a.outcome == b.outcome);
    CHECK(a.sites == b.sites);
    CHECK(a.probes == b.probes);
    CHECK(a.bfs_invocations == b.bfs_invocations);
  }
}

TEST_CASE("a trace expands to the overlay relay chain") {
  const TileGeom g = TileGeom::udg();
  std::vector<Point> pts;
  for (int i = 0; i < 4; ++i) {
    const auto tile = udg_tile_points(g, {i, 0});
    pts.insert(pts.end(), tile.begin(), tile.end());
  }
  PointSet ps;
  ps.points = std::move(pts);
  ps.lambda = 1.0;
  ps.seed = 0;
  ps.window = window_for_tiles(4, g.side);
  const Construction c = construct_subnet(ps, {g, 1.0, 0});
  const LatticeWindow lw = couple_lattice(c.tiles);
  REQUIRE(lw.is_open(0, 0));
  REQUIRE(lw.is_open(3, 0));

  const RouteTrace t = route(lw, {0, 0}, {3, 0});
  REQUIRE(t.outcome == RouteOutcome::Delivered);
  CHECK(t.lattice_hops == 3);
  const std::vector<int> walk = expand_route(c, lw, t);
  // Three links per lattice step.
  CHECK(walk.size() == 10);
  CHECK(walk.front() == *c.tiles.at({0, 0}).rep);
  CHECK(walk.back() == *c.tiles.at({3, 0}).rep);
  for (std::size_t s = 1; s < walk.size(); ++s) CHECK(c.subnet.has_edge(walk[s - 1], walk[s]));

  // A one-site trace is just that tile's representative.
  RouteTrace still;
  still.src = {1, 0};
  still.dst = {1, 0};
  still.outcome = RouteOutcome::Delivered;
  still.sites = {{1, 0}};
  const std::vector<int> lone = expand_route(c, lw, still);
  CHECK(lone == std::vector<int>{*c.tiles.at({1, 0}).rep});

  // The lattice must be the coupling of the same construction.
  const LatticeWindow foreign = sample_site_lattice(4, 4, 1.0, 1);
  CHECK_THROWS_AS(expand_route(c, foreign, t), std::invalid_argument);
}
