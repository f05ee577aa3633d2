#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "sensnet/lattice.hpp"

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

}  // namespace

TEST_CASE("degenerate openness probabilities") {
  const LatticeWindow all = sample_site_lattice(8, 6, 1.0, 1);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 8; ++i) CHECK(all.is_open(i, j));
  const LatticeWindow none = sample_site_lattice(8, 6, 0.0, 1);
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 8; ++i) CHECK_FALSE(none.is_open(i, j));
  CHECK_THROWS_AS(sample_site_lattice(8, 6, -0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_site_lattice(8, 6, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_site_lattice(0, 6, 0.5, 1), std::invalid_argument);
}

TEST_CASE("open fraction concentrates at p") {
  const double p = 0.37;
  double total = 0.0;
  const int seeds = 1000;
  const int sites = 100;
  for (int s = 0; s < seeds; ++s) {
    const LatticeWindow lw = sample_site_lattice(10, 10, p, static_cast<std::uint64_t>(s));
    for (char c : lw.open) total += c;
  }
  const double mean = total / (seeds * sites);
  const double se = std::sqrt(p * (1 - p) / (seeds * sites));
  CHECK(std::abs(mean - p) < 4.0 * se);
}

TEST_CASE("sampling is deterministic in the seed") {
  const LatticeWindow a = sample_site_lattice(16, 16, 0.6, 9);
  const LatticeWindow b = sample_site_lattice(16, 16, 0.6, 9);
  CHECK(a.open == b.open);
  const LatticeWindow c = sample_site_lattice(16, 16, 0.6, 10);
  CHECK(a.open != c.open);
}

TEST_CASE("a full lattice is one spanning cluster") {
  const LatticeWindow lw = sample_site_lattice(12, 12, 1.0, 1);
  const ClusterStats cs = label_clusters(lw);
  CHECK(cs.sizes.size() == 1);
  CHECK(cs.largest_size == 144);
  CHECK(cs.theta_hat == doctest::Approx(1.0));
  CHECK(cs.spanning);
}

TEST_CASE("clusters use four-neighbour adjacency only") {
  // Two diagonal sites do not merge.
  const LatticeWindow lw = lattice_from(2, 2,
                                        "#."
                                        ".#");
  const ClusterStats cs = label_clusters(lw);
  CHECK(cs.sizes.size() == 2);
  CHECK(cs.largest_size == 1);
  CHECK_FALSE(cs.spanning);
}

TEST_CASE("spanning means touching both vertical edges") {
  const LatticeWindow bar = lattice_from(4, 3,
                                         "...."
                                         "####"
                                         "....");
  CHECK(label_clusters(bar).spanning);
  const LatticeWindow stub = lattice_from(4, 3,
                                          "...."
                                          "###."
                                          "....");
  CHECK_FALSE(label_clusters(stub).spanning);
}

TEST_CASE("cluster labelling agrees with a reference flood fill") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const LatticeWindow lw = sample_site_lattice(64, 64, 0.55 + 0.005 * seed, seed);
    const ClusterStats got = label_clusters(lw);
    const std::vector<int> want = oracles::flood_labels(lw);
    CHECK(got.label == want);
    long long open_total = 0;
    for (char c : lw.open) open_total += c;
    long long size_total = 0;
    for (long long s : got.sizes) size_total += s;
    CHECK(size_total == open_total);
  }
}

TEST_CASE("chemical distance counts fewest open steps") {
  const LatticeWindow open4 = sample_site_lattice(9, 9, 1.0, 1);
  CHECK(chemical_distance(open4, 1, 1, 1, 2).hops == 1);
  CHECK(chemical_distance(open4, 0, 0, 5, 7).hops == 12);
  CHECK(chemical_distance(open4, 0, 0, 5, 7).l1 == 12);
  CHECK(chemical_distance(open4, 3, 3, 3, 3).hops == 0);

  const LatticeWindow wall = lattice_from(3, 3,
                                          "###"
                                          "..#"
                                          "###");
  const ChemDist around = chemical_distance(wall, 0, 0, 0, 2);
  CHECK(around.hops == 6);
  CHECK(around.l1 == 2);

  const LatticeWindow split = lattice_from(3, 1, "#.#");
  CHECK_FALSE(chemical_distance(split, 0, 0, 2, 0).hops.has_value());

  CHECK_THROWS_AS(chemical_distance(split, 1, 0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(chemical_distance(split, -1, 0, 2, 0), std::invalid_argument);
}

TEST_CASE("chemical distance matches the oracle on random windows") {
  oracles::MixRng rng(30);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LatticeWindow lw = sample_site_lattice(32, 32, 0.7, seed + 400);
    for (int q = 0; q < 20; ++q) {
      const int i0 = rng.pick(32), j0 = rng.pick(32);
      const int i1 = rng.pick(32), j1 = rng.pick(32);
      if (!lw.is_open(i0, j0) || !lw.is_open(i1, j1)) continue;
      const ChemDist got = chemical_distance(lw, i0, j0, i1, j1);
      const auto want = oracles::open_path_hops(lw, i0, j0, i1, j1);
      CHECK(got.hops == want);
      CHECK(got.l1 == std::abs(i1 - i0) + std::abs(j1 - j0));
    }
  }
}

TEST_CASE("detour overhead stays tame above the critical point") {
  // p99 of hops over separation should not grow with distance at p = 0.65.
  const double p = 0.65;
  std::vector<double> p99;
  for (long long d : {10, 20, 40}) {
    std::vector<double> ratios;
    const int n = static_cast<int>(d) + 20;
    for (std::uint64_t seed = 0; ratios.size() < 300 && seed < 3000; ++seed) {
      const LatticeWindow lw =
          sample_site_lattice(n, 21, p, seed * 131 + static_cast<std::uint64_t>(d));
      const int i0 = 5, j0 = 10, i1 = 5 + static_cast<int>(d), j1 = 10;
      if (!lw.is_open(i0, j0) || !lw.is_open(i1, j1)) continue;
      const ChemDist cd = chemical_distance(lw, i0, j0, i1, j1);
      if (!cd.hops.has_value()) continue;
      ratios.push_back(static_cast<double>(*cd.hops) / static_cast<double>(d));
    }
    REQUIRE(ratios.size() == 300);
    std::sort(ratios.begin(), ratios.end());
    p99.push_back(ratios[static_cast<std::size_t>(ratios.size() * 99 / 100)]);
  }
  CHECK(p99[1] <= p99[0] * 1.15);
  CHECK(p99[2] <= p99[1] * 1.15);
}

TEST_CASE("coupling opens exactly the good tiles") {
  const TileGeom g = TileGeom::udg();
  const PointSet ps = sample_poisson(window_for_tiles(14, g.side), 3.0, 3);
  const Construction c = construct_subnet(ps, {g, 1.0, 0});
  const LatticeWindow lw = couple_lattice(c.tiles);
  CHECK(lw.w == 14);
  CHECK(lw.h == 14);
  CHECK(lw.source == LatticeSource::Coupled);
  int good = 0, open = 0;
  for (int j = 0; j < 14; ++j)
    for (int i = 0; i < 14; ++i) {
      const TileStatus& ts = c.tiles.at({lw.origin.i + i, lw.origin.j + j});
      if (ts.good) ++good;
      if (lw.is_open(i, j)) ++open;
      CHECK(lw.is_open(i, j) == ts.good);
    }
  CHECK(good == open);

  const CouplingCheck check = verify_coupling(c, lw);
  CHECK(check.ok);
  CHECK(check.detail.empty());
}

TEST_CASE("coupling verification flags a tampered lattice") {
  const TileGeom g = TileGeom::udg();
  const PointSet ps = sample_poisson(window_for_tiles(10, g.side), 3.0, 6);
  const Construction c = construct_subnet(ps, {g, 1.0, 0});
  LatticeWindow lw = couple_lattice(c.tiles);
  bool flipped = false;
  for (char& site : lw.open) {
    if (site == 0) {
      site = 1;
      flipped = true;
      break;
    }
  }
  REQUIRE(flipped);
  const CouplingCheck check = verify_coupling(c, lw);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.detail.empty());
}

TEST_CASE("bitmap output is plain PBM with the top row last written first") {
  const LatticeWindow lw = lattice_from(3, 2,
                                        "#.#"
                                        "##.");
  const char* path = "lattice_check.pbm";
  write_pbm(lw, path);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  // Row j = 1 comes first; open sites are 1 (black).
  CHECK(buf.str() == "P1\n3 2\n1 1 0\n1 0 1\n");
  std::remove(path);
}
