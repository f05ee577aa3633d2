#include "sensnet/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <random>
#include <stdexcept>

#include "sensnet/rng.hpp"

namespace sensnet {

LatticeWindow couple_lattice(const TileGrid& grid) {
  LatticeWindow lw;
  lw.w = grid.w;
  lw.h = grid.h;
  lw.origin = grid.origin;
  lw.source = LatticeSource::Coupled;
  lw.open.resize(grid.cells.size());
  for (std::size_t i = 0; i < grid.cells.size(); ++i) lw.open[i] = grid.cells[i].good ? 1 : 0;
  return lw;
}

LatticeWindow sample_site_lattice(int w, int h, double p, std::uint64_t seed) {
  if (w < 1 || h < 1) throw std::invalid_argument("sample_site_lattice: empty window");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("sample_site_lattice: p must lie in [0, 1]");
  LatticeWindow lw;
  lw.w = w;
  lw.h = h;
  lw.open.resize(static_cast<std::size_t>(w) * static_cast<std::size_t>(h));
  std::mt19937_64 eng = make_engine(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& site : lw.open) site = u(eng) < p ? 1 : 0;
  return lw;
}

ClusterStats label_clusters(const LatticeWindow& lw) {
  ClusterStats cs;
  const std::size_t total = lw.open.size();
  cs.label.assign(total, -1);
  std::vector<char> touch_left, touch_right;
  std::vector<std::pair<int, int>> stack;
  int next = 0;
  for (int j = 0; j < lw.h; ++j) {
    for (int i = 0; i < lw.w; ++i) {
      const std::size_t s0 = static_cast<std::size_t>(j) * lw.w + static_cast<std::size_t>(i);
      if (!lw.open[s0] || cs.label[s0] != -1) continue;
      const int lbl = next++;
      cs.sizes.push_back(0);
      touch_left.push_back(0);
      touch_right.push_back(0);
      cs.label[s0] = lbl;
      stack.push_back({i, j});
      while (!stack.empty()) {
        const auto [ci, cj] = stack.back();
        stack.pop_back();
        ++cs.sizes[static_cast<std::size_t>(lbl)];
        if (ci == 0) touch_left[static_cast<std::size_t>(lbl)] = 1;
        if (ci == lw.w - 1) touch_right[static_cast<std::size_t>(lbl)] = 1;
        const int di[4] = {-1, 0, 0, 1};
        const int dj[4] = {0, -1, 1, 0};
        for (int d = 0; d < 4; ++d) {
          const int ni = ci + di[d], nj = cj + dj[d];
          if (!lw.is_open(ni, nj)) continue;
          const std::size_t ns = static_cast<std::size_t>(nj) * lw.w + static_cast<std::size_t>(ni);
          if (cs.label[ns] == -1) {
            cs.label[ns] = lbl;
            stack.push_back({ni, nj});
          }
        }
      }
    }
  }
  for (int l = 0; l < next; ++l) {
    if (cs.sizes[static_cast<std::size_t>(l)] > cs.largest_size) {
      cs.largest_size = cs.sizes[static_cast<std::size_t>(l)];
      cs.largest_label = l;
    }
    if (touch_left[static_cast<std::size_t>(l)] && touch_right[static_cast<std::size_t>(l)])
      cs.spanning = true;
  }
  if (total > 0) cs.theta_hat = static_cast<double>(cs.largest_size) / static_cast<double>(total);
  return cs;
}

ChemDist chemical_distance(const LatticeWindow& lw, int i0, int j0, int i1, int j1) {
  if (!lw.is_open(i0, j0) || !lw.is_open(i1, j1))
    throw std::invalid_argument("chemical_distance: endpoints must be open sites");
  ChemDist out;
  out.l1 = std::llabs(static_cast<long long>(i0) - i1) + std::llabs(static_cast<long long>(j0) - j1);
  std::vector<long long> hops(lw.open.size(), -1);
  std::queue<std::pair<int, int>> q;
  hops[static_cast<std::size_t>(j0) * lw.w + static_cast<std::size_t>(i0)] = 0;
  q.push({i0, j0});
  while (!q.empty()) {
    const auto [ci, cj] = q.front();
    q.pop();
    const long long hc = hops[static_cast<std::size_t>(cj) * lw.w + static_cast<std::size_t>(ci)];
    if (ci == i1 && cj == j1) {
      out.hops = hc;
      return out;
    }
    const int di[4] = {-1, 0, 0, 1};
    const int dj[4] = {0, -1, 1, 0};
    for (int d = 0; d < 4; ++d) {
      const int ni = ci + di[d], nj = cj + dj[d];
      if (!lw.is_open(ni, nj)) continue;
      auto& hn = hops[static_cast<std::size_t>(nj) * lw.w + static_cast<std::size_t>(ni)];
      if (hn == -1) {
        hn = hc + 1;
        q.push({ni, nj});
      }
    }
  }
  return out;
}

void write_pbm(const LatticeWindow& lw, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_pbm: cannot open " + path);
  out << "P1\n" << lw.w << ' ' << lw.h << '\n';
  for (int j = lw.h - 1; j >= 0; --j) {
    for (int i = 0; i < lw.w; ++i) {
      if (i) out << ' ';
      out << (lw.is_open(i, j) ? '1' : '0');
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_pbm: write failed for " + path);
}

namespace {

std::string site_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CouplingCheck verify_coupling(const Construction& c, const LatticeWindow& lw) {
  CouplingCheck out;
  const TileGrid& grid = c.tiles;
  if (lw.source != LatticeSource::Coupled || lw.w != grid.w || lw.h != grid.h ||
      !(lw.origin == grid.origin)) {
    return {false, "lattice window does not describe this construction's grid"};
  }

  for (int j = 0; j < lw.h; ++j) {
    for (int i = 0; i < lw.w; ++i) {
      const TileStatus& ts = grid.cells[static_cast<std::size_t>(j) * grid.w + i];
      if (ts.good != lw.is_open(i, j))
        return {false, "site " + site_str(i, j) + " open flag disagrees with tile goodness"};
    }
  }

  const TileGeom& geom = c.subnet.geom;
  const auto cross_of = [&](const TileStatus& ts, Dir d) {
    return geom.kind == TileGeom::Kind::UnitDisk
               ? *ts.e_relay[static_cast<std::size_t>(d)]
               : *ts.c_relay[static_cast<std::size_t>(d)];
  };
  for (int j = 0; j < lw.h; ++j) {
    for (int i = 0; i < lw.w; ++i) {
      if (!lw.is_open(i, j)) continue;
      const TileStatus& ts = grid.cells[static_cast<std::size_t>(j) * grid.w + i];
      const struct { Dir d; int ni, nj; } steps[2] = {{Dir::Right, i + 1, j}, {Dir::Top, i, j + 1}};
      for (const auto& s : steps) {
        if (!lw.is_open(s.ni, s.nj)) continue;
        const TileStatus& other = grid.cells[static_cast<std::size_t>(s.nj) * grid.w + s.ni];
        if (!c.subnet.has_edge(cross_of(ts, s.d), cross_of(other, opposite(s.d))))
          return {false, "open sites " + site_str(i, j) + " and " + site_str(s.ni, s.nj) +
                             " lack the corresponding overlay link"};
      }
    }
  }

  // Cluster labels and overlay component labels must induce the same
  // partition over good tiles.
  const ClusterStats cs = label_clusters(lw);
  std::vector<int> comp(c.subnet.members.size(), -1);
  {
    int next = 0;
    for (std::size_t s = 0; s < c.subnet.members.size(); ++s) {
      if (comp[s] != -1) continue;
      std::vector<int> stack{static_cast<int>(s)};
      comp[s] = next;
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int vb : c.subnet.adj[static_cast<std::size_t>(u)]) {
          const int v = c.subnet.index_of(vb);
          if (v >= 0 && comp[static_cast<std::size_t>(v)] == -1) {
            comp[static_cast<std::size_t>(v)] = next;
            stack.push_back(v);
          }
        }
      }
      ++next;
    }
  }
  std::map<int, int> cluster_to_comp, comp_to_cluster;
  for (int j = 0; j < lw.h; ++j) {
    for (int i = 0; i < lw.w; ++i) {
      if (!lw.is_open(i, j)) continue;
      const TileStatus& ts = grid.cells[static_cast<std::size_t>(j) * grid.w + i];
      const int cl = cs.label[static_cast<std::size_t>(j) * lw.w + i];
      const int cp = comp[static_cast<std::size_t>(c.subnet.index_of(*ts.rep))];
      auto [it1, fresh1] = cluster_to_comp.emplace(cl, cp);
      if (!fresh1 && it1->second != cp)
        return {false, "cluster " + std::to_string(cl) + " maps to two overlay components"};
      auto [it2, fresh2] = comp_to_cluster.emplace(cp, cl);
      if (!fresh2 && it2->second != cl)
        return {false, "overlay component " + std::to_string(cp) + " maps to two clusters"};
    }
  }
  return out;
}

}  // namespace sensnet
