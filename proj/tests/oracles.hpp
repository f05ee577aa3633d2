#pragma once

// Slow reference implementations the fast code is checked against. Everything
// here favours obviousness over speed.

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "sensnet/geometry.hpp"
#include "sensnet/graph.hpp"
#include "sensnet/lattice.hpp"

namespace oracles {

using sensnet::Point;

inline std::vector<int> brute_range(const std::vector<Point>& pts, Point q, double r) {
  std::vector<int> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (sensnet::dist2(pts[i], q) <= r * r) out.push_back(static_cast<int>(i));
  return out;
}

inline std::vector<int> brute_nearest_k(const std::vector<Point>& pts, Point q, int k,
                                        std::optional<int> exclude) {
  std::vector<std::pair<double, int>> cand;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (exclude && static_cast<int>(i) == *exclude) continue;
    cand.push_back({sensnet::dist2(pts[i], q), static_cast<int>(i)});
  }
  std::sort(cand.begin(), cand.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < cand.size() && static_cast<int>(i) < k; ++i)
    out.push_back(cand[i].second);
  return out;
}

inline std::vector<std::vector<int>> brute_udg_adj(const std::vector<Point>& pts, double radius) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (sensnet::dist2(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)]) <=
          radius * radius) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
      }
  return adj;
}

inline std::vector<std::vector<int>> brute_knn_adj(const std::vector<Point>& pts, int k) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    const std::vector<int> near =
        brute_nearest_k(pts, pts[static_cast<std::size_t>(u)], k, u);
    for (int v : near) {
      adj[static_cast<std::size_t>(u)].push_back(v);
      adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& lst : adj) {
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
  }
  return adj;
}

inline std::vector<int> bfs_labels(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] >= 0) continue;
    std::queue<int> q;
    q.push(s);
    label[static_cast<std::size_t>(s)] = next;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (label[static_cast<std::size_t>(v)] < 0) {
          label[static_cast<std::size_t>(v)] = next;
          q.push(v);
        }
    }
    ++next;
  }
  return label;
}

// Quadratic single-source shortest paths, weighted by Euclidean edge length
// when requested.
inline std::vector<double> slow_dijkstra(const sensnet::AdjGraph& g, int src, bool weighted) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(static_cast<std::size_t>(g.n), inf);
  std::vector<char> done(static_cast<std::size_t>(g.n), 0);
  d[static_cast<std::size_t>(src)] = 0.0;
  for (int round = 0; round < g.n; ++round) {
    int u = -1;
    double best = inf;
    for (int i = 0; i < g.n; ++i)
      if (!done[static_cast<std::size_t>(i)] && d[static_cast<std::size_t>(i)] < best) {
        best = d[static_cast<std::size_t>(i)];
        u = i;
      }
    if (u < 0) break;
    done[static_cast<std::size_t>(u)] = 1;
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      const double w = weighted ? sensnet::dist(g.pos[static_cast<std::size_t>(u)],
                                                g.pos[static_cast<std::size_t>(v)])
                                : 1.0;
      d[static_cast<std::size_t>(v)] =
          std::min(d[static_cast<std::size_t>(v)], d[static_cast<std::size_t>(u)] + w);
    }
  }
  return d;
}

// Recursive-free flood fill over open sites, 4-neighbour connectivity.
inline std::vector<int> flood_labels(const sensnet::LatticeWindow& lw) {
  std::vector<int> label(static_cast<std::size_t>(lw.w) * static_cast<std::size_t>(lw.h), -1);
  const auto at = [&](int i, int j) -> int& {
    return label[static_cast<std::size_t>(j) * lw.w + i];
  };
  int next = 0;
  std::vector<std::pair<int, int>> stack;
  for (int j0 = 0; j0 < lw.h; ++j0) {
    for (int i0 = 0; i0 < lw.w; ++i0) {
      if (!lw.is_open(i0, j0) || at(i0, j0) >= 0) continue;
      stack.push_back({i0, j0});
      at(i0, j0) = next;
      while (!stack.empty()) {
        const auto [i, j] = stack.back();
        stack.pop_back();
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int s = 0; s < 4; ++s) {
          const int ni = i + di[s], nj = j + dj[s];
          if (lw.is_open(ni, nj) && at(ni, nj) < 0) {
            at(ni, nj) = next;
            stack.push_back({ni, nj});
          }
        }
      }
      ++next;
    }
  }
  return label;
}

// Fewest open steps between two open sites, plain queue BFS.
inline std::optional<long long> open_path_hops(const sensnet::LatticeWindow& lw, int i0, int j0,
                                               int i1, int j1) {
  if (!lw.is_open(i0, j0) || !lw.is_open(i1, j1)) return std::nullopt;
  std::vector<long long> d(static_cast<std::size_t>(lw.w) * static_cast<std::size_t>(lw.h), -1);
  const auto at = [&](int i, int j) -> long long& {
    return d[static_cast<std::size_t>(j) * lw.w + i];
  };
  std::queue<std::pair<int, int>> q;
  q.push({i0, j0});
  at(i0, j0) = 0;
  while (!q.empty()) {
    const auto [i, j] = q.front();
    q.pop();
    if (i == i1 && j == j1) return at(i, j);
    const int di[4] = {1, -1, 0, 0};
    const int dj[4] = {0, 0, 1, -1};
    for (int s = 0; s < 4; ++s) {
      const int ni = i + di[s], nj = j + dj[s];
      if (lw.is_open(ni, nj) && at(ni, nj) < 0) {
        at(ni, nj) = at(i, j) + 1;
        q.push({ni, nj});
      }
    }
  }
  return std::nullopt;
}

// Deterministic xorshift so fixtures do not depend on library distributions.
struct MixRng {
  unsigned long long s;
  explicit MixRng(unsigned long long seed) : s(seed ^ 0x9e3779b97f4a7c15ULL) {}
  unsigned long long next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int pick(int n) { return static_cast<int>(next() % static_cast<unsigned long long>(n)); }
};

}  // namespace oracles
