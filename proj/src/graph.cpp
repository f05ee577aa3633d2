#include "sensnet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <queue>
#include <stdexcept>

#include "sensnet/spatial_index.hpp"

namespace sensnet {

bool AdjGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
  const auto& a = adj[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

long long AdjGraph::edge_count() const {
  long long total = 0;
  for (const auto& a : adj) total += static_cast<long long>(a.size());
  return total / 2;
}

AdjGraph build_udg(const PointSet& ps, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw std::invalid_argument("build_udg: radius must be positive and finite");
  AdjGraph g;
  g.n = ps.n();
  g.kind = EdgeKind::UnitDisk;
  g.radius = radius;
  g.pos = ps.points;
  g.adj.assign(static_cast<std::size_t>(g.n), {});
  if (g.n < 2) return g;

  const SpatialIndex idx = build_index(ps, radius);
  const double r2 = radius * radius;
  for (int u = 0; u < g.n; ++u) {
    const Point p = g.pos[static_cast<std::size_t>(u)];
    const long long ci = idx.cell_coord(p.x);
    const long long cj = idx.cell_coord(p.y);
    auto& a = g.adj[static_cast<std::size_t>(u)];
    for (long long di = -1; di <= 1; ++di) {
      for (long long dj = -1; dj <= 1; ++dj) {
        auto it = idx.buckets.find(SpatialIndex::key(ci + di, cj + dj));
        if (it == idx.buckets.end()) continue;
        for (int v : it->second) {
          if (v == u) continue;
          if (dist2(p, g.pos[static_cast<std::size_t>(v)]) <= r2) a.push_back(v);
        }
      }
    }
    std::sort(a.begin(), a.end());
  }
  return g;
}

AdjGraph build_knn(const PointSet& ps, int k) {
  if (k < 1) throw std::invalid_argument("build_knn: k must be at least 1");
  AdjGraph g;
  g.n = ps.n();
  g.kind = EdgeKind::KNearest;
  g.k = k;
  g.pos = ps.points;
  g.adj.assign(static_cast<std::size_t>(g.n), {});
  if (g.n < 2) {
    if (g.n == 1)
      std::cerr << "build_knn: single point has no neighbours, graph is edgeless\n";
    return g;
  }

  // Cell size tuned so a typical query resolves within a few rings.
  const double density =
      static_cast<double>(g.n) / std::max(ps.window.padded_area(), 1e-12);
  double cell = 0.5 * std::sqrt(static_cast<double>(k) / std::max(density, 1e-12));
  if (!std::isfinite(cell) || cell <= 0.0) cell = 1.0;
  const SpatialIndex idx = build_index(ps, cell);

  for (int u = 0; u < g.n; ++u) {
    const auto nbrs = nearest_k(idx, g.pos[static_cast<std::size_t>(u)], k, u);
    for (int v : nbrs) {
      g.adj[static_cast<std::size_t>(u)].push_back(v);
      g.adj[static_cast<std::size_t>(v)].push_back(u);
    }
  }
  for (auto& a : g.adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return g;
}

Components connected_components(const AdjGraph& g) {
  Components c;
  c.labels.assign(static_cast<std::size_t>(g.n), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (c.labels[static_cast<std::size_t>(s)] != -1) continue;
    const int label = next++;
    c.sizes.push_back(0);
    stack.push_back(s);
    c.labels[static_cast<std::size_t>(s)] = label;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++c.sizes[static_cast<std::size_t>(label)];
      for (int v : g.adj[static_cast<std::size_t>(u)]) {
        if (c.labels[static_cast<std::size_t>(v)] == -1) {
          c.labels[static_cast<std::size_t>(v)] = label;
          stack.push_back(v);
        }
      }
    }
  }
  for (int i = 0; i < next; ++i) {
    if (c.largest == -1 ||
        c.sizes[static_cast<std::size_t>(i)] > c.sizes[static_cast<std::size_t>(c.largest)])
      c.largest = i;
  }
  return c;
}

std::optional<double> graph_distance(const AdjGraph& g, int u, int v, bool weighted) {
  if (u < 0 || u >= g.n || v < 0 || v >= g.n)
    throw std::invalid_argument("graph_distance: vertex out of range");
  if (u == v) return 0.0;

  if (!weighted) {
    std::vector<int> dist(static_cast<std::size_t>(g.n), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      if (x == v) return static_cast<double>(dist[static_cast<std::size_t>(x)]);
      for (int y : g.adj[static_cast<std::size_t>(x)]) {
        if (dist[static_cast<std::size_t>(y)] == -1) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
      }
    }
    return std::nullopt;
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best(static_cast<std::size_t>(g.n), kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  best[static_cast<std::size_t>(u)] = 0.0;
  pq.push({0.0, u});
  while (!pq.empty()) {
    const auto [d, x] = pq.top();
    pq.pop();
    if (d > best[static_cast<std::size_t>(x)]) continue;
    if (x == v) return d;
    for (int y : g.adj[static_cast<std::size_t>(x)]) {
      const double nd =
          d + dist(g.pos[static_cast<std::size_t>(x)], g.pos[static_cast<std::size_t>(y)]);
      if (nd < best[static_cast<std::size_t>(y)]) {
        best[static_cast<std::size_t>(y)] = nd;
        pq.push({nd, y});
      }
    }
  }
  return std::nullopt;
}

void write_edge_list(const AdjGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_edge_list: cannot open " + path);
  for (int u = 0; u < g.n; ++u) {
    for (int v : g.adj[static_cast<std::size_t>(u)]) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
  if (!out) throw std::runtime_error("write_edge_list: write failed for " + path);
}

}  // namespace sensnet
