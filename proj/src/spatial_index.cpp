#include "sensnet/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace sensnet {

SpatialIndex build_index(const PointSet& ps, double cell_size) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size))
    throw std::invalid_argument("build_index: cell_size must be positive and finite");
  SpatialIndex idx;
  idx.cell_size = cell_size;
  idx.points = ps.points;
  for (int i = 0; i < ps.n(); ++i) {
    const Point p = ps.points[static_cast<std::size_t>(i)];
    idx.buckets[SpatialIndex::key(idx.cell_coord(p.x), idx.cell_coord(p.y))].push_back(i);
  }
  return idx;
}

std::vector<int> range_query(const SpatialIndex& idx, Point center, double r) {
  if (r < 0.0 || !std::isfinite(r))
    throw std::invalid_argument("range_query: radius must be finite and non-negative");
  std::vector<int> out;
  const double r2 = r * r;
  const long long ci0 = idx.cell_coord(center.x - r);
  const long long ci1 = idx.cell_coord(center.x + r);
  const long long cj0 = idx.cell_coord(center.y - r);
  const long long cj1 = idx.cell_coord(center.y + r);
  for (long long ci = ci0; ci <= ci1; ++ci) {
    for (long long cj = cj0; cj <= cj1; ++cj) {
      auto it = idx.buckets.find(SpatialIndex::key(ci, cj));
      if (it == idx.buckets.end()) continue;
      for (int id : it->second) {
        if (dist2(idx.points[static_cast<std::size_t>(id)], center) <= r2) out.push_back(id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> nearest_k(const SpatialIndex& idx, Point q, int k, std::optional<int> exclude) {
  if (k < 1) throw std::invalid_argument("nearest_k: k must be positive");
  std::vector<int> out;
  if (idx.points.empty()) return out;

  using Cand = std::pair<double, int>;  // (squared distance, id)
  std::priority_queue<Cand> heap;       // max-heap keeps the k best seen

  const long long qi = idx.cell_coord(q.x);
  const long long qj = idx.cell_coord(q.y);

  auto visit_cell = [&](long long ci, long long cj) {
    auto it = idx.buckets.find(SpatialIndex::key(ci, cj));
    if (it == idx.buckets.end()) return;
    for (int id : it->second) {
      if (exclude && id == *exclude) continue;
      const double d2 = dist2(idx.points[static_cast<std::size_t>(id)], q);
      Cand c{d2, id};
      if (static_cast<int>(heap.size()) < k) {
        heap.push(c);
      } else if (c < heap.top()) {
        heap.pop();
        heap.push(c);
      }
    }
  };

  // Expanding rings of cells. After finishing ring rho, any unseen point is
  // at least (rho * cell_size) away, so we stop once the kth best is
  // strictly closer than that bound.
  long long max_ring = 0;
  {
    // Enough rings to cover every bucket from the query cell.
    long long lo_i = qi, hi_i = qi, lo_j = qj, hi_j = qj;
    for (const auto& kv : idx.buckets) {
      const long long ci = static_cast<std::int32_t>(kv.first >> 32);
      const long long cj = static_cast<std::int32_t>(kv.first & 0xffffffffULL);
      lo_i = std::min(lo_i, ci);
      hi_i = std::max(hi_i, ci);
      lo_j = std::min(lo_j, cj);
      hi_j = std::max(hi_j, cj);
    }
    max_ring = std::max(std::max(qi - lo_i, hi_i - qi), std::max(qj - lo_j, hi_j - qj));
  }

  for (long long rho = 0; rho <= max_ring; ++rho) {
    if (rho == 0) {
      visit_cell(qi, qj);
    } else {
      for (long long ci = qi - rho; ci <= qi + rho; ++ci) {
        visit_cell(ci, qj - rho);
        visit_cell(ci, qj + rho);
      }
      for (long long cj = qj - rho + 1; cj <= qj + rho - 1; ++cj) {
        visit_cell(qi - rho, cj);
        visit_cell(qi + rho, cj);
      }
    }
    if (static_cast<int>(heap.size()) == k) {
      const double bound = static_cast<double>(rho) * idx.cell_size;
      if (heap.top().first < bound * bound) break;
    }
  }

  std::vector<Cand> best;
  best.reserve(heap.size());
  while (!heap.empty()) {
    best.push_back(heap.top());
    heap.pop();
  }
  std::sort(best.begin(), best.end());
  out.reserve(best.size());
  for (const auto& c : best) out.push_back(c.second);
  return out;
}

bool rect_has_point(const SpatialIndex& idx, double x0, double y0, double x1, double y1) {
  const long long ci0 = idx.cell_coord(x0);
  const long long ci1 = idx.cell_coord(x1);
  const long long cj0 = idx.cell_coord(y0);
  const long long cj1 = idx.cell_coord(y1);
  for (long long ci = ci0; ci <= ci1; ++ci) {
    for (long long cj = cj0; cj <= cj1; ++cj) {
      auto it = idx.buckets.find(SpatialIndex::key(ci, cj));
      if (it == idx.buckets.end()) continue;
      for (int id : it->second) {
        const Point p = idx.points[static_cast<std::size_t>(id)];
        if (p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1) return true;
      }
    }
  }
  return false;
}

}  // namespace sensnet
