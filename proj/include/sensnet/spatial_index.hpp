#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sensnet/point_set.hpp"

namespace sensnet {

// Uniform grid over the point set. Cell membership is half-open: a point
// sitting exactly on a cell's max edge belongs to the next cell, which is
// what integer flooring of x/cell gives.
struct SpatialIndex {
  double cell_size = 1.0;
  std::vector<Point> points;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;

  static std::uint64_t key(long long ci, long long cj) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(ci)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(cj));
  }
  long long cell_coord(double v) const {
    return static_cast<long long>(std::floor(v / cell_size));
  }
};

SpatialIndex build_index(const PointSet& ps, double cell_size);

// Ids of all points within the closed ball of radius r, sorted ascending.
std::vector<int> range_query(const SpatialIndex& idx, Point center, double r);

// Ids of the k nearest points to q, ordered by ascending distance with ties
// broken by ascending id. Fewer than k points available returns them all;
// k below one is rejected.
std::vector<int> nearest_k(const SpatialIndex& idx, Point q, int k,
                           std::optional<int> exclude = std::nullopt);

// True when at least one indexed point lies in [x0,x1] x [y0,y1] (closed).
bool rect_has_point(const SpatialIndex& idx, double x0, double y0, double x1, double y1);

}  // namespace sensnet
