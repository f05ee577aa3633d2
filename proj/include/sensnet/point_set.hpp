#pragma once

#include <cstdint>
#include <vector>

#include "sensnet/geometry.hpp"

namespace sensnet {

// A sampled point pattern. Node ids are the vector indices, 0..n-1, in
// generation order.
struct PointSet {
  std::vector<Point> points;
  double lambda = 0.0;
  std::uint64_t seed = 0;
  Window window;

  int n() const { return static_cast<int>(points.size()); }
  bool operator==(const PointSet&) const = default;
};

// Homogeneous Poisson sample over the padded window: the point count is
// Poisson(lambda * padded area), locations are iid uniform. Deterministic in
// (window, lambda, seed).
PointSet sample_poisson(const Window& w, double lambda, std::uint64_t seed);

}  // namespace sensnet
