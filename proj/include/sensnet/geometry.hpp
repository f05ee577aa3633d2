#pragma once

#include <cmath>
#include <stdexcept>

namespace sensnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

inline double dist2(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(Point a, Point b) { return std::sqrt(dist2(a, b)); }

// Axis-aligned analysis region plus a sampling margin. Points are generated
// over the padded rectangle; tiles are only analysed when they fit in the
// unpadded one, so every analysed tile sees complete neighborhood data.
struct Window {
  double x_min = 0.0, y_min = 0.0, x_max = 0.0, y_max = 0.0;
  double margin = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  double px_min() const { return x_min - margin; }
  double py_min() const { return y_min - margin; }
  double px_max() const { return x_max + margin; }
  double py_max() const { return y_max + margin; }
  double padded_area() const { return (px_max() - px_min()) * (py_max() - py_min()); }

  // Half-open on the max edges, matching the tile convention.
  bool contains(Point p) const {
    return p.x >= x_min && p.x < x_max && p.y >= y_min && p.y < y_max;
  }
  bool padded_contains(Point p) const {
    return p.x >= px_min() && p.x < px_max() && p.y >= py_min() && p.y < py_max();
  }
  bool operator==(const Window&) const = default;
};

inline void validate(const Window& w) {
  if (!(w.x_max > w.x_min) || !(w.y_max > w.y_min))
    throw std::invalid_argument("window: max must exceed min on both axes");
  if (w.margin < 0.0 || !std::isfinite(w.margin))
    throw std::invalid_argument("window: margin must be finite and non-negative");
  if (!std::isfinite(w.x_min) || !std::isfinite(w.x_max) ||
      !std::isfinite(w.y_min) || !std::isfinite(w.y_max))
    throw std::invalid_argument("window: bounds must be finite");
}

// Window whose analysed tiles are exactly (i, j) for 0 <= i, j < tiles, for a
// tile lattice of the given side centred on the origin.
inline Window window_for_tiles(int tiles, double side, double margin_tiles = 2.0) {
  if (tiles <= 0) throw std::invalid_argument("window_for_tiles: tiles must be positive");
  if (!(side > 0.0)) throw std::invalid_argument("window_for_tiles: side must be positive");
  Window w;
  w.x_min = w.y_min = -side / 2.0;
  w.x_max = w.y_max = tiles * side - side / 2.0;
  w.margin = margin_tiles * side;
  return w;
}

}  // namespace sensnet
