#include "sensnet/tiling.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sensnet {
namespace {

Point dir_vec(Dir d) {
  switch (d) {
    case Dir::Left: return {-1.0, 0.0};
    case Dir::Right: return {1.0, 0.0};
    case Dir::Top: return {0.0, 1.0};
    case Dir::Bottom: return {0.0, -1.0};
  }
  throw std::logic_error("dir_vec: bad direction");
}

struct Rect {
  double x0, y0, x1, y1;
};

// Bounding rectangle of tile t together with its d-neighbour.
Rect pair_rect(const TileGeom& g, TileId t, Dir d) {
  const Point c = g.center(t);
  const Point cd = g.center(neighbor(t, d));
  const double h = g.side / 2.0;
  return {std::min(c.x, cd.x) - h, std::min(c.y, cd.y) - h,
          std::max(c.x, cd.x) + h, std::max(c.y, cd.y) + h};
}

double rect_inscribed(const Rect& r, Point y) {
  const double m = std::min(std::min(y.x - r.x0, r.x1 - y.x),
                            std::min(y.y - r.y0, r.y1 - y.y));
  return m > 0.0 ? m : 0.0;
}

// Unit-circle sample table with a visiting stride coprime to its length, so
// early exits tend to hit a violating sample after few probes.
struct CircleTable {
  std::vector<double> cs;
  std::vector<double> sn;
  int stride = 1;
};

const CircleTable& circle_table(int n) {
  thread_local std::unordered_map<int, CircleTable> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  CircleTable t;
  t.cs.resize(static_cast<std::size_t>(n));
  t.sn.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double th = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
    t.cs[static_cast<std::size_t>(i)] = std::cos(th);
    t.sn[static_cast<std::size_t>(i)] = std::sin(th);
  }
  t.stride = 389 % n;
  if (t.stride == 0) t.stride = 1;
  while (std::gcd(t.stride, n) != 1) ++t.stride;
  return cache.emplace(n, std::move(t)).first->second;
}

// Every maximal disk centred on the circle of radius `rad` about `b` must
// cover p, with a small slack so acceptance is stable under resampling.
bool covered_by_all(const Rect& rect, Point b, double rad, Point p, int n, double eps) {
  const CircleTable& tab = circle_table(n);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    const Point y{b.x + rad * tab.cs[static_cast<std::size_t>(k)],
                  b.y + rad * tab.sn[static_cast<std::size_t>(k)]};
    const double rmax = rect_inscribed(rect, y) - eps;
    if (rmax <= 0.0 || dist2(p, y) > rmax * rmax) return false;
    k += tab.stride;
    if (k >= n) k -= n;
  }
  return true;
}

}  // namespace

TileId neighbor(TileId t, Dir d) {
  switch (d) {
    case Dir::Left: return {t.i - 1, t.j};
    case Dir::Right: return {t.i + 1, t.j};
    case Dir::Top: return {t.i, t.j + 1};
    case Dir::Bottom: return {t.i, t.j - 1};
  }
  throw std::logic_error("neighbor: bad direction");
}

Dir opposite(Dir d) {
  switch (d) {
    case Dir::Left: return Dir::Right;
    case Dir::Right: return Dir::Left;
    case Dir::Top: return Dir::Bottom;
    case Dir::Bottom: return Dir::Top;
  }
  throw std::logic_error("opposite: bad direction");
}

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::Left: return "left";
    case Dir::Right: return "right";
    case Dir::Top: return "top";
    case Dir::Bottom: return "bottom";
  }
  throw std::logic_error("dir_name: bad direction");
}

const char* region_name(RegionLabel r) {
  switch (r) {
    case RegionLabel::C0: return "C0";
    case RegionLabel::EL: return "EL";
    case RegionLabel::ER: return "ER";
    case RegionLabel::ET: return "ET";
    case RegionLabel::EB: return "EB";
    case RegionLabel::CL: return "CL";
    case RegionLabel::CR: return "CR";
    case RegionLabel::CT: return "CT";
    case RegionLabel::CB: return "CB";
  }
  throw std::logic_error("region_name: bad label");
}

RegionLabel e_region(Dir d) { return static_cast<RegionLabel>(1 + static_cast<int>(d)); }
RegionLabel c_region(Dir d) { return static_cast<RegionLabel>(5 + static_cast<int>(d)); }

TileGeom TileGeom::udg(double rep_radius) {
  if (!(rep_radius > 0.0) || !(rep_radius < 0.5))
    throw std::invalid_argument("TileGeom::udg: rep_radius must lie in (0, 0.5)");
  TileGeom g;
  g.kind = Kind::UnitDisk;
  g.side = 4.0 / 3.0;
  g.rep_radius = rep_radius;
  return g;
}

TileGeom TileGeom::nn(double a, int lens_samples) {
  if (!(a > 0.0) || !std::isfinite(a))
    throw std::invalid_argument("TileGeom::nn: disk radius must be positive and finite");
  if (lens_samples < 8)
    throw std::invalid_argument("TileGeom::nn: lens_samples must be at least 8");
  TileGeom g;
  g.kind = Kind::KNearest;
  g.side = 10.0 * a;
  g.lens_samples = lens_samples;
  return g;
}

TileId tile_of(const TileGeom& g, Point p) {
  const double h = g.side / 2.0;
  return {static_cast<long long>(std::floor((p.x + h) / g.side)),
          static_cast<long long>(std::floor((p.y + h) / g.side))};
}

namespace {

void require_in_tile(const TileGeom& g, TileId t, Point p, const char* who) {
  const Point c = g.center(t);
  const double h = g.side / 2.0;
  if (std::abs(p.x - c.x) > h || std::abs(p.y - c.y) > h)
    throw std::invalid_argument(std::string(who) + ": point lies outside the tile");
}

}  // namespace

RegionSet udg_region_of(const TileGeom& g, TileId t, Point p) {
  require_in_tile(g, t, p, "udg_region_of");
  RegionSet s = 0;
  const Point c = g.center(t);
  const double d2c = dist2(p, c);
  const double r0 = g.rep_radius;
  if (d2c <= r0 * r0) {
    region_add(s, RegionLabel::C0);
    return s;
  }
  const double outer = 1.0 - r0;
  if (d2c > outer * outer) return s;
  const double h = g.side / 2.0;
  for (Dir d : kDirs) {
    const Point v = dir_vec(d);
    const Point mid{c.x + h * v.x, c.y + h * v.y};
    if (dist2(p, mid) <= 0.25) region_add(s, e_region(d));
  }
  return s;
}

double inscribed_radius(const TileGeom& g, TileId t, Dir d, Point y) {
  const Rect r = pair_rect(g, t, d);
  if (y.x < r.x0 || y.x > r.x1 || y.y < r.y0 || y.y > r.y1) {
    std::fprintf(stderr, "inscribed_radius: centre (%g, %g) lies outside the tile pair\n", y.x,
                 y.y);
    return 0.0;
  }
  return rect_inscribed(r, y);
}

bool nn_lens_contains(const TileGeom& g, TileId t, Dir d, Point p) {
  const double a = g.a();
  const Point c = g.center(t);
  const Point v = dir_vec(d);
  const Point cd{c.x + 4.0 * a * v.x, c.y + 4.0 * a * v.y};

  // Two cheap necessary conditions taken from extreme disk centres.
  const Point back{c.x - a * v.x, c.y - a * v.y};
  if (dist2(p, back) > 16.0 * a * a) return false;
  const Point front{cd.x + a * v.x, cd.y + a * v.y};
  if (dist2(p, front) > 25.0 * a * a) return false;

  const Rect rect = pair_rect(g, t, d);
  if (p.x < rect.x0 || p.x > rect.x1 || p.y < rect.y0 || p.y > rect.y1) return false;

  const double eps = 1e-9 * a;
  return covered_by_all(rect, c, a, p, g.lens_samples, eps) &&
         covered_by_all(rect, cd, a, p, g.lens_samples, eps);
}

RegionSet nn_region_of(const TileGeom& g, TileId t, Point p) {
  require_in_tile(g, t, p, "nn_region_of");
  RegionSet s = 0;
  const double a = g.a();
  const Point c = g.center(t);
  if (dist2(p, c) <= a * a) region_add(s, RegionLabel::C0);
  for (Dir d : kDirs) {
    const Point v = dir_vec(d);
    const Point cd{c.x + 4.0 * a * v.x, c.y + 4.0 * a * v.y};
    if (dist2(p, cd) <= a * a) region_add(s, c_region(d));
    if (nn_lens_contains(g, t, d, p)) region_add(s, e_region(d));
  }
  return s;
}

RegionSet region_of(const TileGeom& g, TileId t, Point p) {
  return g.kind == TileGeom::Kind::UnitDisk ? udg_region_of(g, t, p) : nn_region_of(g, t, p);
}

void region_raster_csv(const TileGeom& g, int n, const std::string& path) {
  if (n < 1) throw std::invalid_argument("region_raster_csv: n must be positive");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("region_raster_csv: cannot open " + path);
  const double h = g.side / 2.0;
  for (int row = n - 1; row >= 0; --row) {
    const double y = -h + (static_cast<double>(row) + 0.5) * g.side / n;
    for (int col = 0; col < n; ++col) {
      const double x = -h + (static_cast<double>(col) + 0.5) * g.side / n;
      const RegionSet s = region_of(g, {0, 0}, {x, y});
      if (col) out << ',';
      if (s == 0) {
        out << '-';
      } else {
        bool first = true;
        for (int r = 0; r < kRegionCount; ++r) {
          if (region_in(s, static_cast<RegionLabel>(r))) {
            if (!first) out << '+';
            out << region_name(static_cast<RegionLabel>(r));
            first = false;
          }
        }
      }
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("region_raster_csv: write failed for " + path);
}

}  // namespace sensnet
