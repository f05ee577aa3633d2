#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sensnet/geometry.hpp"

namespace sensnet {

struct TileId {
  long long i = 0;
  long long j = 0;
  auto operator<=>(const TileId&) const = default;
};

enum class Dir : int { Left = 0, Right = 1, Top = 2, Bottom = 3 };

inline constexpr std::array<Dir, 4> kDirs = {Dir::Left, Dir::Right, Dir::Top, Dir::Bottom};

TileId neighbor(TileId t, Dir d);
Dir opposite(Dir d);
const char* dir_name(Dir d);

// Region labels inside one tile. C0 is the hub region; EL..EB sit between the
// hub and each side; CL..CB exist only in the k-nearest model, near each side.
enum class RegionLabel : int {
  C0 = 0,
  EL = 1,
  ER = 2,
  ET = 3,
  EB = 4,
  CL = 5,
  CR = 6,
  CT = 7,
  CB = 8,
};
inline constexpr int kRegionCount = 9;

using RegionSet = std::uint16_t;  // bit r set means the point lies in region r

inline bool region_in(RegionSet s, RegionLabel r) {
  return (s >> static_cast<int>(r)) & 1u;
}
inline void region_add(RegionSet& s, RegionLabel r) {
  s = static_cast<RegionSet>(s | (1u << static_cast<int>(r)));
}

const char* region_name(RegionLabel r);
RegionLabel e_region(Dir d);
RegionLabel c_region(Dir d);

// Tile geometry for either model. Tiles are squares of the given side with
// tile (0,0) centred at the origin, so tile (i,j) is centred at
// (i*side, j*side).
struct TileGeom {
  enum class Kind { UnitDisk, KNearest } kind = Kind::UnitDisk;
  double side = 4.0 / 3.0;
  double rep_radius = 0.25;  // hub disk radius, unit-disk model
  int lens_samples = 720;    // boundary resolution for the k-nearest lens test

  double a() const { return side / 10.0; }  // disk radius, k-nearest model
  Point center(TileId t) const {
    return {static_cast<double>(t.i) * side, static_cast<double>(t.j) * side};
  }

  static TileGeom udg(double rep_radius = 0.25);
  static TileGeom nn(double a = 0.893, int lens_samples = 720);

  bool operator==(const TileGeom&) const = default;
};

TileId tile_of(const TileGeom& g, Point p);

// Region membership of p evaluated relative to tile t. p must lie in the
// closed square of t; a point on a shared edge may be evaluated against
// either adjacent tile. The hub region is disjoint from every other
// region; the remaining regions may overlap each other, hence the bitmask.
RegionSet udg_region_of(const TileGeom& g, TileId t, Point p);
RegionSet nn_region_of(const TileGeom& g, TileId t, Point p);
RegionSet region_of(const TileGeom& g, TileId t, Point p);

// Largest radius of a disk centred at y that stays inside the two-tile
// rectangle t union neighbor(t, d). Zero when y is outside the rectangle.
double inscribed_radius(const TileGeom& g, TileId t, Dir d, Point y);

// True when p is covered by every maximal disk of the two-tile rectangle
// whose centre lies in the hub region of t or of neighbor(t, d). Membership
// is decided by sampling disk centres on the region boundaries.
bool nn_lens_contains(const TileGeom& g, TileId t, Dir d, Point p);

// Raster of region labels for tile (0,0) on an n-by-n grid, written as CSV
// rows of region names ("-" for none, "+"-joined on overlap). Debug aid.
void region_raster_csv(const TileGeom& g, int n, const std::string& path);

}  // namespace sensnet
