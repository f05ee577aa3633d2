#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sensnet/subnet.hpp"

namespace sensnet {

enum class LatticeSource { Coupled, SampledIid };

// Finite window of a site lattice. Site (i, j) is stored row-major at
// j * w + i; when coupled, site (0, 0) corresponds to the origin tile.
struct LatticeWindow {
  int w = 0;
  int h = 0;
  TileId origin{};
  LatticeSource source = LatticeSource::SampledIid;
  std::vector<char> open;

  bool in_range(int i, int j) const { return i >= 0 && i < w && j >= 0 && j < h; }
  bool is_open(int i, int j) const {
    return in_range(i, j) && open[static_cast<std::size_t>(j) * static_cast<std::size_t>(w) +
                                  static_cast<std::size_t>(i)] != 0;
  }
};

// Site open exactly when the corresponding tile is good.
LatticeWindow couple_lattice(const TileGrid& grid);

// Each site open independently with probability p.
LatticeWindow sample_site_lattice(int w, int h, double p, std::uint64_t seed);

struct ClusterStats {
  std::vector<int> label;  // per site, -1 when closed
  std::vector<long long> sizes;
  int largest_label = -1;
  long long largest_size = 0;
  double theta_hat = 0.0;  // largest cluster size over total site count
  bool spanning = false;   // some cluster touches both the left and right columns
};

ClusterStats label_clusters(const LatticeWindow& lw);

struct ChemDist {
  std::optional<long long> hops;  // empty when the sites are not connected
  long long l1 = 0;
};

// Fewest open-site steps between two open sites.
ChemDist chemical_distance(const LatticeWindow& lw, int i0, int j0, int i1, int j1);

// Plain PBM bitmap, open sites black, row j = h-1 on top.
void write_pbm(const LatticeWindow& lw, const std::string& path);

struct CouplingCheck {
  bool ok = true;
  std::string detail;
};

// Confirms that the lattice mirrors the construction: sites open exactly at
// good tiles, adjacent open sites have a direct link between their relay
// pairs, and lattice clusters match overlay components one for one.
CouplingCheck verify_coupling(const Construction& c, const LatticeWindow& lw);

}  // namespace sensnet
