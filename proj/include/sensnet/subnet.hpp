#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sensnet/graph.hpp"
#include "sensnet/point_set.hpp"
#include "sensnet/tiling.hpp"

namespace sensnet {

enum class Role { Representative, Relay, Both };

struct Candidate {
  int id = -1;
  Point pos{};
};

// Per-tile outcome of classification and staffing. Region member lists hold
// base point ids sorted ascending. Slot arrays are indexed by Dir.
struct TileStatus {
  TileId tile{};
  bool good = false;
  int point_count = 0;
  std::array<std::vector<int>, kRegionCount> region_members{};
  std::optional<int> rep;
  std::array<std::optional<int>, 4> e_relay{};
  std::array<std::optional<int>, 4> c_relay{};
  bool understaffed = false;
  std::string anomaly;  // empty when none

  const std::vector<int>& members_of(RegionLabel r) const {
    return region_members[static_cast<std::size_t>(static_cast<int>(r))];
  }
};

struct TileGrid {
  TileId origin{};  // grid cell (0,0) is this tile
  int w = 0;
  int h = 0;
  std::vector<TileStatus> cells;  // row-major, j-major over rows

  bool in_range(TileId t) const {
    return t.i >= origin.i && t.i < origin.i + w && t.j >= origin.j && t.j < origin.j + h;
  }
  TileStatus& at(TileId t);
  const TileStatus& at(TileId t) const;
};

// Tiles whose square lies fully inside the unpadded window.
TileGrid grid_for_window(const TileGeom& g, const Window& w);

// Region membership and goodness from a tile's own points. The k cap applies
// to the k-nearest model only; pass 0 for the unit-disk model.
TileStatus classify_tile(const TileGeom& g, TileId t, std::vector<Candidate> members, int k);

// Picks the representative and relay slots by smallest id. In the k-nearest
// model slots must be pairwise distinct, the representative must leave every
// lens non-empty, and a tile that cannot satisfy this is demoted as
// understaffed. Requires a classified, good tile.
void staff_tile(const TileGeom& g, TileStatus& ts);

struct Election {
  int leader = -1;
  bool clique = false;
};

// Smallest id wins. Also reports whether the members are pairwise adjacent.
Election elect_leader(const std::vector<int>& members,
                      const std::function<bool(int, int)>& adjacent);

// The sparse overlay: staffed nodes of good tiles plus verified links.
// All vertex references are base point ids; parallel arrays are indexed by
// the position of the id in `members`.
struct SubnetGraph {
  TileGeom geom{};
  std::vector<int> members;  // sorted base ids
  std::vector<Role> roles;
  std::vector<Point> pos;
  std::vector<TileId> member_tile;
  std::vector<RegionSet> member_regions;
  std::vector<std::vector<int>> adj;  // base ids, sorted

  int index_of(int base_id) const;
  bool has_edge(int u_base, int v_base) const;
  long long edge_count() const;
  bool operator==(const SubnetGraph&) const = default;
};

struct ConstructParams {
  TileGeom geom{};
  double radius = 1.0;  // base connectivity radius, unit-disk model
  int k = 0;            // base neighbour count, k-nearest model
};

struct Construction {
  SubnetGraph subnet;
  TileGrid tiles;
  int understaffed = 0;
  int elect_nonclique = 0;
  int wiring_failures = 0;
  std::vector<std::string> anomaly_log;  // capped at 64 entries
};

// Classify every grid tile, staff the good ones, link staffed nodes within
// and across tiles, and verify each link against base connectivity. A failed
// link demotes the tiles on both ends; their nodes and links are dropped.
Construction construct_subnet(const PointSet& ps, const ConstructParams& params);

struct AuditStats {
  long long reads = 0;       // remote state reads performed
  long long violations = 0;  // reads of a non-neighbour's state
  int rounds = 0;
  int divergences = 0;  // tiles whose nodes disagreed at fixpoint
};

// Same result as construct_subnet for anomaly-free inputs, obtained by
// simulating message rounds in which every node reads only its own state and
// that of its base-graph neighbours. The audit records each remote read.
Construction construct_subnet_distributed(const PointSet& ps, const ConstructParams& params,
                                          AuditStats* audit = nullptr);

// Indices into subnet.members of a largest connected piece, sorted. Ties are
// broken toward the piece containing the smallest base id.
std::vector<int> largest_component(const SubnetGraph& sg);

}  // namespace sensnet
