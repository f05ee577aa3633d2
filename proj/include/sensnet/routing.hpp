#pragma once

#include <utility>
#include <vector>

#include "sensnet/lattice.hpp"

namespace sensnet {

using Site = std::pair<int, int>;

enum class RouteOutcome { Delivered, Unreachable };

struct RouteTrace {
  Site src{};
  Site dst{};
  RouteOutcome outcome = RouteOutcome::Unreachable;
  std::vector<Site> sites;        // visited sites, src first; ends at dst when delivered
  long long lattice_hops = 0;     // sites.size() - 1
  long long probes = 0;           // distinct sites whose status was looked up
  long long bfs_invocations = 0;
  long long node_hops = 0;        // filled when the trace is expanded to overlay nodes
};

// One axis-ordered step toward dst: the column difference closes first, then
// the row difference.
Site compute_next(Site cur, Site dst);

struct DetourResult {
  bool found = false;
  Site site{};
  std::vector<Site> path;  // cur first, detour target last
  long long probes = 0;    // status lookups new to this call
};

// Breadth-first search over open sites from cur, stopping at the first
// dequeued site other than cur that lies on the axis-ordered path from cur
// to dst. Neighbour order is (-1,0), (0,-1), (0,+1), (+1,0). The optional
// flags buffer of size w*h deduplicates probe counting across calls.
DetourResult dist_bfs(const LatticeWindow& lw, Site cur, Site dst,
                      std::vector<char>* probed = nullptr);

// Greedy geographic routing with detours. Follows the axis-ordered path,
// calling dist_bfs around closed sites. Delivers exactly when src and dst
// share a cluster.
RouteTrace route(const LatticeWindow& lw, Site src, Site dst);

// Overlay node walk realizing a site trace: each lattice step becomes the
// relay chain between the two tiles' representatives. Every consecutive pair
// is checked to be an overlay link. The lattice must be the coupling of this
// construction.
std::vector<int> expand_route(const Construction& c, const LatticeWindow& lw,
                              const RouteTrace& trace);

}  // namespace sensnet
