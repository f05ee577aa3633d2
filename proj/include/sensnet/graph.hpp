#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sensnet/point_set.hpp"

namespace sensnet {

enum class EdgeKind { UnitDisk, KNearest };

// Undirected graph over the points of a PointSet. Vertex ids are point ids.
// Adjacency lists are kept sorted ascending and never contain self-loops.
struct AdjGraph {
  int n = 0;
  EdgeKind kind = EdgeKind::UnitDisk;
  double radius = 1.0;  // meaningful for UnitDisk
  int k = 0;            // meaningful for KNearest
  std::vector<Point> pos;
  std::vector<std::vector<int>> adj;

  bool has_edge(int u, int v) const;
  long long edge_count() const;
};

// Edge iff dist(u, v) <= radius, boundary included.
AdjGraph build_udg(const PointSet& ps, double radius = 1.0);

// Undirected union of directed k-nearest-neighbour links. Equidistant
// candidates are broken toward the smaller id.
AdjGraph build_knn(const PointSet& ps, int k);

struct Components {
  std::vector<int> labels;    // labels[v] = component id, first-occurrence order
  std::vector<int> sizes;     // sizes[c] = vertex count of component c
  int largest = -1;           // id of a largest component (smallest id on ties)
};

Components connected_components(const AdjGraph& g);

// Shortest-path distance between u and v, hop count by default or summed
// Euclidean edge lengths when weighted. Empty when no path exists.
std::optional<double> graph_distance(const AdjGraph& g, int u, int v, bool weighted = false);

// One "u v" line per edge with u < v, sorted, trailing newline.
void write_edge_list(const AdjGraph& g, const std::string& path);

}  // namespace sensnet
