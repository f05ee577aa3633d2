#include "sensnet/subnet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "sensnet/spatial_index.hpp"

namespace sensnet {
namespace {

constexpr std::size_t kAnomalyLogCap = 64;

void log_anomaly(Construction& c, std::string msg) {
  if (c.anomaly_log.size() < kAnomalyLogCap) c.anomaly_log.push_back(std::move(msg));
}

std::string tile_str(TileId t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + ")";
}

// Smallest id in `pool` not present in `taken`; pool is sorted ascending.
std::optional<int> pick_excluding(const std::vector<int>& pool, const std::vector<int>& taken) {
  for (int id : pool) {
    if (std::find(taken.begin(), taken.end(), id) == taken.end()) return id;
  }
  return std::nullopt;
}

// Adjacency oracle over the base connectivity model. The k-nearest variant
// resolves and caches each queried point's neighbour list on demand.
class BaseOracle {
 public:
  BaseOracle(const PointSet& ps, const ConstructParams& params) : params_(params) {
    if (params.geom.kind == TileGeom::Kind::KNearest) {
      const double density =
          static_cast<double>(ps.n()) / std::max(ps.window.padded_area(), 1e-12);
      double cell =
          0.5 * std::sqrt(static_cast<double>(params.k) / std::max(density, 1e-12));
      if (!std::isfinite(cell) || cell <= 0.0) cell = 1.0;
      idx_ = build_index(ps, cell);
    } else {
      pos_ = &ps.points;
    }
  }

  bool adjacent(int u, int v) const {
    if (u == v) return false;
    if (params_.geom.kind == TileGeom::Kind::UnitDisk) {
      return dist2((*pos_)[static_cast<std::size_t>(u)], (*pos_)[static_cast<std::size_t>(v)]) <=
             params_.radius * params_.radius;
    }
    return in_knn(u, v) || in_knn(v, u);
  }

 private:
  bool in_knn(int u, int v) const {
    const auto& l = list(u);
    return std::binary_search(l.begin(), l.end(), v);
  }

  const std::vector<int>& list(int u) const {
    auto it = cache_.find(u);
    if (it == cache_.end()) {
      auto l = nearest_k(idx_, idx_.points[static_cast<std::size_t>(u)], params_.k, u);
      std::sort(l.begin(), l.end());
      it = cache_.emplace(u, std::move(l)).first;
    }
    return it->second;
  }

  ConstructParams params_;
  SpatialIndex idx_;
  const std::vector<Point>* pos_ = nullptr;
  mutable std::unordered_map<int, std::vector<int>> cache_;
};

void validate_params(const ConstructParams& params) {
  if (params.geom.kind == TileGeom::Kind::UnitDisk) {
    if (!(params.radius > 0.0) || !std::isfinite(params.radius))
      throw std::invalid_argument("construct_subnet: radius must be positive and finite");
  } else if (params.k < 1) {
    throw std::invalid_argument("construct_subnet: k must be at least 1");
  }
}

struct WiredLink {
  int u, v;
  TileId tu, tv;  // tiles demoted if the link fails verification
};

// Links implied by the staffing of one good tile, not counting cross links.
std::vector<WiredLink> intra_links(const TileGeom& geom, const TileStatus& ts) {
  std::vector<WiredLink> out;
  for (Dir d : kDirs) {
    const auto di = static_cast<std::size_t>(d);
    out.push_back({*ts.rep, *ts.e_relay[di], ts.tile, ts.tile});
    if (geom.kind == TileGeom::Kind::KNearest)
      out.push_back({*ts.e_relay[di], *ts.c_relay[di], ts.tile, ts.tile});
  }
  return out;
}

int cross_slot(const TileGeom& geom, const TileStatus& ts, Dir d) {
  const auto di = static_cast<std::size_t>(d);
  return geom.kind == TileGeom::Kind::UnitDisk ? *ts.e_relay[di] : *ts.c_relay[di];
}

}  // namespace

TileStatus& TileGrid::at(TileId t) {
  if (!in_range(t)) throw std::out_of_range("TileGrid::at: tile outside grid");
  return cells[static_cast<std::size_t>((t.j - origin.j) * w + (t.i - origin.i))];
}

const TileStatus& TileGrid::at(TileId t) const {
  if (!in_range(t)) throw std::out_of_range("TileGrid::at: tile outside grid");
  return cells[static_cast<std::size_t>((t.j - origin.j) * w + (t.i - origin.i))];
}

TileGrid grid_for_window(const TileGeom& g, const Window& w) {
  validate(w);
  const double s = g.side;
  const double tol = 1e-9;
  const auto lo = [&](double v) { return static_cast<long long>(std::ceil((v + s / 2.0) / s - tol)); };
  const auto hi = [&](double v) { return static_cast<long long>(std::floor((v - s / 2.0) / s + tol)); };
  TileGrid grid;
  const long long i0 = lo(w.x_min), i1 = hi(w.x_max);
  const long long j0 = lo(w.y_min), j1 = hi(w.y_max);
  if (i1 < i0 || j1 < j0) return grid;
  grid.origin = {i0, j0};
  grid.w = static_cast<int>(i1 - i0 + 1);
  grid.h = static_cast<int>(j1 - j0 + 1);
  grid.cells.resize(static_cast<std::size_t>(grid.w) * static_cast<std::size_t>(grid.h));
  for (long long j = j0; j <= j1; ++j)
    for (long long i = i0; i <= i1; ++i)
      grid.cells[static_cast<std::size_t>((j - j0) * grid.w + (i - i0))].tile = {i, j};
  return grid;
}

TileStatus classify_tile(const TileGeom& g, TileId t, std::vector<Candidate> members, int k) {
  TileStatus ts;
  ts.tile = t;
  std::sort(members.begin(), members.end(),
            [](const Candidate& a, const Candidate& b) { return a.id < b.id; });
  ts.point_count = static_cast<int>(members.size());

  const bool capped = g.kind == TileGeom::Kind::KNearest && 2 * ts.point_count > k;
  if (!capped) {
    for (const Candidate& c : members) {
      if (tile_of(g, c.pos) != t)
        throw std::logic_error("classify_tile: candidate lies outside the tile");
      const RegionSet s = region_of(g, t, c.pos);
      for (int r = 0; r < kRegionCount; ++r) {
        if (region_in(s, static_cast<RegionLabel>(r)))
          ts.region_members[static_cast<std::size_t>(r)].push_back(c.id);
      }
    }
  }

  const int need = g.kind == TileGeom::Kind::UnitDisk ? 5 : kRegionCount;
  bool good = !capped;
  for (int r = 0; r < need && good; ++r) {
    if (ts.region_members[static_cast<std::size_t>(r)].empty()) good = false;
  }
  ts.good = good;
  return ts;
}

void staff_tile(const TileGeom& g, TileStatus& ts) {
  if (!ts.good) throw std::logic_error("staff_tile: tile is not good");

  if (g.kind == TileGeom::Kind::UnitDisk) {
    ts.rep = ts.members_of(RegionLabel::C0).front();
    for (Dir d : kDirs)
      ts.e_relay[static_cast<std::size_t>(d)] = ts.members_of(e_region(d)).front();
    return;
  }

  // A representative that is the sole occupant of some lens would leave that
  // lens without a relay, so such candidates are passed over.
  for (int r : ts.members_of(RegionLabel::C0)) {
    bool viable = true;
    for (Dir d : kDirs) {
      const auto& e = ts.members_of(e_region(d));
      if (e.size() == 1 && e.front() == r) viable = false;
    }
    if (viable) {
      ts.rep = r;
      break;
    }
  }

  std::vector<int> taken;
  if (ts.rep) taken.push_back(*ts.rep);
  bool ok = ts.rep.has_value();
  for (Dir d : kDirs) {
    if (!ok) break;
    auto pick = pick_excluding(ts.members_of(e_region(d)), taken);
    if (!pick) { ok = false; break; }
    ts.e_relay[static_cast<std::size_t>(d)] = *pick;
    taken.push_back(*pick);
  }
  for (Dir d : kDirs) {
    if (!ok) break;
    auto pick = pick_excluding(ts.members_of(c_region(d)), taken);
    if (!pick) { ok = false; break; }
    ts.c_relay[static_cast<std::size_t>(d)] = *pick;
    taken.push_back(*pick);
  }
  if (!ok) {
    ts.rep.reset();
    ts.e_relay = {};
    ts.c_relay = {};
    ts.understaffed = true;
    ts.good = false;
  }
}

Election elect_leader(const std::vector<int>& members,
                      const std::function<bool(int, int)>& adjacent) {
  if (members.empty()) throw std::invalid_argument("elect_leader: no members");
  Election e;
  e.leader = *std::min_element(members.begin(), members.end());
  e.clique = true;
  for (std::size_t i = 0; i < members.size() && e.clique; ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!adjacent(members[i], members[j])) {
        e.clique = false;
        break;
      }
    }
  }
  return e;
}

int SubnetGraph::index_of(int base_id) const {
  auto it = std::lower_bound(members.begin(), members.end(), base_id);
  if (it == members.end() || *it != base_id) return -1;
  return static_cast<int>(it - members.begin());
}

bool SubnetGraph::has_edge(int u_base, int v_base) const {
  const int ui = index_of(u_base);
  if (ui < 0) return false;
  const auto& a = adj[static_cast<std::size_t>(ui)];
  return std::binary_search(a.begin(), a.end(), v_base);
}

long long SubnetGraph::edge_count() const {
  long long total = 0;
  for (const auto& a : adj) total += static_cast<long long>(a.size());
  return total / 2;
}

namespace {

// Shared final step: collect staffed nodes and verified links of the good
// tiles into the overlay graph.
SubnetGraph assemble(const TileGeom& geom, const PointSet& ps, const TileGrid& grid) {
  SubnetGraph sg;
  sg.geom = geom;

  std::map<int, Role> role_of;
  auto add_role = [&](int id, Role r) {
    auto [it, inserted] = role_of.emplace(id, r);
    if (!inserted && it->second != r) it->second = Role::Both;
  };
  for (const TileStatus& ts : grid.cells) {
    if (!ts.good) continue;
    add_role(*ts.rep, Role::Representative);
    for (Dir d : kDirs) {
      const auto di = static_cast<std::size_t>(d);
      add_role(*ts.e_relay[di], Role::Relay);
      if (geom.kind == TileGeom::Kind::KNearest) add_role(*ts.c_relay[di], Role::Relay);
    }
  }

  std::unordered_map<int, std::set<int>> edges;
  auto add_edge = [&](int u, int v) {
    edges[u].insert(v);
    edges[v].insert(u);
  };
  for (const TileStatus& ts : grid.cells) {
    if (!ts.good) continue;
    for (const WiredLink& l : intra_links(geom, ts)) add_edge(l.u, l.v);
    for (Dir d : {Dir::Right, Dir::Top}) {
      const TileId td = neighbor(ts.tile, d);
      if (!grid.in_range(td)) continue;
      const TileStatus& other = grid.at(td);
      if (!other.good) continue;
      add_edge(cross_slot(geom, ts, d), cross_slot(geom, other, opposite(d)));
    }
  }

  sg.members.reserve(role_of.size());
  for (const auto& [id, role] : role_of) {
    sg.members.push_back(id);
    sg.roles.push_back(role);
    const Point p = ps.points[static_cast<std::size_t>(id)];
    const TileId home = tile_of(geom, p);
    sg.pos.push_back(p);
    sg.member_tile.push_back(home);
    sg.member_regions.push_back(region_of(geom, home, p));
    auto it = edges.find(id);
    if (it == edges.end()) {
      sg.adj.emplace_back();
    } else {
      sg.adj.emplace_back(it->second.begin(), it->second.end());
    }
  }
  return sg;
}

}  // namespace

Construction construct_subnet(const PointSet& ps, const ConstructParams& params) {
  validate_params(params);
  const TileGeom& geom = params.geom;

  Construction c;
  c.tiles = grid_for_window(geom, ps.window);

  std::vector<std::vector<Candidate>> bins(c.tiles.cells.size());
  for (int id = 0; id < ps.n(); ++id) {
    const Point p = ps.points[static_cast<std::size_t>(id)];
    const TileId t = tile_of(geom, p);
    if (!c.tiles.in_range(t)) continue;
    bins[static_cast<std::size_t>((t.j - c.tiles.origin.j) * c.tiles.w +
                                  (t.i - c.tiles.origin.i))]
        .push_back({id, p});
  }

  for (std::size_t i = 0; i < c.tiles.cells.size(); ++i) {
    const TileId t = c.tiles.cells[i].tile;
    c.tiles.cells[i] = classify_tile(geom, t, std::move(bins[i]), params.k);
    if (c.tiles.cells[i].good) {
      staff_tile(geom, c.tiles.cells[i]);
      if (c.tiles.cells[i].understaffed) {
        ++c.understaffed;
        c.tiles.cells[i].anomaly.clear();  // understaffing is expected, not anomalous
      }
    }
  }

  const BaseOracle oracle(ps, params);
  const auto adjacent = [&oracle](int u, int v) { return oracle.adjacent(u, v); };

  const int region_count = geom.kind == TileGeom::Kind::UnitDisk ? 5 : kRegionCount;
  for (const TileStatus& ts : c.tiles.cells) {
    if (!ts.good) continue;
    for (int r = 0; r < region_count; ++r) {
      const auto& members = ts.region_members[static_cast<std::size_t>(r)];
      if (members.empty()) continue;
      const Election e = elect_leader(members, adjacent);
      if (e.leader != members.front())
        throw std::logic_error("construct_subnet: election winner is not the smallest id");
      if (!e.clique) {
        ++c.elect_nonclique;
        log_anomaly(c, "tile " + tile_str(ts.tile) + " region " +
                           region_name(static_cast<RegionLabel>(r)) +
                           " is not a clique in the base graph");
      }
    }
  }

  // Verify every link against base connectivity, then demote the endpoints
  // of failed links in one sweep.
  std::set<std::pair<long long, long long>> demote;
  auto check = [&](const WiredLink& l) {
    if (adjacent(l.u, l.v)) return;
    ++c.wiring_failures;
    demote.insert({l.tu.i, l.tu.j});
    demote.insert({l.tv.i, l.tv.j});
    log_anomaly(c, "link " + std::to_string(l.u) + "-" + std::to_string(l.v) +
                       " between tiles " + tile_str(l.tu) + " and " + tile_str(l.tv) +
                       " is absent from the base graph");
  };
  for (const TileStatus& ts : c.tiles.cells) {
    if (!ts.good) continue;
    for (const WiredLink& l : intra_links(geom, ts)) check(l);
    for (Dir d : {Dir::Right, Dir::Top}) {
      const TileId td = neighbor(ts.tile, d);
      if (!c.tiles.in_range(td)) continue;
      const TileStatus& other = c.tiles.at(td);
      if (!other.good) continue;
      check({cross_slot(geom, ts, d), cross_slot(geom, other, opposite(d)), ts.tile, td});
    }
  }
  for (const auto& [i, j] : demote) {
    TileStatus& ts = c.tiles.at({i, j});
    ts.good = false;
    if (ts.anomaly.empty()) ts.anomaly = "demoted by link verification";
  }

  c.subnet = assemble(geom, ps, c.tiles);
  return c;
}

std::vector<int> largest_component(const SubnetGraph& sg) {
  const int n = static_cast<int>(sg.members.size());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<int> best;
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[static_cast<std::size_t>(s)] != -1) continue;
    std::vector<int> comp, stack{s};
    label[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v_base : sg.adj[static_cast<std::size_t>(u)]) {
        const int v = sg.index_of(v_base);
        if (v >= 0 && label[static_cast<std::size_t>(v)] == -1) {
          label[static_cast<std::size_t>(v)] = next;
          stack.push_back(v);
        }
      }
    }
    ++next;
    if (comp.size() > best.size()) best = std::move(comp);
  }
  std::sort(best.begin(), best.end());
  return best;
}

namespace {

// Node-local state for the message-round simulation.
struct NodeState {
  TileId tile{};
  std::vector<int> known;  // sorted same-tile ids discovered so far
  TileStatus decision;     // classification of the tile as this node sees it
  bool demote = false;
  RegionSet nonclique = 0;  // regions where this node saw a missing pair link
};

void merge_sorted(std::vector<int>& into, const std::vector<int>& from) {
  std::vector<int> out;
  out.reserve(into.size() + from.size());
  std::set_union(into.begin(), into.end(), from.begin(), from.end(), std::back_inserter(out));
  into.swap(out);
}

}  // namespace

Construction construct_subnet_distributed(const PointSet& ps, const ConstructParams& params,
                                          AuditStats* audit) {
  validate_params(params);
  const TileGeom& geom = params.geom;
  const int n = ps.n();

  const AdjGraph base = geom.kind == TileGeom::Kind::UnitDisk
                            ? build_udg(ps, params.radius)
                            : build_knn(ps, params.k);

  AuditStats st;
  const auto read = [&](int from, int to) {
    ++st.reads;
    if (from != to && !base.has_edge(from, to)) ++st.violations;
  };

  std::vector<NodeState> node(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    node[static_cast<std::size_t>(v)].tile =
        tile_of(geom, ps.points[static_cast<std::size_t>(v)]);
    node[static_cast<std::size_t>(v)].known = {v};
  }

  // Same-tile membership gossip until no view grows anywhere.
  bool changed = true;
  while (changed) {
    changed = false;
    ++st.rounds;
    std::vector<std::vector<int>> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& nv = next[static_cast<std::size_t>(v)];
      nv = node[static_cast<std::size_t>(v)].known;
      for (int u : base.adj[static_cast<std::size_t>(v)]) {
        read(v, u);
        if (node[static_cast<std::size_t>(u)].tile == node[static_cast<std::size_t>(v)].tile)
          merge_sorted(nv, node[static_cast<std::size_t>(u)].known);
      }
      if (nv.size() != node[static_cast<std::size_t>(v)].known.size()) changed = true;
    }
    for (int v = 0; v < n; ++v) node[static_cast<std::size_t>(v)].known.swap(next[static_cast<std::size_t>(v)]);
  }

  // Local classification, staffing, and link self-checks.
  ++st.rounds;
  for (int v = 0; v < n; ++v) {
    NodeState& s = node[static_cast<std::size_t>(v)];
    std::vector<Candidate> cand;
    cand.reserve(s.known.size());
    for (int id : s.known)
      cand.push_back({id, ps.points[static_cast<std::size_t>(id)]});
    s.decision = classify_tile(geom, s.tile, std::move(cand), params.k);
    if (s.decision.good) staff_tile(geom, s.decision);
    if (!s.decision.good) continue;

    for (int r = 0; r < kRegionCount; ++r) {
      const auto& members = s.decision.region_members[static_cast<std::size_t>(r)];
      if (!std::binary_search(members.begin(), members.end(), v)) continue;
      for (int b : members) {
        if (b != v && !base.has_edge(v, b))
          region_add(s.nonclique, static_cast<RegionLabel>(r));
      }
    }
    for (const WiredLink& l : intra_links(geom, s.decision)) {
      if (l.u != v && l.v != v) continue;
      const int other = l.u == v ? l.v : l.u;
      if (!base.has_edge(v, other)) s.demote = true;
    }
  }

  // Each outward relay scans its neighbours for the matching relay of the
  // adjacent tile; a known-but-unreachable counterpart means a broken link.
  ++st.rounds;
  std::set<std::pair<int, int>> found;  // directed (relay, counterpart)
  std::set<std::pair<int, int>> broken;
  for (int v = 0; v < n; ++v) {
    NodeState& s = node[static_cast<std::size_t>(v)];
    if (!s.decision.good) continue;
    for (Dir d : kDirs) {
      if (cross_slot(geom, s.decision, d) != v) continue;
      const TileId td = neighbor(s.tile, d);
      std::optional<int> counterpart;
      int informant = -1;
      for (int u : base.adj[static_cast<std::size_t>(v)]) {
        read(v, u);
        const NodeState& su = node[static_cast<std::size_t>(u)];
        if (su.tile != td || !su.decision.good) continue;
        if (informant == -1 || u < informant) {
          informant = u;
          counterpart = cross_slot(geom, su.decision, opposite(d));
        }
      }
      if (!counterpart) continue;
      if (base.has_edge(v, *counterpart)) {
        found.insert({v, *counterpart});
      } else {
        s.demote = true;
        broken.insert({std::min(v, *counterpart), std::max(v, *counterpart)});
      }
    }
  }

  // Demotion flags spread through each tile the same way membership did.
  changed = true;
  while (changed) {
    changed = false;
    ++st.rounds;
    std::vector<char> next(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) next[static_cast<std::size_t>(v)] = node[static_cast<std::size_t>(v)].demote;
    for (int v = 0; v < n; ++v) {
      if (next[static_cast<std::size_t>(v)]) continue;
      for (int u : base.adj[static_cast<std::size_t>(v)]) {
        read(v, u);
        if (node[static_cast<std::size_t>(u)].tile == node[static_cast<std::size_t>(v)].tile &&
            node[static_cast<std::size_t>(u)].demote) {
          next[static_cast<std::size_t>(v)] = 1;
          changed = true;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v) node[static_cast<std::size_t>(v)].demote = next[static_cast<std::size_t>(v)];
  }

  // Collect the per-tile consensus into the same result shape as the
  // centralized construction.
  Construction c;
  c.tiles = grid_for_window(geom, ps.window);

  std::vector<std::vector<int>> tile_points(c.tiles.cells.size());
  for (int v = 0; v < n; ++v) {
    const TileId t = node[static_cast<std::size_t>(v)].tile;
    if (c.tiles.in_range(t))
      tile_points[static_cast<std::size_t>((t.j - c.tiles.origin.j) * c.tiles.w +
                                           (t.i - c.tiles.origin.i))]
          .push_back(v);
  }

  for (std::size_t ci = 0; ci < c.tiles.cells.size(); ++ci) {
    TileStatus& out = c.tiles.cells[ci];
    const TileId t = out.tile;
    const auto& pts = tile_points[ci];

    // The nodes whose decisions count are those some region contains.
    std::vector<int> deciders;
    for (int v : pts) {
      const TileStatus& d = node[static_cast<std::size_t>(v)].decision;
      for (int r = 0; r < kRegionCount; ++r) {
        const auto& m = d.region_members[static_cast<std::size_t>(r)];
        if (std::binary_search(m.begin(), m.end(), v)) {
          deciders.push_back(v);
          break;
        }
      }
    }

    if (deciders.empty()) {
      std::vector<Candidate> cand;
      for (int v : pts) cand.push_back({v, ps.points[static_cast<std::size_t>(v)]});
      out = classify_tile(geom, t, std::move(cand), params.k);
      out.good = false;
      continue;
    }

    const NodeState& head = node[static_cast<std::size_t>(deciders.front())];
    out = head.decision;
    bool demoted = false;
    RegionSet nonclique = 0;
    bool diverged = head.decision.point_count != static_cast<int>(pts.size());
    for (int v : deciders) {
      const NodeState& s = node[static_cast<std::size_t>(v)];
      if (!(s.decision.good == head.decision.good && s.decision.rep == head.decision.rep &&
            s.decision.e_relay == head.decision.e_relay &&
            s.decision.c_relay == head.decision.c_relay)) {
        diverged = true;
        break;
      }
    }
    if (diverged) ++st.divergences;
    for (int v : deciders) {
      demoted = demoted || node[static_cast<std::size_t>(v)].demote;
      nonclique = static_cast<RegionSet>(nonclique | node[static_cast<std::size_t>(v)].nonclique);
    }
    if (out.understaffed) ++c.understaffed;
    if (out.good) {
      for (int r = 0; r < kRegionCount; ++r) {
        if ((nonclique >> r) & 1u) {
          ++c.elect_nonclique;
          log_anomaly(c, "tile " + tile_str(t) + " region " +
                             region_name(static_cast<RegionLabel>(r)) +
                             " is not a clique in the base graph");
        }
      }
    }
    if (demoted && out.good) {
      out.good = false;
      out.anomaly = "demoted by link verification";
    }
  }

  c.wiring_failures = static_cast<int>(broken.size());
  for (const auto& [u, v] : broken)
    log_anomaly(c, "link " + std::to_string(u) + "-" + std::to_string(v) +
                       " is absent from the base graph");

  // Cross links require both relays to have located each other.
  c.subnet = assemble(geom, ps, c.tiles);
  for (std::size_t ui = 0; ui < c.subnet.members.size(); ++ui) {
    const int u = c.subnet.members[ui];
    auto& a = c.subnet.adj[ui];
    a.erase(std::remove_if(a.begin(), a.end(),
                           [&](int v) {
                             if (node[static_cast<std::size_t>(u)].tile ==
                                 node[static_cast<std::size_t>(v)].tile)
                               return false;
                             return found.count({u, v}) == 0 || found.count({v, u}) == 0;
                           }),
            a.end());
  }

  if (audit) *audit = st;
  return c;
}

}  // namespace sensnet
