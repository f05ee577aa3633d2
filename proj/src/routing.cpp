#include "sensnet/routing.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace sensnet {
namespace {

bool between(int v, int a, int b) { return v >= std::min(a, b) && v <= std::max(a, b); }

// The axis-ordered path from cur runs along cur's row to dst's column, then
// along that column.
bool on_path(Site cur, Site dst, Site v) {
  return (v.second == cur.second && between(v.first, cur.first, dst.first)) ||
         (v.first == dst.first && between(v.second, cur.second, dst.second));
}

constexpr int kDi[4] = {-1, 0, 0, 1};
constexpr int kDj[4] = {0, -1, 1, 0};

}  // namespace

Site compute_next(Site cur, Site dst) {
  if (cur.first != dst.first) return {cur.first + (dst.first > cur.first ? 1 : -1), cur.second};
  if (cur.second != dst.second)
    return {cur.first, cur.second + (dst.second > cur.second ? 1 : -1)};
  throw std::logic_error("compute_next: already at destination");
}

DetourResult dist_bfs(const LatticeWindow& lw, Site cur, Site dst, std::vector<char>* probed) {
  if (!lw.is_open(cur.first, cur.second))
    throw std::invalid_argument("dist_bfs: start site must be open");
  DetourResult out;
  std::vector<char> local;
  if (!probed) {
    local.assign(lw.open.size(), 0);
    probed = &local;
  } else if (probed->size() != lw.open.size()) {
    throw std::invalid_argument("dist_bfs: probe buffer size mismatch");
  }

  const auto sid = [&](int i, int j) {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(lw.w) +
           static_cast<std::size_t>(i);
  };
  std::vector<int> parent(lw.open.size(), -2);
  std::queue<Site> q;
  parent[sid(cur.first, cur.second)] = -1;
  q.push(cur);
  while (!q.empty()) {
    const Site v = q.front();
    q.pop();
    if (v != cur && on_path(cur, dst, v)) {
      out.found = true;
      out.site = v;
      std::vector<Site> rev{v};
      Site w = v;
      while (w != cur) {
        const int pi = parent[sid(w.first, w.second)];
        w = {pi % lw.w, pi / lw.w};
        rev.push_back(w);
      }
      out.path.assign(rev.rbegin(), rev.rend());
      return out;
    }
    for (int d = 0; d < 4; ++d) {
      const int ni = v.first + kDi[d];
      const int nj = v.second + kDj[d];
      if (!lw.in_range(ni, nj)) continue;
      auto& flag = (*probed)[sid(ni, nj)];
      if (!flag) {
        flag = 1;
        ++out.probes;
      }
      if (!lw.is_open(ni, nj)) continue;
      if (parent[sid(ni, nj)] == -2) {
        parent[sid(ni, nj)] = static_cast<int>(sid(v.first, v.second));
        q.push({ni, nj});
      }
    }
  }
  return out;
}

RouteTrace route(const LatticeWindow& lw, Site src, Site dst) {
  if (!lw.is_open(src.first, src.second) || !lw.is_open(dst.first, dst.second))
    throw std::invalid_argument("route: endpoints must be open sites");

  RouteTrace tr;
  tr.src = src;
  tr.dst = dst;
  tr.sites.push_back(src);

  std::vector<char> probed(lw.open.size(), 0);
  const auto probe = [&](Site s) {
    auto& flag = probed[static_cast<std::size_t>(s.second) * lw.w + static_cast<std::size_t>(s.first)];
    if (!flag) {
      flag = 1;
      ++tr.probes;
    }
  };

  Site cur = src;
  while (cur != dst) {
    const Site nxt = compute_next(cur, dst);
    probe(nxt);
    if (lw.is_open(nxt.first, nxt.second)) {
      cur = nxt;
      tr.sites.push_back(cur);
      continue;
    }
    ++tr.bfs_invocations;
    DetourResult det = dist_bfs(lw, cur, dst, &probed);
    tr.probes += det.probes;
    if (!det.found) {
      tr.outcome = RouteOutcome::Unreachable;
      tr.lattice_hops = static_cast<long long>(tr.sites.size()) - 1;
      return tr;
    }
    tr.sites.insert(tr.sites.end(), det.path.begin() + 1, det.path.end());
    cur = det.site;
  }
  tr.outcome = RouteOutcome::Delivered;
  tr.lattice_hops = static_cast<long long>(tr.sites.size()) - 1;
  return tr;
}

std::vector<int> expand_route(const Construction& c, const LatticeWindow& lw,
                              const RouteTrace& trace) {
  if (lw.source != LatticeSource::Coupled || lw.w != c.tiles.w || lw.h != c.tiles.h ||
      !(lw.origin == c.tiles.origin))
    throw std::invalid_argument("expand_route: lattice is not the coupling of this construction");
  if (trace.sites.empty()) throw std::invalid_argument("expand_route: empty trace");

  const TileGeom& geom = c.subnet.geom;
  const auto status_at = [&](Site s) -> const TileStatus& {
    return c.tiles.at({lw.origin.i + s.first, lw.origin.j + s.second});
  };
  const auto slot = [&](const TileStatus& ts, Dir d, bool outward) -> std::vector<int> {
    const auto di = static_cast<std::size_t>(d);
    if (geom.kind == TileGeom::Kind::UnitDisk) return {*ts.e_relay[di]};
    return outward ? std::vector<int>{*ts.e_relay[di], *ts.c_relay[di]}
                   : std::vector<int>{*ts.c_relay[di], *ts.e_relay[di]};
  };

  std::vector<int> nodes{*status_at(trace.sites.front()).rep};
  for (std::size_t s = 0; s + 1 < trace.sites.size(); ++s) {
    const Site a = trace.sites[s];
    const Site b = trace.sites[s + 1];
    const int di = b.first - a.first, dj = b.second - a.second;
    Dir d;
    if (di == 1 && dj == 0) d = Dir::Right;
    else if (di == -1 && dj == 0) d = Dir::Left;
    else if (di == 0 && dj == 1) d = Dir::Top;
    else if (di == 0 && dj == -1) d = Dir::Bottom;
    else throw std::invalid_argument("expand_route: trace sites are not unit steps");

    for (int id : slot(status_at(a), d, true)) nodes.push_back(id);
    for (int id : slot(status_at(b), opposite(d), false)) nodes.push_back(id);
    nodes.push_back(*status_at(b).rep);
  }

  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (!c.subnet.has_edge(nodes[i], nodes[i + 1]))
      throw std::logic_error("expand_route: consecutive nodes are not linked in the overlay");
  }
  return nodes;
}

}  // namespace sensnet
