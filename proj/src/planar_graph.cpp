#include "convexpart/planar_graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace convexpart {
namespace {

// Half-plane index used to order directions counterclockwise from +x.
int half(Coord dx, Coord dy) { return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1; }

bool angle_less(const Point& origin, const Point& a, const Point& b) {
  const int ha = half(a.x - origin.x, a.y - origin.y);
  const int hb = half(b.x - origin.x, b.y - origin.y);
  if (ha != hb) return ha < hb;
  return cross(origin, a, b) > 0;
}

}  // namespace

std::vector<Edge> normalize_edges(const PointSet& points, std::span<const Edge> edges) {
  std::vector<PointId> by_x = points.all_ids();
  std::sort(by_x.begin(), by_x.end(), [&](PointId a, PointId b) { return lex_less(points[a], points[b]); });

  std::vector<Edge> out;
  out.reserve(edges.size());
  std::vector<PointId> chain;
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    const Point& a = points[e.u];
    const Point& b = points[e.v];
    const Coord lo = std::min(a.x, b.x);
    const Coord hi = std::max(a.x, b.x);
    auto first = std::lower_bound(by_x.begin(), by_x.end(), lo,
                                  [&](PointId id, Coord x) { return points[id].x < x; });
    chain.clear();
    chain.push_back(e.u);
    for (auto it = first; it != by_x.end() && points[*it].x <= hi; ++it) {
      if (in_open_segment(points[*it], a, b)) chain.push_back(*it);
    }
    chain.push_back(e.v);
    if (chain.size() > 2) {
      std::sort(chain.begin() + 1, chain.end() - 1, [&](PointId p, PointId q) {
        return dot(a, points[p], points[p]) < dot(a, points[q], points[q]);
      });
    }
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) out.push_back(Edge::make(chain[i], chain[i + 1]));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Area twice_signed_area(const PointSet& points, std::span<const PointId> polygon) {
  Area sum = 0;
  if (polygon.size() < 3) return sum;
  const Point& o = points[polygon[0]];
  for (std::size_t i = 1; i + 1 < polygon.size(); ++i) {
    const Wide c = cross(o, points[polygon[i]], points[polygon[i + 1]]);
    // int256 has no __int128 constructor; split into two 64-bit halves.
    const bool negative = c < 0;
    const unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-c) : static_cast<unsigned __int128>(c);
    Area term = static_cast<std::uint64_t>(mag >> 64);
    term <<= 64;
    term += static_cast<std::uint64_t>(mag);
    sum += negative ? Area(-term) : term;
  }
  return sum;
}

std::vector<FaceCycle> extract_faces(const PointSet& points, std::span<const Edge> edges) {
  const std::size_t n = points.size();
  std::vector<std::vector<PointId>> around(n);
  for (const Edge& e : edges) {
    around[static_cast<std::size_t>(e.u)].push_back(e.v);
    around[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const Point& origin = points[static_cast<PointId>(v)];
    std::sort(around[v].begin(), around[v].end(),
              [&](PointId a, PointId b) { return angle_less(origin, points[a], points[b]); });
    offset[v + 1] = offset[v] + around[v].size();
  }

  // Half-edge h = offset[v] + k is v -> around[v][k].
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(offset[n] * 2);
  auto key = [](PointId from, PointId to) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) | static_cast<std::uint32_t>(to);
  };
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < around[v].size(); ++k) index[key(static_cast<PointId>(v), around[v][k])] = offset[v] + k;
  }

  std::vector<FaceCycle> faces;
  std::vector<char> used(offset[n], 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < around[v].size(); ++k) {
      std::size_t h = offset[v] + k;
      if (used[h]) continue;
      FaceCycle face;
      PointId from = static_cast<PointId>(v);
      std::size_t slot = k;
      while (!used[h]) {
        used[h] = 1;
        face.vertices.push_back(from);
        const PointId to = around[static_cast<std::size_t>(from)][slot];
        // Arriving at `to` from `from`: continue along the neighbour just
        // clockwise of `from` around `to`.
        const std::size_t twin = index[key(to, from)];
        const std::size_t deg = around[static_cast<std::size_t>(to)].size();
        const std::size_t twin_slot = twin - offset[static_cast<std::size_t>(to)];
        slot = (twin_slot + deg - 1) % deg;
        from = to;
        h = offset[static_cast<std::size_t>(from)] + slot;
      }
      face.twice_area = twice_signed_area(points, face.vertices);
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

std::vector<std::vector<PointId>> bounded_faces(const PointSet& points, std::span<const Edge> edges) {
  std::vector<std::vector<PointId>> out;
  for (auto& face : extract_faces(points, edges)) {
    if (face.twice_area > 0) out.push_back(std::move(face.vertices));
  }
  return out;
}

}  // namespace convexpart
