#include "convexpart/triangulation.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "convexpart/errors.hpp"

namespace convexpart {
namespace {

Triangle ccw_triangle(const PointSet& points, PointId a, PointId b, PointId c) {
  if (cross(points[a], points[b], points[c]) < 0) std::swap(b, c);
  return {a, b, c};
}

std::uint64_t key(PointId from, PointId to) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) | static_cast<std::uint32_t>(to);
}

// Triangle soup with a directed-edge index: each CCW triangle owns its three
// directed edges.
class Mesh {
 public:
  Mesh(const PointSet& points, std::vector<Triangle> tris) : points_(points), tris_(std::move(tris)) {
    alive_.assign(tris_.size(), true);
    for (std::size_t t = 0; t < tris_.size(); ++t) index(t);
  }

  bool has_edge(PointId u, PointId v) const { return owner_.count(key(u, v)) || owner_.count(key(v, u)); }

  void insert(PointId a, PointId b) {
    if (has_edge(a, b)) return;
    const Point& pa = points_[a];
    const Point& pb = points_[b];

    // Triangle at a whose interior angle contains the direction to b.
    std::size_t start = tris_.size();
    PointId r = -1, l = -1;
    for (std::size_t t = 0; t < tris_.size() && start == tris_.size(); ++t) {
      if (!alive_[t]) continue;
      const Triangle& tri = tris_[t];
      for (int k = 0; k < 3; ++k) {
        if (tri[k] != a) continue;
        const PointId v1 = tri[(k + 1) % 3], v2 = tri[(k + 2) % 3];
        if (cross(pa, points_[v1], pb) > 0 && cross(pa, points_[v2], pb) < 0) {
          start = t;
          r = v1;
          l = v2;
        }
      }
    }
    if (start == tris_.size()) throw ConstructionFailed("constraint does not start inside the triangulation");

    std::vector<PointId> right{a, r}, left{a, l};
    remove(start);
    for (;;) {
      auto it = owner_.find(key(l, r));
      if (it == owner_.end()) throw ConstructionFailed("constraint leaves the triangulation");
      const std::size_t t = it->second;
      const Triangle& tri = tris_[t];
      PointId w = tri[0];
      for (PointId v : tri) {
        if (v != l && v != r) w = v;
      }
      remove(t);
      if (w == b) break;
      const Wide side = cross(pa, pb, points_[w]);
      if (side > 0) {
        left.push_back(w);
        l = w;
      } else if (side < 0) {
        right.push_back(w);
        r = w;
      } else {
        throw ConstructionFailed("constraint passes through a vertex");
      }
    }
    right.push_back(b);
    left.push_back(b);

    std::vector<PointId> lower(right.begin(), right.end());
    std::vector<PointId> upper{a, b};
    upper.insert(upper.end(), left.rbegin() + 1, left.rend() - 1);
    clip(lower);
    clip(upper);
  }

  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      if (alive_[t]) out.push_back(tris_[t]);
    }
    return out;
  }

 private:
  void index(std::size_t t) {
    const Triangle& tri = tris_[t];
    for (int k = 0; k < 3; ++k) owner_[key(tri[k], tri[(k + 1) % 3])] = t;
  }

  void remove(std::size_t t) {
    alive_[t] = false;
    const Triangle& tri = tris_[t];
    for (int k = 0; k < 3; ++k) owner_.erase(key(tri[k], tri[(k + 1) % 3]));
  }

  void add(PointId a, PointId b, PointId c) {
    tris_.push_back({a, b, c});
    alive_.push_back(true);
    index(tris_.size() - 1);
  }

  // Ear clipping of a simple CCW polygon; ears must be strictly convex and
  // contain no other polygon vertex, even on their boundary.
  void clip(std::vector<PointId> poly) {
    while (poly.size() > 3) {
      const std::size_t m = poly.size();
      bool clipped = false;
      for (std::size_t i = 0; i < m && !clipped; ++i) {
        const PointId p = poly[(i + m - 1) % m], c = poly[i], q = poly[(i + 1) % m];
        const Point &pp = points_[p], &pc = points_[c], &pq = points_[q];
        if (cross(pp, pc, pq) <= 0) continue;
        bool empty = true;
        for (PointId v : poly) {
          if (v == p || v == c || v == q) continue;
          const Point& pv = points_[v];
          if (cross(pp, pc, pv) >= 0 && cross(pc, pq, pv) >= 0 && cross(pq, pp, pv) >= 0) {
            empty = false;
            break;
          }
        }
        if (!empty) continue;
        add(p, c, q);
        poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
        clipped = true;
      }
      if (!clipped) throw ConstructionFailed("no ear found while re-triangulating around a constraint");
    }
    if (cross(points_[poly[0]], points_[poly[1]], points_[poly[2]]) <= 0) {
      throw ConstructionFailed("degenerate final ear");
    }
    add(poly[0], poly[1], poly[2]);
  }

  const PointSet& points_;
  std::vector<Triangle> tris_;
  std::vector<bool> alive_;
  std::unordered_map<std::uint64_t, std::size_t> owner_;
};

}  // namespace

std::vector<Triangle> triangulate(const PointSet& points, std::span<const PointId> ids) {
  std::vector<PointId> s(ids.begin(), ids.end());
  std::sort(s.begin(), s.end(), [&](PointId a, PointId b) { return lex_less(points[a], points[b]); });
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const std::size_t m = s.size();
  if (m < 3) return {};

  std::size_t j = 2;
  while (j < m && cross(points[s[0]], points[s[1]], points[s[j]]) == 0) ++j;
  if (j == m) return {};

  std::vector<Triangle> out;
  out.reserve(2 * m);
  std::unordered_map<PointId, PointId> next, prev;
  auto link = [&](PointId u, PointId v) {
    next[u] = v;
    prev[v] = u;
  };

  const PointId p = s[j];
  for (std::size_t i = 0; i + 1 < j; ++i) out.push_back(ccw_triangle(points, s[i], s[i + 1], p));
  if (cross(points[s[0]], points[s[j - 1]], points[p]) > 0) {
    for (std::size_t i = 0; i + 1 < j; ++i) link(s[i], s[i + 1]);
    link(s[j - 1], p);
    link(p, s[0]);
  } else {
    link(s[0], p);
    link(p, s[j - 1]);
    for (std::size_t i = j - 1; i > 0; --i) link(s[i], s[i - 1]);
  }

  auto visible = [&](PointId u, PointId q) { return cross(points[u], points[next[u]], points[q]) < 0; };

  PointId last = p;
  for (std::size_t k = j + 1; k < m; ++k) {
    const PointId q = s[k];
    PointId v0 = -1;
    if (visible(last, q)) {
      v0 = last;
    } else if (visible(prev[last], q)) {
      v0 = prev[last];
    } else {
      PointId u = last;
      do {
        if (visible(u, q)) {
          v0 = u;
          break;
        }
        u = next[u];
      } while (u != last);
    }
    if (v0 < 0) throw ConstructionFailed("sweep found no visible hull edge");

    PointId right = v0;
    while (visible(right, q)) {
      out.push_back({right, q, next[right]});
      right = next[right];
    }
    PointId left = v0;
    while (cross(points[prev[left]], points[left], points[q]) < 0) {
      out.push_back({prev[left], q, left});
      left = prev[left];
    }
    link(left, q);
    link(q, right);
    last = q;
  }
  return out;
}

std::vector<Triangle> constrained_triangulation(const PointSet& points, std::span<const PointId> ids,
                                                std::span<const Edge> constraints) {
  std::vector<PointId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end(), [&](PointId a, PointId b) { return lex_less(points[a], points[b]); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Mesh mesh(points, triangulate(points, sorted));
  for (const Edge& c : constraints) {
    if (c.u == c.v) continue;
    const Point& pu = points[c.u];
    const Point& pv = points[c.v];
    std::vector<PointId> chain{c.u};
    const Coord lo = std::min(pu.x, pv.x), hi = std::max(pu.x, pv.x);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), lo,
                               [&](PointId id, Coord x) { return points[id].x < x; });
    for (; it != sorted.end() && points[*it].x <= hi; ++it) {
      if (in_open_segment(points[*it], pu, pv)) chain.push_back(*it);
    }
    std::sort(chain.begin() + 1, chain.end(),
              [&](PointId a, PointId b) { return dot(pu, points[a], pv) < dot(pu, points[b], pv); });
    chain.push_back(c.v);
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) mesh.insert(chain[i], chain[i + 1]);
  }
  return mesh.triangles();
}

std::vector<Edge> triangle_edges(std::span<const Triangle> triangles) {
  std::vector<Edge> edges;
  edges.reserve(triangles.size() * 3);
  for (const Triangle& t : triangles) {
    for (int k = 0; k < 3; ++k) edges.push_back(Edge::make(t[k], t[(k + 1) % 3]));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace convexpart
