#include "convexpart/geom_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "convexpart/errors.hpp"

namespace convexpart {

PointSet::PointSet(const std::vector<std::pair<Coord, Coord>>& coords) {
  points_.reserve(coords.size());
  std::set<std::pair<Coord, Coord>> seen;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const auto [x, y] = coords[i];
    if (x > kMaxAbsCoord || x < -kMaxAbsCoord || y > kMaxAbsCoord || y < -kMaxAbsCoord) {
      throw ValidationError("point " + std::to_string(i) + " has a coordinate outside [-2^61, 2^61]");
    }
    if (!seen.insert({x, y}).second) {
      throw ValidationError("duplicate point (" + std::to_string(x) + ", " + std::to_string(y) +
                            ") at index " + std::to_string(i));
    }
    points_.push_back(Point{x, y, static_cast<PointId>(i)});
  }
}

std::vector<PointId> PointSet::all_ids() const {
  std::vector<PointId> ids(points_.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

std::vector<std::pair<Coord, Coord>> PointSet::coords() const {
  std::vector<std::pair<Coord, Coord>> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.emplace_back(p.x, p.y);
  return out;
}

std::ostream& operator<<(std::ostream& os, Orientation o) {
  switch (o) {
    case Orientation::CW: return os << "CW";
    case Orientation::CCW: return os << "CCW";
    case Orientation::Collinear: return os << "COLLINEAR";
  }
  return os;
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p) != 0) return false;
  if (same_position(a, b)) return same_position(p, a);
  return dot(p, a, b) <= 0;
}

bool in_open_segment(const Point& p, const Point& a, const Point& b) {
  if (same_position(a, b) || cross(a, b, p) != 0) return false;
  return dot(p, a, b) < 0;
}

bool all_collinear(const PointSet& points, std::span<const PointId> ids) {
  if (ids.size() <= 2) return true;
  const Point& a = points[ids[0]];
  const Point& b = points[ids[1]];
  for (std::size_t i = 2; i < ids.size(); ++i) {
    if (cross(a, b, points[ids[i]]) != 0) return false;
  }
  return true;
}

bool all_collinear(const PointSet& points) {
  const auto ids = points.all_ids();
  return all_collinear(points, ids);
}

std::vector<PointId> strict_hull(const PointSet& points, std::span<const PointId> ids) {
  std::vector<PointId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](PointId a, PointId b) { return lex_less(points[a], points[b]); });
  if (sorted.size() <= 2) return sorted;

  std::vector<PointId> hull(2 * sorted.size());
  std::size_t k = 0;
  for (PointId id : sorted) {
    while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[id]) <= 0) --k;
    hull[k++] = id;
  }
  for (std::size_t i = sorted.size() - 1, lower = k + 1; i-- > 0;) {
    const PointId id = sorted[i];
    while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[id]) <= 0) --k;
    hull[k++] = id;
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

HullDecomposition hull_decomposition(const PointSet& points, std::span<const PointId> ids) {
  HullDecomposition out;
  if (ids.empty()) return out;
  out.extreme = strict_hull(points, ids);
  std::vector<char> is_extreme(points.size(), 0);
  for (PointId id : out.extreme) is_extreme[static_cast<std::size_t>(id)] = 1;

  const std::size_t h = out.extreme.size();
  // Boundary points grouped per hull edge, so the ring can be emitted in order.
  std::vector<std::vector<PointId>> on_edge(h);
  for (PointId id : ids) {
    if (is_extreme[static_cast<std::size_t>(id)]) continue;
    const Point& p = points[id];
    bool boundary = false;
    if (h == 2) {
      // Degenerate hull: every point lies on the segment between the extremes.
      on_edge[0].push_back(id);
      boundary = true;
    } else {
      for (std::size_t e = 0; e < h; ++e) {
        const Point& a = points[out.extreme[e]];
        const Point& b = points[out.extreme[(e + 1) % h]];
        if (in_open_segment(p, a, b)) {
          on_edge[e].push_back(id);
          boundary = true;
          break;
        }
      }
    }
    (boundary ? out.boundary_nonextreme : out.inner).push_back(id);
  }

  for (std::size_t e = 0; e < h; ++e) {
    const Point& a = points[out.extreme[e]];
    out.ring.push_back(out.extreme[e]);
    auto& chain = on_edge[e];
    std::sort(chain.begin(), chain.end(), [&](PointId u, PointId v) {
      return dot(a, points[u], points[u]) < dot(a, points[v], points[v]);
    });
    out.ring.insert(out.ring.end(), chain.begin(), chain.end());
  }
  std::sort(out.boundary_nonextreme.begin(), out.boundary_nonextreme.end());
  std::sort(out.inner.begin(), out.inner.end());
  return out;
}

HullDecomposition hull_decomposition(const PointSet& points) {
  const auto ids = points.all_ids();
  return hull_decomposition(points, ids);
}

bool strictly_inside_convex(const PointSet& points, std::span<const PointId> ccw_polygon,
                            const Point& p) {
  const std::size_t m = ccw_polygon.size();
  if (m < 3) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (cross(points[ccw_polygon[i]], points[ccw_polygon[(i + 1) % m]], p) <= 0) return false;
  }
  return true;
}

InnerClassification classify_inner(const PointSet& points, const HullDecomposition& hull) {
  InnerClassification out;
  if (hull.inner.empty()) return out;
  out.extreme_inner = strict_hull(points, hull.inner);
  const std::size_t m = out.extreme_inner.size();
  if (m <= 2) return out;
  out.is_special = false;

  for (std::size_t j = 0; j < m; ++j) {
    const Point& prev = points[out.extreme_inner[(j + m - 1) % m]];
    const Point& p = points[out.extreme_inner[j]];
    const Point& next = points[out.extreme_inner[(j + 1) % m]];
    const bool wedge_occupied = std::any_of(hull.ring.begin(), hull.ring.end(), [&](PointId w) {
      return in_closed_wedge(prev, p, next, points[w]);
    });
    (wedge_occupied ? out.type_a : out.type_b).push_back(p.id);
  }
  out.a = out.type_a.size();
  out.b = out.type_b.size();
  return out;
}

Rational Rational::make(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return Rational{num / (g == 0 ? 1 : g), den / (g == 0 ? 1 : g)};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1
                                 : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

bool parse_wide(const std::string& text, Wide& out) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  constexpr unsigned __int128 kLimit = (static_cast<unsigned __int128>(1) << 126);
  unsigned __int128 value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
    value = value * 10 + static_cast<unsigned>(text[i] - '0');
    if (value > kLimit) return false;
  }
  out = negative ? -static_cast<Wide>(value) : static_cast<Wide>(value);
  return true;
}

}  // namespace convexpart
