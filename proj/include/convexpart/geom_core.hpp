#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace convexpart {

using Coord = std::int64_t;
// All predicate intermediates are evaluated in 128 bits. With |coord| <= 2^61
// every difference fits in 63 bits and every 2x2 determinant in 126 bits.
using Wide = __int128;
using PointId = int;

inline constexpr Coord kMaxAbsCoord = Coord{1} << 61;

struct Point {
  Coord x = 0;
  Coord y = 0;
  PointId id = -1;
};

inline bool same_position(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

// Lexicographic (x, y) order.
inline bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Immutable planar point set with ids 0..n-1. Construction rejects duplicate
/// positions and coordinates outside [-2^61, 2^61].
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(const std::vector<std::pair<Coord, Coord>>& coords);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](PointId id) const { return points_[static_cast<std::size_t>(id)]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  std::vector<PointId> all_ids() const;
  std::vector<std::pair<Coord, Coord>> coords() const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.coords() == b.coords(); }

 private:
  std::vector<Point> points_;
};

enum class Orientation { CW = -1, Collinear = 0, CCW = 1 };

std::ostream& operator<<(std::ostream& os, Orientation o);

// (q - p) x (r - p), exact.
inline Wide cross(const Point& p, const Point& q, const Point& r) {
  const Wide ux = Wide{q.x} - p.x, uy = Wide{q.y} - p.y;
  const Wide vx = Wide{r.x} - p.x, vy = Wide{r.y} - p.y;
  return ux * vy - uy * vx;
}

// (q - p) . (r - p), exact.
inline Wide dot(const Point& p, const Point& q, const Point& r) {
  const Wide ux = Wide{q.x} - p.x, uy = Wide{q.y} - p.y;
  const Wide vx = Wide{r.x} - p.x, vy = Wide{r.y} - p.y;
  return ux * vx + uy * vy;
}

inline int sign(Wide v) { return (v > 0) - (v < 0); }

inline Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(sign(cross(p, q, r)));
}

// p lies on the closed segment [a, b] (a == b allowed).
bool on_closed_segment(const Point& p, const Point& a, const Point& b);
// p lies on the open segment (a, b); always false when a == b.
bool in_open_segment(const Point& p, const Point& a, const Point& b);

bool all_collinear(const PointSet& points);
bool all_collinear(const PointSet& points, std::span<const PointId> ids);

/// Strictly convex hull vertices of the given ids, counterclockwise, starting
/// at the lexicographically smallest point. Collinear boundary points are
/// dropped. Returns 1 or 2 ids for degenerate input.
std::vector<PointId> strict_hull(const PointSet& points, std::span<const PointId> ids);

struct HullDecomposition {
  std::vector<PointId> extreme;              // CCW strict hull vertices
  std::vector<PointId> boundary_nonextreme;  // on a hull edge, not a vertex
  std::vector<PointId> inner;                // strictly inside the hull
  std::vector<PointId> ring;                 // all boundary points in CCW order
};

HullDecomposition hull_decomposition(const PointSet& points);
HullDecomposition hull_decomposition(const PointSet& points, std::span<const PointId> ids);

// Strictly inside the convex polygon given by CCW vertices (at least 3).
bool strictly_inside_convex(const PointSet& points, std::span<const PointId> ccw_polygon,
                            const Point& p);

// w lies in the open wedge at p bounded by the supporting lines (prev, p) and
// (p, next) of a CCW convex chain, on the side away from the chain.
inline bool in_open_wedge(const Point& prev, const Point& p, const Point& next, const Point& w) {
  return cross(prev, p, w) < 0 && cross(p, next, w) < 0;
}
// Closed version; also accepts w on either bounding ray beyond p.
inline bool in_closed_wedge(const Point& prev, const Point& p, const Point& next, const Point& w) {
  return !same_position(p, w) && cross(prev, p, w) <= 0 && cross(p, next, w) <= 0;
}

/// Type (a) when the closed wedge at an extreme inner point holds a hull-ring
/// point, type (b) otherwise. A ring point on a bounding ray lets a single
/// edge continue an inner hull edge straight, so it counts as occupying the
/// wedge.
struct InnerClassification {
  std::vector<PointId> extreme_inner;  // CCW strict hull vertices of the inner points
  std::vector<PointId> type_a;
  std::vector<PointId> type_b;
  std::size_t a = 0;
  std::size_t b = 0;
  bool is_special = true;
};

InnerClassification classify_inner(const PointSet& points, const HullDecomposition& hull);

// Exact positive-denominator rational with 64-bit parts, used for
// reported ratios only.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational make(std::int64_t num, std::int64_t den);
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

std::string to_string(Wide v);
// Parses an optionally signed decimal integer into a 128-bit value.
bool parse_wide(const std::string& text, Wide& out);

}  // namespace convexpart
