#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "convexpart/geom_core.hpp"

namespace convexpart {

/// Line a*x + b*y = c in canonical form: gcd(a, b, c) = 1, and a > 0 or
/// (a == 0 and b > 0). `covered` lists the incident target points in order
/// along the line direction (-b, a).
struct Line {
  Coord a = 0;
  Coord b = 0;
  Wide c = 0;
  std::vector<PointId> covered;

  bool contains(const Point& p) const { return Wide{a} * p.x + Wide{b} * p.y == c; }
  // Canonical key order, used for greedy tie-breaking.
  friend std::strong_ordering compare_key(const Line& l, const Line& r);
  friend bool same_line(const Line& l, const Line& r) { return l.a == r.a && l.b == r.b && l.c == r.c; }
};

// Canonical line through two distinct points.
Line line_through(const Point& p, const Point& q);
// Canonical line from raw coefficients; throws ValidationError on a = b = 0.
Line canonical_line(Wide a, Wide b, Wide c);
// Vertical line x = p.x.
Line vertical_line(const Point& p);

struct LineCover {
  std::vector<Line> lines;
  std::size_t ell() const { return lines.size(); }
  std::vector<PointId> covered_set() const;  // sorted, deduplicated
};

/// One canonical line per distinct line through >= 2 target points, each with
/// its full incidence list. Lines are returned sorted by canonical key.
std::vector<Line> enumerate_lines(const PointSet& points, std::span<const PointId> target);

/// Greedy set cover over the enumerated lines. Ties go to the smallest
/// canonical key; once no line covers two uncovered points, each leftover
/// point gets the vertical line through it.
LineCover greedy_line_cover(const PointSet& points, std::span<const PointId> target);

inline constexpr std::size_t kExactLineCoverGuard = 20;

/// Minimum line cover by branch and bound. Throws GuardExceeded above 20
/// target points; returns nullopt when `node_budget` is exhausted first.
std::optional<LineCover> exact_line_cover(const PointSet& points, std::span<const PointId> target,
                                          std::uint64_t node_budget = 50'000'000);

// Fills `covered` for an arbitrary line against the target.
void attach_incidences(Line& line, const PointSet& points, std::span<const PointId> target);

}  // namespace convexpart
